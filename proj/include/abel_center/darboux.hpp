#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel_center/centers.hpp"
#include "abel_center/numeric.hpp"
#include "abel_center/yseries.hpp"

namespace abel_center {

struct DarbouxFactor {
  YSeries f;  ///< exact bivariate polynomial
  Rational exponent;
};

/// H = prod f_i^{lambda_i}.
struct DarbouxIntegral {
  std::vector<DarbouxFactor> factors;
};

/// omega = P dy - Q dx with P, Q exact bivariate polynomials. Orbits of the
/// vector field dx/dt = P, dy/dt = Q are its leaves.
struct Foliation {
  YSeries P;
  YSeries Q;
};

/// P^p = Q^q mod y^{n+1}, with P and Q polynomials of y-degree <= n.
struct TruncatedPair {
  YSeries P;
  YSeries Q;
  int p = 1;
  int q = 1;
  int n = 0;
};

/// eta_x P + eta_y Q with eta = sum_i lambda_i (prod_{j != i} f_j) df_i:
/// the coefficient of (prod f_i) dH/H wedge omega. Zero iff H is a first
/// integral. Throws InputError on an empty integral or a zero exponent.
YSeries first_integral_residual(const Foliation& fol, const DarbouxIntegral& H);
bool verify_first_integral(const Foliation& fol, const DarbouxIntegral& H);

/// P = R^q, Q = R^p, both truncated to y-degree n. Throws InvalidBase when the
/// y^0 coefficient of R is zero and InputError unless gcd(p, q) = 1, p, q >= 1.
TruncatedPair solve_pq(const YSeries& R, int p, int q, int n);

/// The n = 2 reduced foliation (r1 y + r2) dy + y (r3 y + r4) dx for
/// P = a0 + a1 y + a2 y^2, Q = b0 + b1 y + b2 y^2.
struct ClosedForms {
  Poly r1, r2, r3, r4;
  /// p a1' b2 - q b1' a2, which equals r4 when a2 and b2 are constant.
  Poly r4_constant_top;
};
ClosedForms closed_forms(const TruncatedPair& tp);

/// (p Q dP - q P dQ) / y^n as a foliation. Throws DivisibilityError when y^n
/// does not divide, and for n = 2 OracleMismatch when the result differs from
/// closed_forms.
Foliation reduce_foliation(const TruncatedPair& tp);

struct MasterSystem {
  int k = 1;
  Poly r;
  /// N^{2k-1} D^{-2k} with N, D quadratic in y.
  DarbouxIntegral H;
  TruncatedPair pair;
  Foliation reduced;
  /// reduced = scale * ((-y + r2) dy - y r4 dx), i.e. dx/dt = -y + r2, dy/dt = y r4.
  Rational scale;
  Poly r2;
  Poly r4;
  /// After y = -Y + r2: Y dY + (p Y + q) dx = 0.
  Poly lienard_p;
  Poly lienard_q;
  Foliation lienard;
  DarbouxIntegral lienard_integral;
  /// With z = 1/Y: dz/dx = p z^2 + q z^3, integral z^2 N~^{2k-1} D~^{-2k},
  /// factors scaled to z^0 coefficient 1.
  Foliation abel;
  DarbouxIntegral abel_integral;
};

/// The master family with parameter polynomial r. Every first integral is
/// checked exactly; a failure throws InvariantError.
MasterSystem generate_master(int k, const Poly& r);

/// Equation for the GGS fixture: dz/dx = p z^2 + q z^3 on [-1, 1], from k = 2, r = x.
AbelEquation ggs_equation();

struct EvenPartReport {
  /// Involution sigma = -x + ... with Q(sigma(x)) = Q(x), Q the primitive of q.
  std::vector<Rational> involution;
  /// First x-power where P(sigma) - P does not vanish; 0 if none up to order.
  int first_defect = 0;
  [[nodiscard]] bool morse_center() const { return first_defect == 0; }
};

/// Lienard x' = y, y' = -q - y p has a Morse center at 0 iff P o sigma = P,
/// equivalently the even X-coefficients of dP(x(X)) vanish. Checked up to
/// x^order. Needs q(0) = 0 != q'(0) and p(0) = 0, else InvalidEquation.
EvenPartReport even_part_check(const Poly& p, const Poly& q, int order);

/// H(x, y) with x fixed, when every factor with negative exponent is
/// constant there and exponents are integers; nullopt otherwise.
std::optional<YSeries> restrict_at(const DarbouxIntegral& H, const Rational& x);

struct GgsCertificate {
  int order = kDefaultCertificationOrder;
  int word_length = 3;
  AbelEquation equation;
  DarbouxIntegral integral;

  bool coefficients_vanish = false;
  ReturnMapSeries coefficients;

  bool boundary_identity = false;
  std::optional<YSeries> h_at_minus_one;
  std::optional<YSeries> h_at_plus_one;

  bool no_common_factor = false;

  bool has_witness = false;
  UniversalVerdict universality;

  bool numeric_identity = false;
  struct Sample {
    double y0;
    double y1;
  };
  std::vector<Sample> samples;
  double max_defect = 0.0;

  /// Empty when every leg passed.
  std::string failed_leg;
  [[nodiscard]] bool passed() const { return failed_leg.empty(); }
};

/// Center to `order`, H(+-1, z) = z^2, no common composition factor of the
/// primitives of p and q, a nonvanishing word of length <= word_length, and
/// numeric transport within 1e-9 of the identity. Stops at the first failed
/// leg.
GgsCertificate ggs_pipeline(int order = kDefaultCertificationOrder, int word_length = 3,
                            const NumericConfig& cfg = {});

/// H_alpha = (x^2 + 2y + alpha)^3 / (x^3 + 3xy + 1)^2.
DarbouxIntegral q4_integral(const Rational& alpha);
/// (-alpha x^2 - 2y^2 - alpha y + x) dx + (x y - alpha x + 1) dy.
Foliation q4_foliation(const Rational& alpha);

}  // namespace abel_center
