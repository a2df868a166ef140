#pragma once

#include <span>
#include <string>
#include <vector>

#include "abel_center/iterint.hpp"
#include "abel_center/yseries.hpp"

namespace abel_center {

/// omega_j = (p + y q) dx
struct PerturbationOrder {
  Poly p;
  Poly q;
};

/// dy / y^2 = a dx - sum_j eps^j omega_j on the interval.
///
/// The unperturbed equation has the first integral h = 1/y + A(x) with A the
/// primitive of a normalized to A(x0) = 0; it has a center iff A(x1) = 0 too.
/// M_j(h) is the eps^j coefficient of 1/y(x1) + A(x1) - h along the solution
/// with 1/y(x0) = h.
struct PerturbedAbel {
  Poly a;
  std::vector<PerturbationOrder> orders;
  Interval interval;

  /// primitive of a vanishing at x0; throws InputError unless it also
  /// vanishes at x1.
  [[nodiscard]] Poly normalized_A() const;
  /// omega_j, zero past the given orders.
  [[nodiscard]] PerturbationOrder order(int j) const;
};

/// Truncated expansion in 1/h:
///   constant_term + inverse_h_term / h + sum_k tail[k] h^{-k-tail_offset}.
struct MomentSeries {
  Rational constant_term;
  Rational inverse_h_term;
  std::vector<Rational> tail;
  int tail_offset = 1;
  int kmax = 0;
  /// M2 was expanded without a certificate for M1 = 0.
  bool forced = false;
  std::vector<std::string> warnings;

  /// Coefficient of h^{-j}.
  [[nodiscard]] Rational coefficient(int j) const;
  /// Coefficients of h^0 .. h^{-(kmax + tail_offset)}.
  [[nodiscard]] std::vector<Rational> coefficients() const;
  [[nodiscard]] bool is_zero() const;
  /// Partial sum at h.
  [[nodiscard]] double evaluate(double h) const;
};

/// M1 = int p1 + sum_k h^{-k-1} int q1 A^k.
MomentSeries melnikov1(const PerturbedAbel& sys, int kmax);

/// M2 = int p2 + (Q2(x1) - Q2(x0)) / h + sum_k (k+1) h^{-k-2} int g A^k
/// with g = -(q1 P1 + Q2 a), P1 and Q2 primitives of p1 and q2 with
/// P1(x0) = Q2(x0) = 0.
///
/// Valid only when M1 vanishes identically. That is certified by int p1 = 0
/// and the composition condition for (A, Q1); without it M1NotZero is thrown
/// unless `force` is set. When certified, the series is cross-checked against
/// melnikov2_francoise and OracleMismatch is thrown on disagreement.
MomentSeries melnikov2(const PerturbedAbel& sys, int kmax, bool force = false);

/// The integrand g of the M2 tail.
Poly melnikov2_integrand(const PerturbedAbel& sys);

/// Omega_1 = dR_1 + r_1 dh for the first-order form, in the coordinates
/// (x, u = 1/h) where y = sum_k A^k u^{k+1}. R_1 and r_1 are series in u
/// with polynomial coefficients in x, truncated at u^trunc.
struct FrancoiseStep {
  YSeries R;
  YSeries r;
};

/// One step of the Francoise recursion; only the step from order 1 to order
/// 2 is implemented, so exactly one previous form is accepted.
FrancoiseStep francoise_step(std::span<const PerturbationOrder> previous, const Poly& a, const Interval& iv,
                             int trunc);

/// M2 as int_{x0}^{x1} (r_1 omega_1 + omega_2), coefficients of u^0..u^trunc.
std::vector<Rational> melnikov2_francoise(const PerturbedAbel& sys, int trunc);

}  // namespace abel_center
