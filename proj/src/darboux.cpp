#include "abel_center/darboux.hpp"

#include <cmath>
#include <numeric>

#include "abel_center/composition.hpp"
#include "abel_center/errors.hpp"

namespace abel_center {

namespace {

YSeries exact_of(const YSeries& s, int degree) {
  std::vector<Poly> c;
  for (int i = 0; i <= std::min(degree, s.y_degree()); ++i) c.push_back(s.coeff(i));
  return YSeries::bivariate(std::move(c));
}

YSeries exact_pow(const YSeries& s, int e) { return s.pow(static_cast<unsigned>(e)); }

}  // namespace

YSeries first_integral_residual(const Foliation& fol, const DarbouxIntegral& H) {
  if (H.factors.empty()) throw InputError("Darboux integral has no factors");
  YSeries eta_x = YSeries::bivariate({});
  YSeries eta_y = YSeries::bivariate({});
  for (std::size_t i = 0; i < H.factors.size(); ++i) {
    const auto& [f, lambda] = H.factors[i];
    if (lambda == 0) throw InputError("Darboux exponents must be nonzero");
    YSeries others = YSeries::constant(Poly::constant(lambda));
    for (std::size_t j = 0; j < H.factors.size(); ++j) {
      if (j != i) others = others * H.factors[j].f;
    }
    eta_x += others * f.d_dx();
    eta_y += others * f.d_dy();
  }
  return eta_x * fol.P + eta_y * fol.Q;
}

bool verify_first_integral(const Foliation& fol, const DarbouxIntegral& H) {
  return first_integral_residual(fol, H).is_zero();
}

TruncatedPair solve_pq(const YSeries& R, int p, int q, int n) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw InputError("solve_pq needs coprime p, q >= 1");
  if (n < 0) throw InputError("solve_pq needs n >= 0");
  if (R.coeff(0).is_zero()) throw InvalidBase("y^0 coefficient of R is zero");
  const YSeries base = R.truncated(n);
  TruncatedPair tp{exact_of(exact_pow(base, q), n), exact_of(exact_pow(base, p), n), p, q, n};
  if (exact_pow(tp.P, p).truncated(n) != exact_pow(tp.Q, q).truncated(n)) {
    throw InvariantError("solve_pq: P^p and Q^q differ below y^(n+1)");
  }
  return tp;
}

ClosedForms closed_forms(const TruncatedPair& tp) {
  const Poly a1 = tp.P.coeff(1), a2 = tp.P.coeff(2);
  const Poly b1 = tp.Q.coeff(1), b2 = tp.Q.coeff(2);
  const Rational p = tp.p, q = tp.q;
  ClosedForms c;
  c.r1 = a2 * b2 * (2 * (p - q));
  c.r2 = a1 * b2 * (p - 2 * q) - b1 * a2 * (q - 2 * p);
  c.r3 = a2.derivative() * b2 * p - b2.derivative() * a2 * q;
  c.r4 = (a1.derivative() * b2 + b1 * a2.derivative()) * p - (b1.derivative() * a2 + a1 * b2.derivative()) * q;
  c.r4_constant_top = a1.derivative() * b2 * p - b1.derivative() * a2 * q;
  return c;
}

Foliation reduce_foliation(const TruncatedPair& tp) {
  const YSeries P = exact_of(tp.P, tp.n);
  const YSeries Q = exact_of(tp.Q, tp.n);
  const Rational p = tp.p, q = tp.q;
  const YSeries alpha = Q * P.d_dx() * p - P * Q.d_dx() * q;
  const YSeries beta = Q * P.d_dy() * p - P * Q.d_dy() * q;
  Foliation fol{beta.divide_by_y_power(tp.n), -alpha.divide_by_y_power(tp.n)};
  if (tp.n == 2) {
    const ClosedForms c = closed_forms(tp);
    const YSeries dy_part = YSeries::bivariate({c.r2, c.r1});
    const YSeries dx_part = YSeries::bivariate({Poly{}, c.r4, c.r3});
    if (fol.P != dy_part || -fol.Q != dx_part) {
      throw OracleMismatch("reduced foliation differs from the closed forms r1..r4");
    }
  }
  return fol;
}

MasterSystem generate_master(int k, const Poly& r) {
  if (k < 1) throw InputError("master family needs k >= 1");
  MasterSystem m;
  m.k = k;
  m.r = r;
  const Poly R = Poly::constant(1) - r * r;
  const unsigned uk = static_cast<unsigned>(k);
  const YSeries N = YSeries::bivariate({R.pow(2 * uk), r * R.pow(uk) * Rational(2 * k), Poly::constant(k)});
  const YSeries D = YSeries::bivariate(
      {R.pow(2 * uk - 1), r * R.pow(uk - 1) * Rational(2 * k - 1), Poly::constant(Rational(2 * k - 1, 2))});
  m.H.factors = {{N, 2 * k - 1}, {D, -2 * k}};
  m.pair = TruncatedPair{N, D, 2 * k - 1, 2 * k, 2};
  m.reduced = reduce_foliation(m.pair);

  const Poly top = m.reduced.P.coeff(1);
  if (m.reduced.P.y_degree() != 1 || !top.is_constant() || top.is_zero()) {
    throw InvariantError("master reduced foliation is not of Lienard type");
  }
  m.scale = -top.coeff(0);
  const Rational inv = Rational(1) / m.scale;
  m.r2 = m.reduced.P.coeff(0) * inv;
  if (!m.reduced.Q.coeff(0).is_zero() || m.reduced.Q.y_degree() > 1) {
    throw InvariantError("master reduced foliation does not have y = 0 as a leaf");
  }
  m.r4 = m.reduced.Q.coeff(1) * inv;

  m.lienard_p = -(m.r2.derivative() + m.r4);
  m.lienard_q = m.r2 * m.r4;
  m.lienard = {YSeries::bivariate({Poly{}, Poly::constant(1)}), YSeries::bivariate({-m.lienard_q, -m.lienard_p})};
  const Poly minus_one = Poly::constant(-1);
  const YSeries NY = N.substitute_y(m.r2, minus_one);
  const YSeries DY = D.substitute_y(m.r2, minus_one);
  m.lienard_integral.factors = {{NY, 2 * k - 1}, {DY, -2 * k}};

  m.abel = {YSeries::bivariate({Poly::constant(1)}),
            YSeries::bivariate({Poly{}, Poly{}, m.lienard_p, m.lienard_q})};
  YSeries Nz = NY.reversed(2);
  YSeries Dz = DY.reversed(2);
  Nz = Nz * (Rational(1) / Nz.coeff(0).coeff(0));
  Dz = Dz * (Rational(1) / Dz.coeff(0).coeff(0));
  m.abel_integral.factors = {{YSeries::y_power(1), 2}, {Nz, 2 * k - 1}, {Dz, -2 * k}};

  const Foliation normalized{YSeries::bivariate({m.r2, minus_one}), YSeries::bivariate({Poly{}, m.r4})};
  if (normalized.P * m.scale != m.reduced.P || normalized.Q * m.scale != m.reduced.Q) {
    throw InvariantError("master normalization does not reproduce the reduced foliation");
  }
  if (!verify_first_integral(m.reduced, m.H)) throw InvariantError("H_k is not a first integral of its foliation");
  if (!verify_first_integral(m.lienard, m.lienard_integral)) {
    throw InvariantError("Lienard form lost the first integral");
  }
  if (!verify_first_integral(m.abel, m.abel_integral)) throw InvariantError("Abel form lost the first integral");
  return m;
}

AbelEquation ggs_equation() {
  const MasterSystem m = generate_master(2, Poly::identity());
  return AbelEquation::from_abel_form(m.lienard_p, m.lienard_q, Interval{-1, 1});
}

namespace {

using Dense = std::vector<Rational>;

Dense truncate_mul(const Dense& a, const Dense& b, std::size_t len) {
  Dense out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// f(s(x)) mod x^len for a polynomial f and a series s with s(0) = 0.
Dense compose_series(const Poly& f, const Dense& s, std::size_t len) {
  Dense acc(len);
  const auto c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = truncate_mul(acc, s, len);
    acc[0] += c[k];
  }
  return acc;
}

}  // namespace

EvenPartReport even_part_check(const Poly& p, const Poly& q, int order) {
  if (order < 1) throw InputError("even_part_check needs order >= 1");
  if (q.coeff(0) != 0 || q.coeff(1) == 0) throw InvalidEquation("needs q(0) = 0 and q'(0) != 0");
  if (p.coeff(0) != 0) throw InvalidEquation("needs p(0) = 0");
  const Poly P = p.antiderivative();
  const Poly Q = q.antiderivative();
  const Rational q2 = Q.coeff(2);
  const auto len = static_cast<std::size_t>(order) + 2;

  Dense sigma(len);
  sigma[1] = -1;
  for (int m = 2; m <= order; ++m) {
    // s_m enters the x^{m+1} coefficient of Q(sigma) as -2 Q_2 s_m.
    const Dense image = compose_series(Q, sigma, static_cast<std::size_t>(m) + 2);
    sigma[m] = (image[m + 1] - Q.coeff(m + 1)) / (2 * q2);
  }
  EvenPartReport report;
  report.involution.assign(sigma.begin() + 1, sigma.begin() + 1 + order);
  const Dense image = compose_series(P, sigma, static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) {
    if (image[m] != P.coeff(m)) {
      report.first_defect = m;
      break;
    }
  }
  return report;
}

std::optional<YSeries> restrict_at(const DarbouxIntegral& H, const Rational& x) {
  YSeries out = YSeries::constant(Poly::constant(1));
  for (const auto& [f, lambda] : H.factors) {
    if (lambda.get_den() != 1 || !lambda.get_num().fits_slong_p()) return std::nullopt;
    const long e = lambda.get_num().get_si();
    std::vector<Poly> values;
    for (const auto& v : f.at_x(x)) values.push_back(Poly::constant(v));
    const YSeries g = YSeries::bivariate(std::move(values));
    if (e >= 0) {
      out = out * g.pow(static_cast<unsigned>(e));
      continue;
    }
    if (g.y_degree() != 0) return std::nullopt;
    Rational c = 1;
    const Rational base = g.coeff(0).coeff(0);
    for (long i = 0; i < -e; ++i) c /= base;
    out = out * c;
  }
  return out;
}

GgsCertificate ggs_pipeline(int order, int word_length, const NumericConfig& cfg) {
  GgsCertificate cert;
  cert.order = order;
  cert.word_length = word_length;
  const MasterSystem m = generate_master(2, Poly::identity());
  cert.equation = AbelEquation::from_abel_form(m.lienard_p, m.lienard_q, Interval{-1, 1});
  cert.integral = m.abel_integral;
  const Interval& iv = cert.equation.interval;

  cert.coefficients = return_map(cert.equation, order);
  cert.coefficients_vanish = cert.coefficients.all_zero();
  if (!cert.coefficients_vanish) {
    cert.failed_leg = "coefficients";
    return cert;
  }

  cert.h_at_minus_one = restrict_at(cert.integral, iv.x0);
  cert.h_at_plus_one = restrict_at(cert.integral, iv.x1);
  const YSeries z2 = YSeries::y_power(2);
  cert.boundary_identity = cert.h_at_minus_one == z2 && cert.h_at_plus_one == z2;
  if (!cert.boundary_identity) {
    cert.failed_leg = "boundary";
    return cert;
  }

  cert.no_common_factor =
      !common_factor(m.lienard_p.antiderivative(), m.lienard_q.antiderivative(), iv).has_value();
  if (!cert.no_common_factor) {
    cert.failed_leg = "composition";
    return cert;
  }

  cert.universality = universal_check(cert.equation, word_length);
  cert.has_witness = !cert.universality.universal_up_to;
  if (!cert.has_witness) {
    cert.failed_leg = "witness";
    return cert;
  }

  for (double y0 : {1e-3, -1e-3, 1e-2, -1e-2}) {
    const double y1 = transport(cert.equation, y0, cfg);
    cert.samples.push_back({y0, y1});
    cert.max_defect = std::max(cert.max_defect, std::abs(y1 - y0));
  }
  cert.numeric_identity = cert.max_defect < 1e-9;
  if (!cert.numeric_identity) cert.failed_leg = "numeric";
  return cert;
}

DarbouxIntegral q4_integral(const Rational& alpha) {
  const YSeries quadric = YSeries::bivariate({Poly{alpha, 0, 1}, Poly::constant(2)});
  const YSeries cubic = YSeries::bivariate({Poly{1, 0, 0, 1}, Poly{0, 3}});
  return {{{quadric, 3}, {cubic, -2}}};
}

Foliation q4_foliation(const Rational& alpha) {
  return {YSeries::bivariate({Poly{1, -alpha}, Poly{0, 1}}),
          YSeries::bivariate({Poly{0, -1, alpha}, Poly::constant(alpha), Poly::constant(2)})};
}

}  // namespace abel_center
