#include "abel_center/melnikov.hpp"

#include <cmath>

#include "abel_center/composition.hpp"
#include "abel_center/errors.hpp"

namespace abel_center {

namespace {

Poly primitive_from(const Poly& f, const Rational& x0) {
  Poly F = f.antiderivative();
  return F - Poly::constant(F(x0));
}

// y = 1/(h - A) = sum_k A^k u^{k+1}, truncated at u^trunc.
YSeries inverse_level(const Poly& A, int trunc) {
  std::vector<Poly> c(static_cast<std::size_t>(trunc) + 1);
  Poly power = Poly::constant(1);
  for (int k = 0; k + 1 <= trunc; ++k) {
    c[k + 1] = power;
    power *= A;
  }
  return YSeries(std::move(c), trunc);
}

YSeries order_form(const PerturbationOrder& w, const YSeries& y) {
  return YSeries::constant(w.p, y.trunc()) + y * w.q;
}

}  // namespace

Poly PerturbedAbel::normalized_A() const {
  Poly A = primitive_from(a, interval.x0);
  if (A(interval.x1) != 0) throw InputError("unperturbed equation has no center: A(x0) != A(x1)");
  return A;
}

PerturbationOrder PerturbedAbel::order(int j) const {
  if (j >= 1 && j <= static_cast<int>(orders.size())) return orders[j - 1];
  return {};
}

Rational MomentSeries::coefficient(int j) const {
  Rational c = 0;
  if (j == 0) c += constant_term;
  if (j == 1) c += inverse_h_term;
  const int k = j - tail_offset;
  if (k >= 0 && k < static_cast<int>(tail.size())) c += tail[k];
  return c;
}

std::vector<Rational> MomentSeries::coefficients() const {
  std::vector<Rational> out;
  const int top = static_cast<int>(tail.size()) - 1 + tail_offset;
  for (int j = 0; j <= std::max(top, 1); ++j) out.push_back(coefficient(j));
  return out;
}

bool MomentSeries::is_zero() const {
  for (const auto& c : coefficients()) {
    if (c != 0) return false;
  }
  return true;
}

double MomentSeries::evaluate(double h) const {
  const auto c = coefficients();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc / h + it->get_d();
  return acc;
}

MomentSeries melnikov1(const PerturbedAbel& sys, int kmax) {
  if (sys.orders.empty()) throw InputError("melnikov1 needs at least one perturbation order");
  if (kmax < 0) throw InputError("kmax must be >= 0");
  const Poly A = sys.normalized_A();
  const auto w1 = sys.order(1);
  MomentSeries m;
  m.kmax = kmax;
  m.tail_offset = 1;
  m.constant_term = definite_integral(w1.p, sys.interval.x0, sys.interval.x1);
  m.tail = moments(w1.q, A, sys.interval, kmax);
  return m;
}

Poly melnikov2_integrand(const PerturbedAbel& sys) {
  const auto w1 = sys.order(1);
  const auto w2 = sys.order(2);
  const Poly P1 = primitive_from(w1.p, sys.interval.x0);
  const Poly Q2 = primitive_from(w2.q, sys.interval.x0);
  return -(w1.q * P1 + Q2 * sys.a);
}

MomentSeries melnikov2(const PerturbedAbel& sys, int kmax, bool force) {
  if (sys.orders.empty()) throw InputError("melnikov2 needs at least one perturbation order");
  if (kmax < 0) throw InputError("kmax must be >= 0");
  const Interval& iv = sys.interval;
  const Poly A = sys.normalized_A();
  const auto w1 = sys.order(1);
  const auto w2 = sys.order(2);

  MomentSeries m;
  m.kmax = kmax;
  m.tail_offset = 2;

  const bool p1_closes = definite_integral(w1.p, iv.x0, iv.x1) == 0;
  const PccVerdict pcc = pcc_check(A, w1.q.antiderivative(), iv);
  const bool certified = p1_closes && pcc.holds;
  if (!certified) {
    std::string why = !p1_closes ? "int p1 != 0" : "no composition certificate for (A, Q1): " + pcc.note;
    if (!force) throw M1NotZero("M1 is not certified to vanish: " + why);
    m.forced = true;
    m.warnings.push_back("M2 expanded without M1 = 0 (" + why + "); the formula assumes it");
  }
  if (pcc.holds && pcc.degenerate) m.warnings.push_back("degenerate composition certificate: " + pcc.note);

  const Poly Q2 = primitive_from(w2.q, iv.x0);
  m.constant_term = definite_integral(w2.p, iv.x0, iv.x1);
  m.inverse_h_term = Q2(iv.x1);
  const auto g_moments = moments(melnikov2_integrand(sys), A, iv, kmax);
  m.tail.reserve(g_moments.size());
  for (std::size_t k = 0; k < g_moments.size(); ++k) m.tail.push_back(Rational(static_cast<long>(k) + 1) * g_moments[k]);

  if (certified) {
    const auto other = melnikov2_francoise(sys, kmax + 2);
    for (int j = 0; j <= kmax + 2; ++j) {
      if (other[j] != m.coefficient(j)) {
        throw OracleMismatch("M2 coefficient of h^-" + std::to_string(j) + ": moments " + to_string(m.coefficient(j)) +
                             " vs Francoise " + to_string(other[j]));
      }
    }
  }
  return m;
}

FrancoiseStep francoise_step(std::span<const PerturbationOrder> previous, const Poly& a, const Interval& iv,
                             int trunc) {
  if (previous.empty()) throw InputError("francoise_step needs the first-order form");
  if (previous.size() > 1) throw UnsupportedOrder("Francoise recursion is implemented up to order 2 only");
  if (trunc < 1) throw InputError("truncation must be >= 1");
  const Poly A = primitive_from(a, iv.x0);
  const YSeries f1 = order_form(previous[0], inverse_level(A, trunc));
  FrancoiseStep step{f1.integral_from(iv.x0), YSeries(trunc)};
  // r = -dR/dh = u^2 dR/du
  step.r = step.R.d_dy().mul_by_y_power(2).truncated(trunc);
  return step;
}

std::vector<Rational> melnikov2_francoise(const PerturbedAbel& sys, int trunc) {
  if (sys.orders.empty()) throw InputError("melnikov2 needs at least one perturbation order");
  const Interval& iv = sys.interval;
  const Poly A = sys.normalized_A();
  const YSeries y = inverse_level(A, trunc);
  const auto w1 = sys.order(1);
  const std::vector<PerturbationOrder> first{w1};
  const FrancoiseStep step = francoise_step(first, sys.a, iv, trunc);
  const YSeries integrand = step.r * order_form(w1, y) + order_form(sys.order(2), y);
  auto values = integrand.integral_from(iv.x0).at_x(iv.x1);
  values.resize(static_cast<std::size_t>(trunc) + 1);
  return values;
}

}  // namespace abel_center
