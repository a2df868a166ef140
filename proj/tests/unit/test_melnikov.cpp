#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "abel_center/composition.hpp"
#include "abel_center/errors.hpp"
#include "abel_center/melnikov.hpp"
#include "abel_center/numeric.hpp"
#include "generators.hpp"

using namespace abel_center;
using abel_center::testing::Gen;

namespace {

const Interval kUnit{0, 1};
const Poly kA{0, -1, 1};  // primitive of 2x - 1
const Poly ka{-1, 2};

PerturbedAbel certified_system(Gen& g) {
  PerturbedAbel sys;
  sys.interval = g.interval();
  const Poly W = g.closing_factor(sys.interval, g.integer(0, 1));
  sys.a = compose(g.poly_of_degree(g.integer(1, 2)), W).derivative();
  const Poly q1 = compose(g.poly(2), W).derivative();
  sys.orders = {{Gen::zero_mean(g.poly(3), sys.interval), q1}, {g.poly(3), g.poly(3)}};
  return sys;
}

double quadrature(const std::function<double(double)>& f, const Interval& iv) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, iv.x0.get_d(), iv.x1.get_d(), 15, 1e-14);
}

// int_{x0}^{x1} (outer form) (int_{x0}^{x} inner form), both series in u.
YSeries double_integral(const YSeries& outer, const YSeries& inner, const Rational& x0) {
  return (outer * inner.integral_from(x0)).integral_from(x0);
}

std::vector<Rational> trimmed(std::vector<Rational> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("first Melnikov function of a composition vanishes") {
  const Poly W = kA;
  PerturbedAbel sys;
  sys.interval = kUnit;
  sys.a = compose(Poly{0, 2, 1}, W).derivative();
  sys.orders = {{Poly{-1, 2} * Rational(3), W.derivative() * compose(Poly{1, 1, 5}, W)}};
  const MomentSeries m = melnikov1(sys, 12);
  CHECK(m.is_zero());
}

TEST_CASE("first Melnikov function, constant p") {
  const PerturbedAbel sys{ka, {{Poly{1}, Poly{}}}, kUnit};
  const MomentSeries m = melnikov1(sys, 4);
  CHECK(m.constant_term == 1);
  for (const auto& t : m.tail) CHECK(t == 0);
}

TEST_CASE("first Melnikov function tail") {
  const PerturbedAbel sys{ka, {{Poly{}, Poly{0, 1}}}, kUnit};
  const MomentSeries m = melnikov1(sys, 1);
  CHECK(m.tail == std::vector<Rational>{Rational(1, 2), Rational(-1, 12)});
  CHECK(m.coefficient(1) == Rational(1, 2));
  CHECK(m.coefficient(2) == Rational(-1, 12));
}

TEST_CASE("unperturbed equation without a center is rejected") {
  const PerturbedAbel sys{Poly{1}, {{Poly{1}, Poly{}}}, kUnit};
  CHECK_THROWS_AS(melnikov1(sys, 3), InputError);
  CHECK_THROWS_AS(melnikov1(PerturbedAbel{ka, {}, kUnit}, 3), InputError);
}

TEST_CASE("second Melnikov function without first-order terms") {
  Gen g(61);
  for (int i = 0; i < 5; ++i) {
    const Poly p2 = g.poly(3), q2 = g.poly(3);
    const PerturbedAbel sys{ka, {{Poly{}, Poly{}}, {p2, q2}}, kUnit};
    const PerturbedAbel as_first{ka, {{p2, q2}}, kUnit};
    const int kmax = 6;
    const MomentSeries m2 = melnikov2(sys, kmax);
    const MomentSeries m1 = melnikov1(as_first, kmax);
    for (int j = 0; j <= kmax + 1; ++j) CHECK(m2.coefficient(j) == m1.coefficient(j));
  }
}

TEST_CASE("second Melnikov function with cancelling integrand") {
  const Poly P1 = kA * Poly{2, 1};
  const Poly q1 = ka * Rational(3);
  const Poly Q2 = P1 * Rational(-3);
  const PerturbedAbel sys{ka, {{P1.derivative(), q1}, {Poly{}, Q2.derivative()}}, kUnit};
  CHECK(melnikov2_integrand(sys).is_zero());
  CHECK(melnikov2(sys, 5).is_zero());
}

TEST_CASE("second Melnikov function of a pull-back perturbation") {
  // dy/dx = a y^2 (1 - eps y) stays a pull-back, so M2 vanishes.
  const PerturbedAbel sys{ka, {{Poly{}, ka}, {Poly{}, Poly{}}}, kUnit};
  const MomentSeries m = melnikov2(sys, 2);
  CHECK(m.is_zero());
}

TEST_CASE("second Melnikov function matches quadrature") {
  const PerturbedAbel sys{ka, {{Poly{-1, 0, 3}, ka}, {Poly{0, 1}, Poly{0, 1}}}, kUnit};
  const MomentSeries m = melnikov2(sys, 12);
  const Poly g = melnikov2_integrand(sys);
  for (double h : {10.0, 100.0}) {
    const double integral =
        quadrature([&](double x) { return g.evaluate(x) / std::pow(h - kA.evaluate(x), 2); }, kUnit);
    const double expected = 0.5 + 0.5 / h + integral;
    CHECK(m.evaluate(h) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("second Melnikov function needs a certificate") {
  const PerturbedAbel sys{ka, {{Poly{}, Poly{0, 1}}, {Poly{}, Poly{}}}, kUnit};
  CHECK_THROWS_AS(melnikov2(sys, 3), M1NotZero);
  const MomentSeries forced = melnikov2(sys, 3, true);
  CHECK(forced.forced);
  CHECK_FALSE(forced.warnings.empty());
  const PerturbedAbel p_open{ka, {{Poly{1}, Poly{}}}, kUnit};
  CHECK_THROWS_AS(melnikov2(p_open, 3), M1NotZero);
}

TEST_CASE("Francoise step") {
  const std::vector<PerturbationOrder> none{{Poly{0, 1}, Poly{}}};
  CHECK(francoise_step(none, Poly{}, kUnit, 4).r.is_zero());

  const Rational c(5, 2);
  const std::vector<PerturbationOrder> constant_q{{Poly{}, Poly::constant(c)}};
  CHECK(francoise_step(constant_q, Poly{}, kUnit, 4).r == YSeries({Poly{}, Poly{}, Poly{0, c}}, 4));

  const std::vector<PerturbationOrder> linear_q{{Poly{}, ka}};
  const FrancoiseStep flat = francoise_step(linear_q, Poly{}, kUnit, 4);
  CHECK(flat.r == YSeries({Poly{}, Poly{}, kA}, 4));
  const FrancoiseStep curved = francoise_step(linear_q, ka, kUnit, 5);
  CHECK(curved.r.coeff(2) == kA);
  // dr/dx = u^2 d/du of the form
  const YSeries f1 = curved.R.d_dx();
  CHECK(curved.r.d_dx() == f1.d_dy().mul_by_y_power(2).truncated(5));

  const std::vector<PerturbationOrder> two{{}, {}};
  CHECK_THROWS_AS(francoise_step(two, ka, kUnit, 3), UnsupportedOrder);
  CHECK_THROWS_AS(francoise_step({}, ka, kUnit, 3), InputError);
}

TEST_CASE("property: first Melnikov tail equals the moments") {
  Gen g(62);
  for (int i = 0; i < 20; ++i) {
    PerturbedAbel sys = certified_system(g);
    sys.orders[0].q = g.poly(3);
    const MomentSeries m = melnikov1(sys, 8);
    CHECK(m.tail == moments(sys.orders[0].q, sys.normalized_A(), sys.interval, 8));
  }
}

TEST_CASE("property: moment and Francoise routes agree") {
  Gen g(63);
  for (int i = 0; i < 15; ++i) {
    const PerturbedAbel sys = certified_system(g);
    const int kmax = 6;
    const MomentSeries m = melnikov2(sys, kmax);
    const auto other = melnikov2_francoise(sys, kmax + 2);
    for (int j = 0; j <= kmax + 2; ++j) CHECK(m.coefficient(j) == other[j]);
  }
}

TEST_CASE("property: partial sums match quadrature at large h") {
  Gen g(64);
  for (int i = 0; i < 10; ++i) {
    const PerturbedAbel sys = certified_system(g);
    const Poly A = sys.normalized_A();
    const Poly integrand = melnikov2_integrand(sys);
    const Interval& iv = sys.interval;
    double amax = 0.0;
    for (int s = 0; s <= 200; ++s) {
      const double x = iv.x0.get_d() + (iv.x1.get_d() - iv.x0.get_d()) * s / 200.0;
      amax = std::max(amax, std::abs(A.evaluate(x)));
    }
    const double h = 10.0 * std::max(amax, 1.0);
    const MomentSeries m = melnikov2(sys, 20);
    const Poly Q2 = sys.orders[1].q.antiderivative();
    const double boundary = Rational(Q2(iv.x1) - Q2(iv.x0)).get_d() / h;
    const double constant = definite_integral(sys.orders[1].p, iv.x0, iv.x1).get_d();
    const double tail =
        quadrature([&](double x) { return integrand.evaluate(x) / std::pow(h - A.evaluate(x), 2); }, iv);
    const double scale = std::abs(constant) + std::abs(boundary) +
                         std::abs(quadrature([&](double x) { return std::abs(integrand.evaluate(x)); }, iv)) / (h * h) +
                         1e-300;
    CHECK(std::abs(m.evaluate(h) - (constant + boundary + tail)) <= 1e-8 * scale);
  }
}

TEST_CASE("property: shuffle cancellation of the second-order words") {
  Gen g(65);
  for (int i = 0; i < 10; ++i) {
    const PerturbedAbel sys = certified_system(g);
    const int trunc = 6;
    const Poly A = sys.normalized_A();
    std::vector<Poly> level(static_cast<std::size_t>(trunc) + 1);
    Poly power = Poly::constant(1);
    for (int k = 0; k + 1 <= trunc; ++k) {
      level[k + 1] = power;
      power *= A;
    }
    const YSeries y(level, trunc);
    const YSeries p1 = YSeries::constant(sys.orders[0].p, trunc);
    const YSeries y2q1 = y * y * sys.orders[0].q;
    const Rational& x0 = sys.interval.x0;
    const auto lhs = (double_integral(p1, y2q1, x0) + double_integral(y2q1, p1, x0)).at_x(sys.interval.x1);
    const auto rhs = (p1.integral_from(x0) * y2q1.integral_from(x0)).at_x(sys.interval.x1);
    CHECK(trimmed(lhs) == trimmed(rhs));
  }
}

TEST_CASE("second Melnikov function is the second-order displacement") {
  // 1/y(x1) - h along dy/dx = y^2 (a - eps w1 - eps^2 w2), symmetric in eps
  const PerturbedAbel sys{ka, {{Poly{-1, 0, 3}, ka}, {Poly{0, 1}, Poly{0, 1}}}, kUnit};
  const MomentSeries m = melnikov2(sys, 20);
  const auto displacement = [&](double h, double eps) {
    const auto rhs = [&](double x, double y) {
      double w = 0;
      for (int j = 1; j <= 2; ++j) {
        const PerturbationOrder o = sys.order(j);
        w += std::pow(eps, j) * (o.p.evaluate(x) + y * o.q.evaluate(x));
      }
      return y * y * (ka.evaluate(x) - w);
    };
    return 1.0 / integrate_scalar(rhs, 0.0, 1.0, 1.0 / h) - h;
  };
  for (double h : {4.0, 10.0}) {
    const double eps = 1e-2;
    const double second = (displacement(h, eps) + displacement(h, -eps)) / (2 * eps * eps);
    CHECK(second == doctest::Approx(m.evaluate(h)).epsilon(1e-3));
  }
}

TEST_CASE("first Melnikov function is the first-order displacement") {
  const PerturbedAbel sys{ka, {{Poly{1, 1}, Poly{2, 0, -1}}}, kUnit};
  const MomentSeries m = melnikov1(sys, 30);
  const auto displacement = [&](double h, double eps) {
    const PerturbationOrder o = sys.order(1);
    const auto rhs = [&](double x, double y) {
      return y * y * (ka.evaluate(x) - eps * (o.p.evaluate(x) + y * o.q.evaluate(x)));
    };
    return 1.0 / integrate_scalar(rhs, 0.0, 1.0, 1.0 / h) - h;
  };
  for (double h : {4.0, 10.0}) {
    const double eps = 1e-4;
    const double first = (displacement(h, eps) - displacement(h, -eps)) / (2 * eps);
    CHECK(first == doctest::Approx(m.evaluate(h)).epsilon(1e-5));
  }
}
