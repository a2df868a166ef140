#include "doctest.h"

#include <cmath>

#include "abel_center/darboux.hpp"
#include "abel_center/errors.hpp"
#include "abel_center/numeric.hpp"
#include "generators.hpp"

using namespace abel_center;
using abel_center::testing::Gen;

TEST_CASE("linear growth") {
  // dy/dx = y
  const AbelEquation eq({}, Interval{0, 1});
  const double y1 = integrate_scalar([](double, double y) { return y; }, 0.0, 1.0, 0.1);
  CHECK(std::abs(y1 - 0.1 * std::exp(1.0)) < 1e-10);
  CHECK(transport(eq, 0.1) == 0.1);
}

TEST_CASE("quadratic transport") {
  // dy + 2x y^2 dx = 0
  const AbelEquation eq({Poly{0, 2}}, Interval{0, 1});
  for (double y0 : {0.1, -0.3, 0.5}) CHECK(std::abs(transport(eq, y0) - y0 / (1 + y0)) < 1e-10);
}

TEST_CASE("center transport is the identity") {
  const AbelEquation eq = ggs_equation();
  for (double y0 : {1e-3, -1e-3}) CHECK(std::abs(transport(eq, y0) - y0) < 1e-9);
}

TEST_CASE("blow-up is reported with its location") {
  // dy/dx = y^2 from y0 = 2 escapes at x = 1/2
  const AbelEquation eq({Poly{-1}}, Interval{0, 1});
  try {
    transport(eq, 2.0);
    FAIL("expected blow-up");
  } catch (const BlowUp& e) {
    CHECK(e.location == doctest::Approx(0.5).epsilon(1e-3));
  }
}

TEST_CASE("configuration checks") {
  NumericConfig cfg;
  cfg.abs_tol = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  NumericConfig tight;
  tight.max_steps = 3;
  const AbelEquation eq({Poly{0, 2}}, Interval{0, 1});
  CHECK_THROWS_AS(transport(eq, 0.1, tight), StepLimitExceeded);
}

TEST_CASE("property: transport agrees with the exact series") {
  Gen g(81);
  for (int i = 0; i < 10; ++i) {
    const AbelEquation eq = g.equation(3, 3);
    const ReturnMapSeries forward = inverse_map(return_map(eq, 8));
    for (double y0 : {1e-2, -1e-2, 1e-3}) {
      const double bound = 1e3 * std::pow(std::abs(y0), 10) + 1e-11;
      CHECK(std::abs(transport(eq, y0) - forward(y0)) < bound);
    }
  }
}

TEST_CASE("property: there and back again") {
  Gen g(82);
  for (int i = 0; i < 10; ++i) {
    const AbelEquation eq = g.equation(3, 3);
    for (double y0 : {1e-2, -5e-3}) {
      const double back = transport_reverse(eq, transport(eq, y0));
      CHECK(std::abs(back - y0) < 1e-11);
    }
  }
}
