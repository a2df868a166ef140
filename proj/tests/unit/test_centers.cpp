#include "doctest.h"

#include <cstdlib>

#include "abel_center/centers.hpp"
#include "abel_center/darboux.hpp"
#include "abel_center/errors.hpp"
#include "generators.hpp"

using namespace abel_center;
using abel_center::testing::Gen;

namespace {

const Interval kUnit{0, 1};

AbelEquation random_pull_back(Gen& g) {
  const Interval iv = g.interval();
  const Poly W = g.closing_factor(iv, g.integer(0, 1));
  std::vector<Poly> base{g.poly(2), g.poly(2)};
  return AbelEquation::pull_back(base, W, iv);
}

}  // namespace

TEST_CASE("first coefficient is the plain integral") {
  const AbelEquation eq({Poly{-1, 2}}, kUnit);
  CHECK(brudnyi_coefficient(eq, 1) == 0);
  CHECK(brudnyi_coefficient(eq, 1) == definite_integral(eq.species[0], 0, 1));
}

TEST_CASE("second coefficient with a cubic term") {
  const AbelEquation eq({Poly{-1, 2}, Poly{1}}, kUnit);
  CHECK(brudnyi_coefficient(eq, 2) == 1);
}

TEST_CASE("weights of the fourth coefficient") {
  const std::vector<std::pair<std::vector<int>, int>> expected{
      {{4}, 1}, {{3, 1}, 2}, {{2, 2}, 3}, {{1, 3}, 4}, {{2, 1, 1}, 6}, {{1, 2, 1}, 8}, {{1, 1, 2}, 12}, {{1, 1, 1, 1}, 24}};
  for (const auto& [parts, w] : expected) CHECK(composition_weight(parts) == w);
  const auto all = compositions(4, 4);
  CHECK(all.size() == 8);
  CHECK(compositions(4, 1) == std::vector<std::vector<int>>{{1, 1, 1, 1}});
  CHECK(compositions(5, 2).size() == 8);
  CHECK(compositions(0, 3).empty());
}

TEST_CASE("compositions are lexicographic and complete") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = compositions(n, n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("first-integral series, linear case") {
  const Rational alpha(3, 2), x0(1, 3);
  const int order = 8;
  const YSeries f = YSeries::bivariate({Poly{}, Poly::constant(alpha)});
  const YSeries phi = first_integral_series(f, x0, order);
  Poly expected;
  Poly term = Poly::constant(1);
  const Poly shift{-x0, 1};
  for (int k = 0; k <= order; ++k) {
    expected += term;
    term = term * shift * (alpha / (k + 1));
  }
  CHECK(phi.coeff(1) == expected);
  CHECK(phi.y_degree() == 1);
}

TEST_CASE("first-integral series, quadratic case") {
  const Rational x0(-1, 2);
  const int order = 10;
  const YSeries f = YSeries::bivariate({Poly{}, Poly{}, Poly{0, 2}});
  const YSeries phi = first_integral_series(f, x0, order);
  const Poly base{-x0 * x0, 0, 1};
  CHECK(phi.coeff(0).is_zero());
  for (int n = 0; n <= order; ++n) CHECK(phi.coeff(n + 1) == base.pow(static_cast<unsigned>(n)));
}

TEST_CASE("first-integral series of the zero form") {
  const YSeries phi = first_integral_series(YSeries::bivariate({}), 0, 4);
  CHECK(phi == YSeries::y_power(1, 5));
  CHECK_THROWS_AS(first_integral_series(YSeries::bivariate({Poly{1}}), 0, 3), InvalidEquation);
}

TEST_CASE("return map of dy/dx = -y^2") {
  const AbelEquation eq({Poly{1}}, kUnit);
  const ReturnMapSeries m = return_map(eq, 6, true);
  for (const auto& c : m.coefficients) CHECK(c == 1);
  // forward transport y / (1 + y)
  const ReturnMapSeries fwd = inverse_map(m);
  for (int n = 1; n <= 6; ++n) CHECK(fwd.coefficients[n - 1] == (n % 2 == 0 ? 1 : -1));
  CHECK(compose_maps(m, fwd).all_zero());
}

TEST_CASE("pull-back equations have vanishing coefficients") {
  Gen g(41);
  for (int i = 0; i < 8; ++i) {
    const AbelEquation eq = random_pull_back(g);
    CHECK(return_map(eq, 6, true).all_zero());
    CHECK(universal_check(eq, 3).universal_up_to);
  }
}

TEST_CASE("center that is not universal") {
  const AbelEquation eq = ggs_equation();
  const ReturnMapSeries m = return_map(eq, 10);
  CHECK(m.all_zero());
  CHECK(m.first_nonzero() == 0);
  const NecessaryConditions nc = necessary_conditions(eq);
  CHECK(nc.satisfied());
  const UniversalVerdict v = universal_check(eq, 3);
  CHECK_FALSE(v.universal_up_to);
  CHECK(v.witness.size() <= 3);
  CHECK(v.witness_value != 0);
  std::vector<Poly> word;
  for (int l : v.witness) word.push_back(eq.species_at(l));
  CHECK(iterated_integral(word, eq.interval) == v.witness_value);
}

TEST_CASE("necessary conditions") {
  const NecessaryConditions nc = necessary_conditions(AbelEquation({Poly{1}}, kUnit));
  CHECK(nc.int_a1 == 1);
  CHECK(nc.int_a2 == 0);
  CHECK(nc.int_a1_a2 == 0);
  CHECK_FALSE(nc.satisfied());
  CHECK(necessary_conditions(AbelEquation({Poly{1, 2}, Poly{3}}, Interval{2, 2})).satisfied());
  CHECK_THROWS_AS(necessary_conditions(AbelEquation({Poly{1}, Poly{1}, Poly{1}}, kUnit)), InvalidEquation);
}

TEST_CASE("zero equation") {
  const AbelEquation eq({Poly{}, Poly{}}, kUnit);
  CHECK(eq.species_count() == 0);
  CHECK(return_map(eq, 5).all_zero());
  CHECK(universal_check(eq, 4).universal_up_to);
}

TEST_CASE("abel-form ingestion negates") {
  const AbelEquation eq = AbelEquation::from_abel_form(Poly{0, 2}, Poly{1}, kUnit);
  CHECK(eq.species_at(1) == Poly{0, -2});
  CHECK(eq.species_at(2) == Poly{-1});
  CHECK(eq.species_at(3).is_zero());
}

TEST_CASE("weight bound restricts the word search") {
  const AbelEquation eq({Poly{}, Poly{1}}, kUnit);
  const UniversalVerdict bounded = universal_check(eq, 2, 1);
  CHECK(bounded.universal_up_to);
  const UniversalVerdict open = universal_check(eq, 2);
  CHECK_FALSE(open.universal_up_to);
  CHECK(open.witness == std::vector<int>{2});
}

TEST_CASE("word search is independent of the thread count") {
  const AbelEquation eq = ggs_equation();
  setenv("ABEL_CENTER_THREADS", "1", 1);
  const UniversalVerdict one = universal_check(eq, 3);
  setenv("ABEL_CENTER_THREADS", "4", 1);
  const UniversalVerdict four = universal_check(eq, 3);
  unsetenv("ABEL_CENTER_THREADS");
  CHECK(one.witness == four.witness);
  CHECK(one.witness_value == four.witness_value);
  CHECK(one.words_checked == four.words_checked);
}

TEST_CASE("property: formula and first-integral series agree") {
  Gen g(42);
  for (int i = 0; i < 20; ++i) {
    const AbelEquation eq = g.equation(3, 4);
    CHECK(return_map(eq, 6) == return_map_via_first_integral(eq, 6));
  }
}

TEST_CASE("property: second coefficient minus int a2 is the square of the first") {
  Gen g(43);
  for (int i = 0; i < 30; ++i) {
    const AbelEquation eq = g.equation(3, 4);
    const Interval& iv = eq.interval;
    const Rational c1 = brudnyi_coefficient(eq, 1);
    CHECK(brudnyi_coefficient(eq, 2) - definite_integral(eq.species_at(2), iv.x0, iv.x1) == c1 * c1);
  }
}

TEST_CASE("property: third coefficient when the first two vanish") {
  Gen g(44);
  for (int i = 0; i < 30; ++i) {
    const Interval iv = g.interval();
    const Poly a1 = Gen::zero_mean(g.poly(4), iv);
    const Poly a2 = Gen::zero_mean(g.poly(4), iv);
    const AbelEquation eq({a1, a2}, iv);
    REQUIRE(brudnyi_coefficient(eq, 1) == 0);
    REQUIRE(brudnyi_coefficient(eq, 2) == 0);
    CHECK(brudnyi_coefficient(eq, 3) == necessary_conditions(eq).int_a1_a2);
  }
}

TEST_CASE("property: maps over adjacent intervals compose") {
  Gen g(45);
  for (int i = 0; i < 15; ++i) {
    AbelEquation eq = g.equation(3, 3);
    const Rational xm = g.rational(2, 3);
    AbelEquation left(eq.species, Interval{eq.interval.x0, xm});
    AbelEquation right(eq.species, Interval{xm, eq.interval.x1});
    CHECK(return_map(eq, 6) == compose_maps(return_map(left, 6), return_map(right, 6)));
  }
}

TEST_CASE("property: inverse map") {
  Gen g(46);
  for (int i = 0; i < 15; ++i) {
    ReturnMapSeries m;
    for (int n = 0; n < 6; ++n) m.coefficients.push_back(g.rational());
    CHECK(compose_maps(m, inverse_map(m)).all_zero());
    CHECK(compose_maps(inverse_map(m), m).all_zero());
  }
}

TEST_CASE("series evaluation") {
  ReturnMapSeries m{{Rational(1), Rational(-2)}};
  CHECK(m(0.5) == doctest::Approx(0.5 + 0.25 - 2 * 0.125));
  CHECK(m.order() == 2);
  CHECK(m.first_nonzero() == 1);
}
