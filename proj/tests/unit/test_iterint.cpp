#include "doctest.h"

#include <algorithm>

#include "abel_center/iterint.hpp"
#include "generators.hpp"

using namespace abel_center;
using abel_center::testing::Gen;

namespace {

Rational integral(const Word& w, const Interval& iv) { return iterated_integral(w, iv); }

Word concat_reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace

TEST_CASE("single and double integrals") {
  const Interval unit{0, 1};
  const Poly two_x{0, 2};
  CHECK(integral({two_x}, unit) == 1);
  CHECK(integral({two_x, two_x}, unit) == Rational(1, 2));
  // int_0^1 t (int_0^t ds) dt
  CHECK(integral({Poly{0, 1}, Poly{1}}, unit) == Rational(1, 3));
  CHECK(integral({Poly{1}, Poly{0, 1}}, unit) == Rational(1, 6));
  CHECK(integral({}, unit) == 1);
}

TEST_CASE("running integral is a polynomial in the upper limit") {
  const Poly r = iterated_integral_poly(Word{Poly{0, 1}, Poly{1}}, 0);
  CHECK(r == Poly{0, 0, 0, Rational(1, 3)});
}

TEST_CASE("shuffle interleavings") {
  using W = std::vector<char>;
  CHECK(shuffle_product(W{'a'}, W{'b'}) == std::vector<W>{{'a', 'b'}, {'b', 'a'}});
  CHECK(shuffle_product(W{'a'}, W{}) == std::vector<W>{{'a'}});
  auto three = shuffle_product(W{'a', 'b'}, W{'c'});
  std::sort(three.begin(), three.end());
  CHECK(three == std::vector<W>{{'a', 'b', 'c'}, {'a', 'c', 'b'}, {'c', 'a', 'b'}});
  CHECK(shuffle_product(W{'a', 'b', 'c'}, W{'d', 'e'}).size() == 10);
}

TEST_CASE("memo table agrees with direct nesting") {
  Gen g(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> alphabet{g.poly(3), g.poly(3), g.poly(3)};
    const Interval iv = g.interval();
    WordIntegralTable table(alphabet, iv);
    for (int i = 0; i < 10; ++i) {
      std::vector<int> letters(static_cast<std::size_t>(g.integer(1, 4)));
      Word w;
      for (auto& l : letters) {
        l = g.integer(1, 3);
        w.push_back(alphabet[l - 1]);
      }
      CHECK(table.integral(letters) == integral(w, iv));
    }
  }
}

TEST_CASE("property: shuffle relation") {
  Gen g(32);
  for (int i = 0; i < 30; ++i) {
    const int total = g.integer(1, 5);
    const int left = g.integer(0, total);
    const Word a = g.word(left, 3), b = g.word(total - left, 3);
    const Interval iv = g.interval();
    Rational sum = 0;
    for (const auto& w : shuffle_product(a, b)) sum += integral(w, iv);
    CHECK(sum == integral(a, iv) * integral(b, iv));
  }
}

TEST_CASE("property: reversal of word and orientation") {
  Gen g(33);
  for (int i = 0; i < 30; ++i) {
    const int n = g.integer(1, 5);
    const Word w = g.word(n, 3);
    const Interval iv = g.interval();
    const Rational sign = n % 2 == 0 ? 1 : -1;
    CHECK(integral(w, iv) == sign * integral(concat_reversed(w), Interval{iv.x1, iv.x0}));
  }
}

TEST_CASE("property: pull-back words vanish on a closing interval") {
  Gen g(34);
  for (int i = 0; i < 15; ++i) {
    const Interval iv = g.interval();
    const Poly W = g.closing_factor(iv, g.integer(0, 2));
    const Poly dW = W.derivative();
    Word w;
    for (int k = g.integer(1, 4); k > 0; --k) w.push_back(compose(g.poly(2), W) * dW);
    CHECK(integral(w, iv) == 0);
  }
}

TEST_CASE("property: one-point interval") {
  Gen g(35);
  for (int i = 0; i < 15; ++i) {
    const Rational c = g.rational();
    CHECK(integral(g.word(g.integer(1, 4), 3), Interval{c, c}) == 0);
  }
}
