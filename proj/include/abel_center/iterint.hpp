#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "abel_center/poly.hpp"

namespace abel_center {

/// Oriented integration interval; x0 == x1 and x0 > x1 are both allowed.
struct Interval {
  Rational x0;
  Rational x1;
};

/// Word of polynomial one-forms f_i(x) dx. The leftmost form is the
/// outermost integrand:
///   int w[0] w[1] ... w[n-1] = int_{x0}^{x} w[0](t) (int_{x0}^{t} w[1] ... w[n-1]) dt.
using Word = std::vector<Poly>;

/// Iterated integral of `word` from `x0` to a free upper limit, as a
/// polynomial in that limit. The empty word gives the constant 1.
Poly iterated_integral_poly(std::span<const Poly> word, const Rational& x0);

/// Exact iterated integral of `word` over the interval.
Rational iterated_integral(std::span<const Poly> word, const Interval& iv);

/// All riffle interleavings of `a` and `b` that keep the internal order of
/// each, C(|a|+|b|, |a|) words in total.
template <class T>
std::vector<std::vector<T>> shuffle_product(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<std::vector<T>> out;
  std::vector<T> current;
  current.reserve(a.size() + b.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.push_back(current);
      return;
    }
    if (i < a.size()) {
      current.push_back(a[i]);
      self(self, i + 1, j);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b[j]);
      self(self, i, j + 1);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Iterated integrals of words over a fixed alphabet of forms, addressed by
/// 1-based letter indices.
///
/// The running integral of every suffix is memoized, so words sharing a tail
/// share its work. Not thread-safe; use one table per task.
class WordIntegralTable {
 public:
  WordIntegralTable(std::vector<Poly> alphabet, Interval iv);

  [[nodiscard]] const Interval& interval() const { return iv_; }
  [[nodiscard]] std::size_t alphabet_size() const { return alphabet_.size(); }

  /// int alphabet[w[0]-1] alphabet[w[1]-1] ... over the interval.
  Rational integral(std::span<const int> word);
  /// Same integral as a polynomial in the upper limit.
  const Poly& running(std::span<const int> word);

 private:
  std::vector<Poly> alphabet_;
  Interval iv_;
  std::map<std::vector<int>, Poly> memo_;
};

}  // namespace abel_center
