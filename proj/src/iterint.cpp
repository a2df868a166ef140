#include "abel_center/iterint.hpp"

#include <string>

#include "abel_center/errors.hpp"

namespace abel_center {

namespace {

// int_{x0}^{x} f(t) inner(t) dt
Poly integrate_from(const Poly& integrand, const Rational& x0) {
  Poly prim = integrand.antiderivative();
  return prim - Poly::constant(prim(x0));
}

}  // namespace

Poly iterated_integral_poly(std::span<const Poly> word, const Rational& x0) {
  Poly running = Poly::constant(1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) running = integrate_from(*it * running, x0);
  return running;
}

Rational iterated_integral(std::span<const Poly> word, const Interval& iv) {
  if (word.empty()) return 1;
  if (iv.x0 == iv.x1) return 0;
  return iterated_integral_poly(word, iv.x0)(iv.x1);
}

WordIntegralTable::WordIntegralTable(std::vector<Poly> alphabet, Interval iv)
    : alphabet_(std::move(alphabet)), iv_(std::move(iv)) {}

const Poly& WordIntegralTable::running(std::span<const int> word) {
  std::vector<int> key(word.begin(), word.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Poly value;
  if (word.empty()) {
    value = Poly::constant(1);
  } else {
    const int letter = word.front();
    if (letter < 1 || static_cast<std::size_t>(letter) > alphabet_.size()) {
      throw InputError("word letter " + std::to_string(letter) + " outside alphabet of size " +
                       std::to_string(alphabet_.size()));
    }
    const Poly& tail = running(word.subspan(1));
    value = integrate_from(alphabet_[letter - 1] * tail, iv_.x0);
  }
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Rational WordIntegralTable::integral(std::span<const int> word) {
  if (word.empty()) return 1;
  if (iv_.x0 == iv_.x1) return 0;
  return running(word)(iv_.x1);
}

}  // namespace abel_center
