#include "abel_center/poly.hpp"

#include <algorithm>

#include "abel_center/errors.hpp"

namespace abel_center {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { strip(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { strip(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Poly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    a[k + 1] = coeffs_[k] / static_cast<long>(k + 1);
  }
  return Poly(std::move(a));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  strip();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  auto c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw InputError("polynomial division by zero");
  const int dd = denominator.degree();
  if (numerator.degree() < dd) return {Poly{}, numerator};
  std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd));
  const Rational lead = denominator.leading();
  auto den = denominator.coefficients();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Rational definite_integral(const Poly& u, const Rational& x0, const Rational& x1) {
  if (x0 == x1) return 0;
  Poly prim = u.antiderivative();
  return prim(x1) - prim(x0);
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& a = c[k];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace abel_center
