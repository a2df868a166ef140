#include "abel_center/yseries.hpp"

#include <algorithm>
#include <string>

#include "abel_center/errors.hpp"

namespace abel_center {

namespace {
int add_trunc(int t, int m) { return t >= YSeries::kExact ? YSeries::kExact : t + m; }
}  // namespace

YSeries::YSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw InputError("negative truncation order");
}

YSeries::YSeries(std::vector<Poly> coefficients, int trunc) : coeffs_(std::move(coefficients)), trunc_(trunc) {
  if (trunc < 0) throw InputError("negative truncation order");
  normalize();
}

YSeries YSeries::y_power(int power, int trunc) {
  std::vector<Poly> c(static_cast<std::size_t>(power) + 1);
  c[power] = Poly::constant(1);
  return {std::move(c), trunc};
}

void YSeries::normalize() {
  if (!exact() && coeffs_.size() > static_cast<std::size_t>(trunc_) + 1) coeffs_.resize(trunc_ + 1);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly YSeries::coeff(int i) const {
  return (i >= 0 && static_cast<std::size_t>(i) < coeffs_.size()) ? coeffs_[i] : Poly{};
}

YSeries YSeries::truncated(int trunc) const { return {coeffs_, std::min(trunc, trunc_)}; }

YSeries& YSeries::operator+=(const YSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

YSeries& YSeries::operator-=(const YSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

YSeries operator-(YSeries s) {
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

YSeries operator*(const YSeries& lhs, const YSeries& rhs) {
  const int trunc = std::min(lhs.trunc_, rhs.trunc_);
  if (lhs.is_zero() || rhs.is_zero()) return YSeries(trunc);
  std::size_t len = lhs.coeffs_.size() + rhs.coeffs_.size() - 1;
  if (trunc < YSeries::kExact) len = std::min(len, static_cast<std::size_t>(trunc) + 1);
  std::vector<Poly> out(len);
  for (std::size_t i = 0; i < lhs.coeffs_.size() && i < len; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < len; ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return {std::move(out), trunc};
}

YSeries operator*(YSeries lhs, const Poly& rhs) {
  for (auto& c : lhs.coeffs_) c *= rhs;
  lhs.normalize();
  return lhs;
}

YSeries YSeries::pow(unsigned exponent) const {
  YSeries result({Poly::constant(1)}, trunc_);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

YSeries YSeries::d_dy() const {
  std::vector<Poly> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return {std::move(out), exact() ? kExact : std::max(trunc_ - 1, 0)};
}

YSeries YSeries::d_dx() const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.derivative());
  return {std::move(out), trunc_};
}

YSeries YSeries::antiderivative_x() const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.antiderivative());
  return {std::move(out), trunc_};
}

YSeries YSeries::integral_from(const Rational& base) const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Poly prim = c.antiderivative();
    out.push_back(prim - Poly::constant(prim(base)));
  }
  return {std::move(out), trunc_};
}

YSeries YSeries::divide_by_y_power(int m) const {
  for (int i = 0; i < m && static_cast<std::size_t>(i) < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      throw DivisibilityError("series not divisible by y^" + std::to_string(m) + ": coefficient of y^" +
                              std::to_string(i) + " is " + to_string(coeffs_[i]));
    }
  }
  if (!exact() && m > trunc_) throw DivisibilityError("division by y^" + std::to_string(m) + " exceeds truncation");
  std::vector<Poly> out;
  for (std::size_t i = static_cast<std::size_t>(m); i < coeffs_.size(); ++i) out.push_back(coeffs_[i]);
  return {std::move(out), exact() ? kExact : trunc_ - m};
}

YSeries YSeries::mul_by_y_power(int m) const {
  std::vector<Poly> out(static_cast<std::size_t>(m));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return {std::move(out), add_trunc(trunc_, m)};
}

std::vector<Rational> YSeries::at_x(const Rational& x) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c(x));
  return out;
}

YSeries YSeries::compose_x(const Poly& r) const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(compose(c, r));
  return {std::move(out), trunc_};
}

YSeries YSeries::substitute_y(const Poly& shift, const Poly& scale) const {
  if (!exact()) throw InvariantError("substitute_y needs an exact (bivariate) series");
  const YSeries lin = bivariate({shift, scale});
  YSeries acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

YSeries YSeries::reversed(int degree) const {
  if (!exact() || y_degree() > degree) throw InvariantError("reversed needs an exact series of y-degree <= degree");
  std::vector<Poly> out(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[degree - i] = coeffs_[i];
  return bivariate(std::move(out));
}

}  // namespace abel_center
