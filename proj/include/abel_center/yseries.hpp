#pragma once

#include <climits>
#include <vector>

#include "abel_center/poly.hpp"

namespace abel_center {

/// Truncated power series in y whose coefficients are polynomials in x.
///
/// `trunc()` is the highest y-power that is known; terms beyond it are
/// dropped. Binary operations produce the smaller truncation of their
/// operands. A series built with `YSeries::kExact` is a genuine polynomial
/// in (x, y); that is how bivariate polynomials are represented.
///
/// A one-form phi(x, y) dx is stored as its coefficient phi alone.
class YSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  explicit YSeries(int trunc = kExact);
  YSeries(std::vector<Poly> coefficients, int trunc);

  /// Polynomial in (x, y): coefficients[i] multiplies y^i.
  static YSeries bivariate(std::vector<Poly> coefficients) { return {std::move(coefficients), kExact}; }
  /// y^power (times 1), truncated at `trunc`.
  static YSeries y_power(int power, int trunc = kExact);
  static YSeries constant(const Poly& c, int trunc = kExact) { return {{c}, trunc}; }

  [[nodiscard]] int trunc() const { return trunc_; }
  [[nodiscard]] bool exact() const { return trunc_ >= kExact; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Highest y-power carrying a nonzero coefficient; -1 for zero.
  [[nodiscard]] int y_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Poly>& coefficients() const { return coeffs_; }
  /// Coefficient of y^i; zero past the stored terms.
  [[nodiscard]] Poly coeff(int i) const;

  /// Same terms, lower truncation.
  [[nodiscard]] YSeries truncated(int trunc) const;

  YSeries& operator+=(const YSeries& other);
  YSeries& operator-=(const YSeries& other);
  friend YSeries operator+(YSeries lhs, const YSeries& rhs) { return lhs += rhs; }
  friend YSeries operator-(YSeries lhs, const YSeries& rhs) { return lhs -= rhs; }
  friend YSeries operator-(YSeries s);
  friend YSeries operator*(const YSeries& lhs, const YSeries& rhs);
  friend YSeries operator*(YSeries lhs, const Poly& rhs);
  friend YSeries operator*(const Poly& lhs, YSeries rhs) { return std::move(rhs) * lhs; }
  friend YSeries operator*(YSeries lhs, const Rational& rhs) { return std::move(lhs) * Poly::constant(rhs); }

  /// Equal terms and equal truncation.
  friend bool operator==(const YSeries&, const YSeries&) = default;

  /// Repeated truncated multiplication.
  [[nodiscard]] YSeries pow(unsigned exponent) const;

  /// The operator D: partial derivative in y. Lowers truncation by one.
  [[nodiscard]] YSeries d_dy() const;
  [[nodiscard]] YSeries d_dx() const;
  /// Per-coefficient primitive in x with zero constant term.
  [[nodiscard]] YSeries antiderivative_x() const;
  /// Per-coefficient primitive in x vanishing at x = base.
  [[nodiscard]] YSeries integral_from(const Rational& base) const;

  /// Exact division by y^m. Throws DivisibilityError when one of the m lowest
  /// coefficients is nonzero.
  [[nodiscard]] YSeries divide_by_y_power(int m) const;
  [[nodiscard]] YSeries mul_by_y_power(int m) const;

  /// Coefficients evaluated at x: a series in y over the rationals.
  [[nodiscard]] std::vector<Rational> at_x(const Rational& x) const;
  /// Pull back along x -> r(x) in every coefficient.
  [[nodiscard]] YSeries compose_x(const Poly& r) const;
  /// Substitute y -> shift(x) + scale(x) * y. Only for exact series.
  [[nodiscard]] YSeries substitute_y(const Poly& shift, const Poly& scale) const;
  /// y^degree * s(x, 1/y). Requires an exact series with y_degree() <= degree.
  [[nodiscard]] YSeries reversed(int degree) const;

 private:
  void normalize();

  std::vector<Poly> coeffs_;
  int trunc_;
};

}  // namespace abel_center
