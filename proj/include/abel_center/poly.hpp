#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abel_center/rational.hpp"

namespace abel_center {

/// Dense univariate polynomial in x over the rationals.
///
/// Canonical form: the coefficient vector (index = degree) never ends in a
/// zero, so the zero polynomial is the empty vector and structural equality
/// is mathematical equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  /// The identity polynomial x.
  static Poly identity();

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;

  [[nodiscard]] Poly derivative() const;
  /// Primitive with zero constant term.
  [[nodiscard]] Poly antiderivative() const;
  [[nodiscard]] Poly pow(unsigned exponent) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

/// outer(inner(x)).
Poly compose(const Poly& outer, const Poly& inner);

/// Euclidean division; throws InputError when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& denominator);

/// Integral of u over [x0, x1] (oriented).
Rational definite_integral(const Poly& u, const Rational& x0, const Rational& x1);

/// Human-readable form such as "2*x^3 - x + 1/2".
std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace abel_center
