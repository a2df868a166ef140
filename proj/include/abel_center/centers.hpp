#pragma once

#include <optional>
#include <span>
#include <vector>

#include "abel_center/iterint.hpp"
#include "abel_center/yseries.hpp"

namespace abel_center {

/// dy/dx + sum_i a_i(x) y^{i+1} = 0 on an interval; species[0] is a_1.
///
/// Trailing zero species are stripped, so the zero equation has no species.
struct AbelEquation {
  AbelEquation() = default;
  AbelEquation(std::vector<Poly> species, Interval interval);

  /// dy/dx = a(x) y^2 + b(x) y^3 is ingested as a_1 = -a, a_2 = -b.
  static AbelEquation from_abel_form(const Poly& a, const Poly& b, Interval interval);

  /// Pull back of dy/dw + sum_i b_i(w) y^{i+1} = 0 along w = W(x):
  /// a_i(x) = b_i(W(x)) W'(x).
  static AbelEquation pull_back(std::span<const Poly> base, const Poly& W, Interval interval);

  [[nodiscard]] int species_count() const { return static_cast<int>(species.size()); }
  /// a_i for 1 <= i; zero past the last species.
  [[nodiscard]] Poly species_at(int i) const;

  std::vector<Poly> species;
  Interval interval;
};

/// Coefficients c_1..c_N of phi(x0; x1, y) = y + sum c_n y^{n+1}.
///
/// phi(x0; x1, .) sends the value of a solution at x1 to its value at x0;
/// the forward transport x0 -> x1 is its compositional inverse.
struct ReturnMapSeries {
  std::vector<Rational> coefficients;

  [[nodiscard]] int order() const { return static_cast<int>(coefficients.size()); }
  [[nodiscard]] bool all_zero() const;
  /// 1-based index of the first nonzero c_n, or 0.
  [[nodiscard]] int first_nonzero() const;
  [[nodiscard]] double operator()(double y) const;

  friend bool operator==(const ReturnMapSeries&, const ReturnMapSeries&) = default;
};

/// outer o inner, truncated at the smaller order.
ReturnMapSeries compose_maps(const ReturnMapSeries& outer, const ReturnMapSeries& inner);
/// Compositional inverse to the same order.
ReturnMapSeries inverse_map(const ReturnMapSeries& map);

/// (i_k + 1)(i_k + i_{k-1} + 1) ... (i_k + ... + i_2 + 1); 1 for one part.
Rational composition_weight(std::span<const int> parts);

/// All ordered compositions of n into parts 1..max_part, generated
/// iteratively in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int max_part);

/// c_n by Brudnyi's formula: sum over compositions (i_1..i_k) of n of
/// composition_weight * int a_{i_1} ... a_{i_k}.
Rational brudnyi_coefficient(const AbelEquation& eq, int n);
Rational brudnyi_coefficient(WordIntegralTable& table, int n);

/// f(x, y) = sum_i a_i(x) y^{i+1}, truncated at y^{order+1}.
YSeries abel_form(const AbelEquation& eq, int order);

/// First integral phi(x0; x, y) = y + int w + int w D w + ... of dy + f dx = 0
/// with w = f dx, summed over `order` terms and truncated at y^{order+1}.
/// x stays symbolic. Requires f(x, 0) = 0.
YSeries first_integral_series(const YSeries& f, const Rational& x0, int order);

/// c_1..c_N via Brudnyi's formula. With `verify`, recomputes them through
/// first_integral_series and throws OracleMismatch on any difference.
ReturnMapSeries return_map(const AbelEquation& eq, int order, bool verify = false);
/// c_1..c_N read off first_integral_series at x = x1.
ReturnMapSeries return_map_via_first_integral(const AbelEquation& eq, int order);

struct NecessaryConditions {
  Rational int_a1;
  Rational int_a2;
  Rational int_a1_a2;
  [[nodiscard]] bool satisfied() const { return int_a1 == 0 && int_a2 == 0 && int_a1_a2 == 0; }
};

/// int a_1, int a_2, int a_1 a_2 over the interval; all vanish at a center.
/// Throws InvalidEquation for more than two species.
NecessaryConditions necessary_conditions(const AbelEquation& eq);

struct UniversalVerdict {
  bool universal_up_to = true;
  int max_length = 0;
  int max_weight = 0;
  std::size_t words_checked = 0;
  /// Species indices of the first nonvanishing word, when not universal.
  std::vector<int> witness;
  Rational witness_value;
};

/// Evaluates every word over the species of length <= max_length and weight
/// (sum of indices) <= max_weight, shortest first then lexicographic. A
/// non-positive max_weight means no weight bound.
UniversalVerdict universal_check(const AbelEquation& eq, int max_length, int max_weight = 0);

inline constexpr int kDefaultCertificationOrder = 10;
inline constexpr int kDefaultWordLength = 4;

}  // namespace abel_center
