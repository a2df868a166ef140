#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel_center/iterint.hpp"

namespace abel_center {

/// Affine normalization of a right factor: monic with zero constant term.
/// Constants are returned unchanged.
Poly canonical_right_factor(const Poly& W);

struct RightFactor {
  Poly W;     ///< canonical, degree d
  Poly left;  ///< P = left o W
};

/// The canonical degree-d right composition factor of P, if one exists.
/// Needs 2 <= d <= deg P with d | deg P; anything else gives nullopt.
std::optional<RightFactor> right_factor(const Poly& P, int d);

struct DecompositionResult {
  Poly W;
  Poly P_left;
  Poly Q_left;
  /// W(x0) == W(x1)
  bool closes = false;
};

/// Common right factor of maximal degree >= 2, trying the divisors of
/// gcd(deg P, deg Q) from the top.
std::optional<DecompositionResult> common_factor(const Poly& P, const Poly& Q, const Interval& iv);

/// m_k = int q A^k over the interval for k = 0..kmax.
std::vector<Rational> moments(const Poly& q, const Poly& A, const Interval& iv, int kmax);

/// deg A * (deg Q + 1) with Q the primitive of q; a heuristic bound.
int default_kmax(const Poly& A, const Poly& q);

struct PccVerdict {
  bool holds = false;
  /// Set when holds: A = A_left o W, B = B_left o W, W(x0) == W(x1).
  std::optional<Poly> W;
  Poly A_left;
  Poly B_left;
  /// A constant or zero polynomial, or a one-point interval, decided the case.
  bool degenerate = false;
  /// a = A'; the composition theorem assumes a(x0) != 0 and a(x1) != 0.
  bool a_nonzero_at_x0 = false;
  bool a_nonzero_at_x1 = false;
  std::string note;
};

/// Polynomial composition condition for (A, B) on the interval.
PccVerdict pcc_check(const Poly& A, const Poly& B, const Interval& iv);

}  // namespace abel_center
