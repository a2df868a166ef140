#include "abel_center/composition.hpp"

#include <numeric>

namespace abel_center {

Poly canonical_right_factor(const Poly& W) {
  if (W.is_constant()) return W;
  Poly out = W - Poly::constant(W.coeff(0));
  out *= Rational(1) / W.leading();
  return out;
}

std::optional<RightFactor> right_factor(const Poly& P, int d) {
  const int n = P.degree();
  if (d < 2 || n < d || n % d != 0) return std::nullopt;
  const int e = n / d;
  const Rational lead = P.leading();

  // Coefficients of W below x^d come from the top of P / lead, one at a
  // time: x^{n-j} in W^e is e * w_{d-j} plus terms in higher w's only.
  std::vector<Rational> w(static_cast<std::size_t>(d) + 1);
  w[d] = 1;
  for (int j = 1; j < d; ++j) {
    const Poly power = Poly(w).pow(static_cast<unsigned>(e));
    w[d - j] = (P.coeff(n - j) / lead - power.coeff(n - j)) / e;
  }
  const Poly W(w);

  // W-adic expansion; every digit must be a constant.
  std::vector<Rational> digits;
  Poly rest = P;
  while (!rest.is_zero()) {
    auto [quot, rem] = divmod(rest, W);
    if (!rem.is_constant()) return std::nullopt;
    digits.push_back(rem.coeff(0));
    rest = std::move(quot);
  }
  Poly left(std::move(digits));
  if (compose(left, W) != P) return std::nullopt;
  return RightFactor{W, std::move(left)};
}

std::optional<DecompositionResult> common_factor(const Poly& P, const Poly& Q, const Interval& iv) {
  if (P.degree() < 2 || Q.degree() < 2) return std::nullopt;
  const int g = std::gcd(P.degree(), Q.degree());
  for (int d = g; d >= 2; --d) {
    if (g % d != 0) continue;
    auto fp = right_factor(P, d);
    if (!fp) continue;
    auto fq = right_factor(Q, d);
    if (!fq || fq->W != fp->W) continue;
    const bool closes = fp->W(iv.x0) == fp->W(iv.x1);
    return DecompositionResult{fp->W, fp->left, fq->left, closes};
  }
  return std::nullopt;
}

std::vector<Rational> moments(const Poly& q, const Poly& A, const Interval& iv, int kmax) {
  std::vector<Rational> out;
  if (kmax < 0) return out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  Poly integrand = q;
  for (int k = 0; k <= kmax; ++k) {
    out.push_back(definite_integral(integrand, iv.x0, iv.x1));
    integrand *= A;
  }
  return out;
}

int default_kmax(const Poly& A, const Poly& q) {
  const int deg_Q = q.is_zero() ? 0 : q.degree() + 1;
  return std::max(A.degree(), 0) * (deg_Q + 1);
}

PccVerdict pcc_check(const Poly& A, const Poly& B, const Interval& iv) {
  PccVerdict v;
  const Poly a = A.derivative();
  v.a_nonzero_at_x0 = a(iv.x0) != 0;
  v.a_nonzero_at_x1 = a(iv.x1) != 0;

  auto closing = [&](const Poly& W) { return W(iv.x0) == W(iv.x1); };
  auto accept = [&](Poly W, Poly A_left, Poly B_left, bool degenerate, std::string note) {
    v.holds = true;
    v.W = std::move(W);
    v.A_left = std::move(A_left);
    v.B_left = std::move(B_left);
    v.degenerate = degenerate;
    v.note = std::move(note);
  };

  if (iv.x0 == iv.x1) {
    accept(Poly::identity(), A, B, true, "one-point interval: every polynomial closes");
    return v;
  }
  if (A.is_constant() && B.is_constant()) {
    Poly W = canonical_right_factor(Poly{-iv.x0, 1} * Poly{-iv.x1, 1});
    accept(std::move(W), A, B, true, "both polynomials constant");
    return v;
  }
  if (A.is_constant() || B.is_constant()) {
    const Poly& moving = A.is_constant() ? B : A;
    const Poly W = canonical_right_factor(moving);
    if (!closing(W)) {
      v.degenerate = true;
      v.note = "one polynomial constant and the other does not close";
      return v;
    }
    // moving = lead * W + moving(0)
    const Poly left{moving.coeff(0), moving.leading()};
    if (A.is_constant()) {
      accept(W, A, left, true, "A constant");
    } else {
      accept(W, left, B, true, "B constant");
    }
    return v;
  }
  auto found = common_factor(A, B, iv);
  if (!found) {
    v.note = "no common right factor";
    return v;
  }
  if (!found->closes) {
    v.note = "maximal common right factor does not close";
    return v;
  }
  accept(found->W, found->P_left, found->Q_left, false, "common right factor closes");
  return v;
}

}  // namespace abel_center
