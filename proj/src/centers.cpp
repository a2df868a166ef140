#include "abel_center/centers.hpp"

#include <algorithm>
#include <string>

#include "abel_center/errors.hpp"
#include "abel_center/parallel.hpp"

namespace abel_center {

AbelEquation::AbelEquation(std::vector<Poly> s, Interval iv) : species(std::move(s)), interval(std::move(iv)) {
  while (!species.empty() && species.back().is_zero()) species.pop_back();
}

AbelEquation AbelEquation::from_abel_form(const Poly& a, const Poly& b, Interval interval) {
  return AbelEquation({-a, -b}, std::move(interval));
}

AbelEquation AbelEquation::pull_back(std::span<const Poly> base, const Poly& W, Interval interval) {
  const Poly dW = W.derivative();
  std::vector<Poly> species;
  species.reserve(base.size());
  for (const auto& b : base) species.push_back(compose(b, W) * dW);
  return AbelEquation(std::move(species), std::move(interval));
}

Poly AbelEquation::species_at(int i) const {
  return (i >= 1 && i <= species_count()) ? species[i - 1] : Poly{};
}

bool ReturnMapSeries::all_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

int ReturnMapSeries::first_nonzero() const {
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n] != 0) return static_cast<int>(n) + 1;
  }
  return 0;
}

double ReturnMapSeries::operator()(double y) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * y + it->get_d();
  return y + y * y * acc;
}

namespace {

// Power series in y as dense coefficient vectors, all of length `len`.
using Dense = std::vector<Rational>;

Dense dense_of(const ReturnMapSeries& m, std::size_t len) {
  Dense d(len);
  if (len > 1) d[1] = 1;
  for (std::size_t n = 0; n < m.coefficients.size() && n + 2 < len; ++n) d[n + 2] = m.coefficients[n];
  return d;
}

Dense mul_dense(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// outer(inner(y)) for series without constant term.
Dense compose_dense(const Dense& outer, const Dense& inner) {
  Dense acc(outer.size());
  for (std::size_t k = outer.size(); k-- > 0;) {
    acc = mul_dense(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

ReturnMapSeries map_of(const Dense& d, int order) {
  ReturnMapSeries m;
  m.coefficients.assign(d.begin() + 2, d.begin() + 2 + order);
  return m;
}

}  // namespace

ReturnMapSeries compose_maps(const ReturnMapSeries& outer, const ReturnMapSeries& inner) {
  const int order = std::min(outer.order(), inner.order());
  const std::size_t len = static_cast<std::size_t>(order) + 2;
  return map_of(compose_dense(dense_of(outer, len), dense_of(inner, len)), order);
}

ReturnMapSeries inverse_map(const ReturnMapSeries& map) {
  const int order = map.order();
  const std::size_t len = static_cast<std::size_t>(order) + 2;
  const Dense s = dense_of(map, len);
  Dense t(len);
  if (len > 1) t[1] = 1;
  for (std::size_t k = 2; k < len; ++k) {
    Dense st = compose_dense(s, t);
    t[k] = -st[k];
  }
  return map_of(t, order);
}

Rational composition_weight(std::span<const int> parts) {
  Rational w = 1;
  long tail = 0;
  for (std::size_t j = parts.size(); j-- > 1;) {
    tail += parts[j];
    w *= tail + 1;
  }
  return w;
}

std::vector<std::vector<int>> compositions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  if (n <= 0 || max_part <= 0) return out;
  // Depth-first over the first part, emulated with an explicit stack of parts.
  std::vector<int> parts{1};
  int sum = 1;
  while (!parts.empty()) {
    if (sum == n) {
      out.push_back(parts);
    } else if (sum < n) {
      parts.push_back(1);
      sum += 1;
      continue;
    }
    // Advance: bump the last part, popping exhausted ones.
    while (!parts.empty()) {
      int last = parts.back();
      parts.pop_back();
      sum -= last;
      if (last + 1 <= max_part && sum + last + 1 <= n) {
        parts.push_back(last + 1);
        sum += last + 1;
        break;
      }
    }
  }
  return out;
}

Rational brudnyi_coefficient(WordIntegralTable& table, int n) {
  if (n < 1) throw InputError("Brudnyi coefficient index must be >= 1");
  Rational c = 0;
  const int m = static_cast<int>(table.alphabet_size());
  for (const auto& word : compositions(n, m)) {
    Rational value = table.integral(word);
    if (value != 0) c += composition_weight(word) * value;
  }
  return c;
}

Rational brudnyi_coefficient(const AbelEquation& eq, int n) {
  WordIntegralTable table(eq.species, eq.interval);
  return brudnyi_coefficient(table, n);
}

YSeries abel_form(const AbelEquation& eq, int order) {
  std::vector<Poly> c(eq.species.size() + 2);
  for (std::size_t i = 0; i < eq.species.size(); ++i) c[i + 2] = eq.species[i];
  return YSeries(std::move(c), order + 1);
}

YSeries first_integral_series(const YSeries& f, const Rational& x0, int order) {
  if (order < 1) throw InputError("first-integral order must be >= 1");
  if (!f.coeff(0).is_zero()) throw InvalidEquation("first_integral_series needs f(x, 0) = 0");
  const int trunc = order + 1;
  const YSeries form = f.truncated(trunc);
  YSeries phi = YSeries::y_power(1, trunc);
  // S_1 = int w, S_{k+1} = int w * d/dy S_k; d/dy of an iterated integral
  // is the integral of D applied to its word.
  YSeries term = form.integral_from(x0);
  phi += term;
  for (int k = 2; k <= order; ++k) {
    // f has no y^0 term, so the unknown y^{trunc} coefficient of d/dy S_k
    // never reaches y^{trunc} in the product.
    YSeries slope(term.d_dy().coefficients(), trunc);
    term = (form * slope).integral_from(x0);
    if (term.is_zero()) break;
    phi += term;
  }
  return phi;
}

ReturnMapSeries return_map_via_first_integral(const AbelEquation& eq, int order) {
  if (order < 1) throw InputError("return map order must be >= 1");
  const YSeries phi = first_integral_series(abel_form(eq, order), eq.interval.x0, order);
  ReturnMapSeries m;
  m.coefficients.reserve(order);
  for (int n = 1; n <= order; ++n) m.coefficients.push_back(phi.coeff(n + 1)(eq.interval.x1));
  return m;
}

ReturnMapSeries return_map(const AbelEquation& eq, int order, bool verify) {
  if (order < 1) throw InputError("return map order must be >= 1");
  WordIntegralTable table(eq.species, eq.interval);
  ReturnMapSeries m;
  m.coefficients.reserve(order);
  for (int n = 1; n <= order; ++n) m.coefficients.push_back(brudnyi_coefficient(table, n));
  if (verify) {
    const ReturnMapSeries oracle = return_map_via_first_integral(eq, order);
    for (int n = 1; n <= order; ++n) {
      if (oracle.coefficients[n - 1] != m.coefficients[n - 1]) {
        throw OracleMismatch("c_" + std::to_string(n) + ": Brudnyi " + to_string(m.coefficients[n - 1]) +
                             " vs first integral " + to_string(oracle.coefficients[n - 1]));
      }
    }
  }
  return m;
}

NecessaryConditions necessary_conditions(const AbelEquation& eq) {
  if (eq.species_count() > 2) throw InvalidEquation("necessary_conditions takes at most two species");
  WordIntegralTable table({eq.species_at(1), eq.species_at(2)}, eq.interval);
  const int w1[] = {1};
  const int w2[] = {2};
  const int w12[] = {1, 2};
  return {table.integral(w1), table.integral(w2), table.integral(w12)};
}

UniversalVerdict universal_check(const AbelEquation& eq, int max_length, int max_weight) {
  if (max_length < 1) throw InputError("universal_check needs max_length >= 1");
  UniversalVerdict verdict;
  verdict.max_length = max_length;
  const int m = eq.species_count();
  verdict.max_weight = max_weight > 0 ? max_weight : max_length * std::max(m, 1);
  if (m == 0) return verdict;

  for (int len = 1; len <= max_length; ++len) {
    // Words of this length in lexicographic order, split by first letter
    // across workers; each worker keeps its own memo table.
    std::vector<std::vector<std::vector<int>>> buckets(m);
    std::vector<int> word(len, 1);
    for (;;) {
      int weight = 0;
      for (int letter : word) weight += letter;
      if (weight <= verdict.max_weight) buckets[word.front() - 1].push_back(word);
      int pos = len - 1;
      while (pos >= 0 && word[pos] == m) word[pos--] = 1;
      if (pos < 0) break;
      ++word[pos];
    }
    std::vector<std::optional<std::pair<std::size_t, Rational>>> first_hit(m);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t b) {
      WordIntegralTable table(eq.species, eq.interval);
      for (std::size_t i = 0; i < buckets[b].size(); ++i) {
        Rational v = table.integral(buckets[b][i]);
        if (v != 0) {
          first_hit[b] = std::make_pair(i, v);
          return;
        }
      }
    });
    for (int b = 0; b < m; ++b) {
      if (first_hit[b]) {
        verdict.words_checked += first_hit[b]->first + 1;
        verdict.universal_up_to = false;
        verdict.witness = buckets[b][first_hit[b]->first];
        verdict.witness_value = first_hit[b]->second;
        return verdict;
      }
      verdict.words_checked += buckets[b].size();
    }
  }
  return verdict;
}

}  // namespace abel_center
