#include "abel_center/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "abel_center/errors.hpp"

namespace abel_center {

json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("expected a rational as a string or an integer, got " + j.dump());
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a polynomial as an array of coefficients, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly(std::move(c));
}

json to_json(const YSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"trunc", s.exact() ? json("exact") : json(s.trunc())}, {"coeffs", coeffs}};
}

YSeries yseries_from_json(const json& j) {
  const json* coeffs = &j;
  int trunc = YSeries::kExact;
  if (j.is_object()) {
    coeffs = &field(j, "coeffs");
    const json& t = field(j, "trunc");
    if (t.is_number_integer()) {
      trunc = t.get<int>();
      if (trunc < 0) throw InputError("trunc must be >= 0");
    } else if (!(t.is_string() && t.get<std::string>() == "exact")) {
      throw InputError("trunc must be an integer or \"exact\"");
    }
  }
  if (!coeffs->is_array()) throw InputError("expected an array of polynomials, got " + coeffs->dump());
  std::vector<Poly> c;
  for (const auto& v : *coeffs) c.push_back(poly_from_json(v));
  return YSeries(std::move(c), trunc);
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("interval must be [x0, x1]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Interval& iv) { return json::array({to_json(iv.x0), to_json(iv.x1)}); }

AbelEquation equation_from_json(const json& j) {
  const json& s = field(j, "species");
  if (!s.is_array()) throw InputError("species must be an array of polynomials");
  std::vector<Poly> species;
  for (const auto& v : s) species.push_back(poly_from_json(v));
  return AbelEquation(std::move(species), interval_from_json(field(j, "interval")));
}

json to_json(const AbelEquation& eq) {
  json species = json::array();
  for (const auto& a : eq.species) species.push_back(to_json(a));
  return {{"species", species}, {"interval", to_json(eq.interval)}};
}

PerturbedAbel system_from_json(const json& j) {
  PerturbedAbel sys;
  sys.a = poly_from_json(field(j, "a"));
  sys.interval = interval_from_json(field(j, "interval"));
  const json& orders = field(j, "orders");
  if (!orders.is_array()) throw InputError("orders must be an array");
  for (const auto& o : orders) {
    PerturbationOrder w;
    if (o.contains("p")) w.p = poly_from_json(o["p"]);
    if (o.contains("q")) w.q = poly_from_json(o["q"]);
    sys.orders.push_back(std::move(w));
  }
  return sys;
}

json to_json(const PerturbedAbel& sys) {
  json orders = json::array();
  for (const auto& w : sys.orders) orders.push_back({{"p", to_json(w.p)}, {"q", to_json(w.q)}});
  return {{"a", to_json(sys.a)}, {"orders", orders}, {"interval", to_json(sys.interval)}};
}

Foliation foliation_from_json(const json& j) {
  return {yseries_from_json(field(j, "P")), yseries_from_json(field(j, "Q"))};
}

json to_json(const Foliation& fol) { return {{"P", to_json(fol.P)}, {"Q", to_json(fol.Q)}}; }

DarbouxIntegral integral_from_json(const json& j) {
  const json& factors = field(j, "factors");
  if (!factors.is_array()) throw InputError("factors must be an array");
  DarbouxIntegral H;
  for (const auto& f : factors) {
    H.factors.push_back({yseries_from_json(field(f, "f")), rational_from_json(field(f, "exponent"))});
  }
  return H;
}

json to_json(const DarbouxIntegral& H) {
  json factors = json::array();
  for (const auto& [f, e] : H.factors) factors.push_back({{"f", to_json(f)}, {"exponent", to_json(e)}});
  return {{"factors", factors}};
}

namespace {

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

json to_json(const ReturnMapSeries& m) { return rationals(m.coefficients); }

json to_json(const MomentSeries& m) {
  json out = {{"constant_term", to_json(m.constant_term)},
              {"inverse_h_term", to_json(m.inverse_h_term)},
              {"tail", rationals(m.tail)},
              {"tail_offset", m.tail_offset},
              {"kmax", m.kmax},
              {"coefficients_in_inverse_h", rationals(m.coefficients())},
              {"forced", m.forced}};
  out["warnings"] = m.warnings;
  return out;
}

json to_json(const UniversalVerdict& v) {
  json out = {{"universal_up_to", v.universal_up_to},
              {"max_length", v.max_length},
              {"max_weight", v.max_weight},
              {"words_checked", v.words_checked}};
  if (!v.universal_up_to) {
    out["witness"] = v.witness;
    out["witness_value"] = to_json(v.witness_value);
  }
  return out;
}

json to_json(const PccVerdict& v) {
  json out = {{"holds", v.holds},
              {"degenerate", v.degenerate},
              {"a_nonzero_at_x0", v.a_nonzero_at_x0},
              {"a_nonzero_at_x1", v.a_nonzero_at_x1},
              {"note", v.note}};
  if (v.W) {
    out["W"] = to_json(*v.W);
    out["A_left"] = to_json(v.A_left);
    out["B_left"] = to_json(v.B_left);
  }
  return out;
}

json to_json(const MasterSystem& m) {
  return {{"k", m.k},
          {"r", to_json(m.r)},
          {"H", to_json(m.H)},
          {"reduced_foliation", to_json(m.reduced)},
          {"scale", to_json(m.scale)},
          {"r2", to_json(m.r2)},
          {"r4", to_json(m.r4)},
          {"lienard_p", to_json(m.lienard_p)},
          {"lienard_q", to_json(m.lienard_q)},
          {"lienard_foliation", to_json(m.lienard)},
          {"lienard_integral", to_json(m.lienard_integral)},
          {"abel_foliation", to_json(m.abel)},
          {"abel_integral", to_json(m.abel_integral)}};
}

json to_json(const GgsCertificate& c) {
  json legs = json::object();
  legs["coefficients"] = {{"passed", c.coefficients_vanish}, {"order", c.order}, {"c", to_json(c.coefficients)}};
  json boundary = {{"passed", c.boundary_identity}};
  if (c.h_at_minus_one) boundary["H_at_minus_one"] = to_json(*c.h_at_minus_one);
  if (c.h_at_plus_one) boundary["H_at_plus_one"] = to_json(*c.h_at_plus_one);
  legs["boundary"] = boundary;
  legs["composition"] = {{"passed", c.no_common_factor}};
  legs["witness"] = {{"passed", c.has_witness}, {"search", to_json(c.universality)}};
  json samples = json::array();
  for (const auto& s : c.samples) samples.push_back({{"y0", s.y0}, {"y1_approx", s.y1}});
  legs["numeric"] = {{"passed", c.numeric_identity}, {"samples", samples}, {"max_defect_approx", c.max_defect}};
  return {{"equation", to_json(c.equation)},
          {"integral", to_json(c.integral)},
          {"legs", legs},
          {"failed_leg", c.failed_leg}};
}

}  // namespace abel_center
