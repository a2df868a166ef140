#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "abel_center/centers.hpp"
#include "abel_center/composition.hpp"
#include "abel_center/darboux.hpp"
#include "abel_center/melnikov.hpp"
#include "json.hpp"

namespace abel_center {

using nlohmann::json;

/// Parses JSON text; syntax errors become InputError naming `source` and the
/// byte offset.
json parse_json_text(std::string_view text, std::string_view source = "input");
json read_json_file(const std::string& path);

/// FNV-1a 64-bit digest of `text` as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

json to_json(const Rational& value);
/// Accepts "num/den" strings and integer literals.
Rational rational_from_json(const json& j);

/// Array of rationals, index = degree.
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"trunc": N, "coeffs": [Poly, ...]}; "trunc" is "exact" for polynomials.
json to_json(const YSeries& s);
/// Also accepts a bare array of Poly as an exact bivariate polynomial.
YSeries yseries_from_json(const json& j);

Interval interval_from_json(const json& j);
json to_json(const Interval& iv);

/// {"species": [Poly, ...], "interval": [x0, x1]}
AbelEquation equation_from_json(const json& j);
json to_json(const AbelEquation& eq);

/// {"a": Poly, "orders": [{"p": Poly, "q": Poly}, ...], "interval": [x0, x1]}
PerturbedAbel system_from_json(const json& j);
json to_json(const PerturbedAbel& sys);

/// {"P": YSeries, "Q": YSeries}
Foliation foliation_from_json(const json& j);
json to_json(const Foliation& fol);

/// {"factors": [{"f": YSeries, "exponent": Rational}, ...]}
DarbouxIntegral integral_from_json(const json& j);
json to_json(const DarbouxIntegral& H);

json to_json(const ReturnMapSeries& m);
json to_json(const MomentSeries& m);
json to_json(const UniversalVerdict& v);
json to_json(const PccVerdict& v);
json to_json(const MasterSystem& m);
json to_json(const GgsCertificate& c);

}  // namespace abel_center
