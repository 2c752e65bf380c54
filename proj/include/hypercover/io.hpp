#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypercover/planes.hpp"
#include "hypercover/poly.hpp"
#include "hypercover/search.hpp"

namespace hypercover {

// Point sets. Text: a header "n=<dim>" then one bitstring per line.
// JSON: an array of bitstrings. Both round-trip bit-exactly.
std::string pointset_to_text(const PointSet& s);
PointSet pointset_from_text(const std::string& text);
nlohmann::json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const nlohmann::json& j, int dim_hint = 0);

/// Reads either format, keying on the leading character.
PointSet pointset_from_string(const std::string& text);

// Cover families: {"n":…, "planes":[{"a":[…],"b":…,"mult":…}]}.
// Readers ignore extra keys, so producers may annotate (e.g. "provenance").
nlohmann::json family_to_json(const CoverFamily& f);
CoverFamily family_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CoverReport& r);

// Polynomials. Text: "c * x1^a1*…*xn^an" terms joined with +/-.
// JSON: {"n":…, "terms":[{"e":[…],"c":"num/den"}]}, plus "p" for Z_p.
std::string poly_to_text(const RatPoly& poly);
std::string poly_to_text(const FpPoly& poly);
RatPoly rat_poly_from_text(const std::string& text, int nvars = 0);
FpPoly fp_poly_from_text(const std::string& text, std::uint32_t p, int nvars = 0);
nlohmann::json poly_to_json(const RatPoly& poly);
nlohmann::json poly_to_json(const FpPoly& poly);
RatPoly rat_poly_from_json(const nlohmann::json& j);
FpPoly fp_poly_from_json(const nlohmann::json& j);

// Tuple lists over Z_p, as JSON arrays of arrays of integers.
nlohmann::json tuples_to_json(const std::vector<std::vector<std::uint32_t>>& tuples);
std::vector<std::vector<std::uint32_t>> tuples_from_json(const nlohmann::json& j);

nlohmann::json search_result_to_json(const SearchResult& r);

}  // namespace hypercover
