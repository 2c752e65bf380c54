#include "hypercover/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hypercover {

using nlohmann::json;

std::string pointset_to_text(const PointSet& s) {
  std::ostringstream out;
  out << "n=" << s.dim() << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << s.point(i).str() << "\n";
  return out.str();
}

PointSet pointset_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int dim = 0;
  bool header_seen = false;
  PointSet s;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.rfind("n=", 0) != 0)
        throw std::invalid_argument("point set text must start with a n=<dim> header");
      dim = std::stoi(line.substr(2));
      s = PointSet(dim);
      header_seen = true;
      continue;
    }
    CubePoint p = point_from_string(line);
    if (p.n != dim) throw std::invalid_argument("point length does not match header: " + line);
    s.insert(p);
  }
  if (!header_seen) throw std::invalid_argument("point set text is missing the n=<dim> header");
  return s;
}

json pointset_to_json(const PointSet& s) {
  json arr = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) arr.push_back(s.point(i).str());
  return arr;
}

PointSet pointset_from_json(const json& j, int dim_hint) {
  if (!j.is_array()) throw std::invalid_argument("point set JSON must be an array of bitstrings");
  if (j.empty()) {
    if (dim_hint < 1)
      throw std::invalid_argument("empty point set JSON needs an explicit dimension");
    return PointSet(dim_hint);
  }
  PointSet s;
  for (const auto& item : j) {
    CubePoint p = point_from_string(item.get<std::string>());
    if (dim_hint > 0 && p.n != dim_hint)
      throw std::invalid_argument("point length disagrees with the requested dimension");
    s.insert(p);
  }
  return s;
}

PointSet pointset_from_string(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') return pointset_from_json(json::parse(text));
    break;
  }
  return pointset_from_text(text);
}

json family_to_json(const CoverFamily& f) {
  json planes = json::array();
  for (const auto& wp : f.planes()) {
    json plane;
    plane["a"] = wp.plane.a;
    plane["b"] = wp.plane.b;
    plane["mult"] = wp.mult;
    planes.push_back(std::move(plane));
  }
  return json{{"n", f.dim()}, {"planes", std::move(planes)}};
}

CoverFamily family_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("planes"))
    throw std::invalid_argument("cover family JSON needs \"n\" and \"planes\"");
  CoverFamily f(j.at("n").get<int>());
  for (const auto& plane : j.at("planes")) {
    std::vector<std::int64_t> a = plane.at("a").get<std::vector<std::int64_t>>();
    std::int64_t b = plane.at("b").get<std::int64_t>();
    std::int64_t mult = plane.value("mult", std::int64_t{1});
    f.add(Hyperplane(f.dim(), std::move(a), b), mult);
  }
  return f;
}

json report_to_json(const CoverReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"point", v.point.str()}, {"rule", v.rule}, {"count", v.count}});
  return json{{"ok", r.ok}, {"m", r.family_size}, {"violations", std::move(violations)}};
}

namespace {

template <class C>
std::string poly_text_impl(const SparsePoly<C>& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    std::string cs = c.str();
    if (first) {
      out << cs;
    } else if (!cs.empty() && cs[0] == '-') {
      out << " - " << cs.substr(1);
    } else {
      out << " + " << cs;
    }
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*x" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

struct ParsedTerm {
  std::string coeff;  // may be empty, meaning 1
  std::vector<std::pair<int, std::uint32_t>> powers;
};

// Grammar: poly := term (('+'|'-') term)*, term := coeff? ('*'? factor)*,
// factor := x<idx> ('^' <exp>)?, coeff := int ('/' int)?.
std::vector<std::pair<bool, ParsedTerm>> parse_poly_terms(const std::string& text, int& max_var) {
  std::vector<std::pair<bool, ParsedTerm>> terms;
  std::size_t i = 0;
  max_var = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  while (true) {
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("polynomial text ends mid-term");
    ParsedTerm term;
    bool saw_anything = false;
    while (i < text.size()) {
      skip_ws();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (text[i] == 'x') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("variable without index in polynomial text");
        int var = std::stoi(text.substr(start, i - start));
        std::uint32_t exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          start = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (start == i) throw std::invalid_argument("missing exponent in polynomial text");
          exp = static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start)));
        }
        if (var < 1) throw std::invalid_argument("variable index must be positive");
        max_var = std::max(max_var, var);
        term.powers.emplace_back(var, exp);
        saw_anything = true;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (!term.coeff.empty())
          throw std::invalid_argument("two coefficients in one polynomial term");
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
          ++i;
        term.coeff = text.substr(start, i - start);
        saw_anything = true;
        continue;
      }
      throw std::invalid_argument(std::string("unexpected character in polynomial text: ") + text[i]);
    }
    if (!saw_anything) throw std::invalid_argument("empty term in polynomial text");
    terms.emplace_back(negative, std::move(term));
    skip_ws();
    if (i >= text.size()) break;
    negative = text[i] == '-';
    if (text[i] != '+' && text[i] != '-')
      throw std::invalid_argument("expected + or - between polynomial terms");
    ++i;
  }
  return terms;
}

template <class C, class MakeCoeff>
SparsePoly<C> poly_from_text_impl(const std::string& text, int nvars, C zero,
                                  const MakeCoeff& make_coeff) {
  int max_var = 0;
  auto parsed = parse_poly_terms(text, max_var);
  if (nvars == 0) nvars = std::max(max_var, 1);
  if (max_var > nvars) throw std::invalid_argument("polynomial uses a variable past nvars");
  SparsePoly<C> out(nvars, zero);
  for (const auto& [neg, term] : parsed) {
    typename SparsePoly<C>::Exponents e(static_cast<std::size_t>(nvars), 0);
    for (auto [var, exp] : term.powers) e[static_cast<std::size_t>(var - 1)] += exp;
    C c = term.coeff.empty() ? make_coeff("1") : make_coeff(term.coeff);
    out.add_term(e, neg ? -c : c);
  }
  // Skip the all-zero special case "0": parse_poly_terms yields coeff 0 terms
  // which add_term drops, so nothing extra to do.
  return out;
}

}  // namespace

std::string poly_to_text(const RatPoly& poly) { return poly_text_impl(poly); }
std::string poly_to_text(const FpPoly& poly) { return poly_text_impl(poly); }

RatPoly rat_poly_from_text(const std::string& text, int nvars) {
  return poly_from_text_impl<Rational>(text, nvars, Rational(),
                                       [](const std::string& s) { return Rational::parse(s); });
}

FpPoly fp_poly_from_text(const std::string& text, std::uint32_t p, int nvars) {
  return poly_from_text_impl<Fp>(text, nvars, Fp::make(0, p), [p](const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fp::make(std::stoll(s), p);
    return Fp::make(std::stoll(s.substr(0, slash)), p) *
           Fp::make(std::stoll(s.substr(slash + 1)), p).inv();
  });
}

namespace {

template <class C>
json poly_json_impl(const SparsePoly<C>& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({{"e", e}, {"c", c.str()}});
  return json{{"n", poly.nvars()}, {"terms", std::move(terms)}};
}

}  // namespace

json poly_to_json(const RatPoly& poly) { return poly_json_impl(poly); }

json poly_to_json(const FpPoly& poly) {
  json j = poly_json_impl(poly);
  j["p"] = poly.zero_elem().p;
  return j;
}

RatPoly rat_poly_from_json(const json& j) {
  RatPoly out = rat_poly(j.at("n").get<int>());
  for (const auto& term : j.at("terms"))
    out.add_term(term.at("e").get<RatPoly::Exponents>(),
                 Rational::parse(term.at("c").get<std::string>()));
  return out;
}

FpPoly fp_poly_from_json(const json& j) {
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  FpPoly out = fp_poly(j.at("n").get<int>(), p);
  for (const auto& term : j.at("terms")) {
    const auto& c = term.at("c");
    std::int64_t value = c.is_string() ? std::stoll(c.get<std::string>()) : c.get<std::int64_t>();
    out.add_term(term.at("e").get<FpPoly::Exponents>(), Fp::make(value, p));
  }
  return out;
}

json tuples_to_json(const std::vector<std::vector<std::uint32_t>>& tuples) {
  json arr = json::array();
  for (const auto& t : tuples) arr.push_back(t);
  return arr;
}

std::vector<std::vector<std::uint32_t>> tuples_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tuple list JSON must be an array of arrays");
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& item : j) out.push_back(item.get<std::vector<std::uint32_t>>());
  return out;
}

json search_result_to_json(const SearchResult& r) {
  json j;
  j["found"] = r.found;
  j["lower_bound"] = r.lower_bound;
  j["max_size_searched"] = r.max_size_searched;
  j["exhausted"] = r.exhausted;
  if (r.found) {
    j["size"] = r.size;
    j["family"] = family_to_json(r.family);
    j["lex_minimal"] = r.lex_minimal;
    j["minimal_within_catalog"] = true;
  }
  return j;
}

}  // namespace hypercover
