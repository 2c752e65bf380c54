// hypercover: construct, verify, and search hyperplane / polynomial covers of
// the Boolean hypercube, plus the prime-field toolkit (restricted sumsets,
// Chevalley-Warning search, Nullstellensatz witnesses).
//
// Exit codes: 0 = ok/verified, 1 = verification failed (report on stdout),
// 2 = usage/range error (one-line diagnostic on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypercover/complexity.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/fieldkit.hpp"
#include "hypercover/io.hpp"
#include "hypercover/search.hpp"

using nlohmann::json;
using namespace hypercover;

namespace {

struct Output {
  std::string format = "json";  // json | table
  std::string path;             // empty = stdout

  void emit(const json& j, const std::string& table) const {
    std::string body = format == "json" ? j.dump(2) + "\n" : table;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw std::invalid_argument("cannot open output file: " + path);
      out << body;
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

std::string family_table(const CoverFamily& f) {
  std::ostringstream out;
  out << "n = " << f.dim() << ", m = " << f.size() << "\n";
  for (const auto& wp : f.planes()) {
    out << "  [";
    for (std::int64_t c : wp.plane.a) out << " " << c;
    out << " | " << wp.plane.b << " ]";
    if (wp.mult > 1) out << " x" << wp.mult;
    out << "\n";
  }
  return out.str();
}

std::string report_table(const CoverReport& r) {
  std::ostringstream out;
  out << (r.ok ? "OK" : "FAILED") << "  (m = " << r.family_size << ")\n";
  for (const auto& v : r.violations)
    out << "  " << v.point.str() << "  expected " << v.rule << "  got " << v.count << "\n";
  return out.str();
}

json index_witness_json(const IndexWitness& w) {
  return json{{"v", w.v.str()}, {"I", w.coords}};
}

int run_construct(const std::string& mode, int n, int k, int t, int ell, int j_level,
                  const Output& out) {
  json result;
  CoverFamily family;
  std::string table_extra;
  if (mode == "layer-cover") {
    family = layer_complement_cover(n, k, t);
    result = family_to_json(family);
    result["provenance"] = "layer-complement-cover(max{k,n-k}+2t-2)";
  } else if (mode == "tail-cover") {
    family = tail_cover(n, ell);
    result = family_to_json(family);
    result["provenance"] = "tail-cover(l planes for T(l))";
  } else if (mode == "level-plane") {
    family = CoverFamily(n);
    family.add(level_plane(n, j_level));
    result = family_to_json(family);
    result["provenance"] = "level-plane(sum x_i = j)";
  } else if (mode == "layer-minus-point") {
    auto built = layer_minus_point_cover(n, k);
    family = built.family;
    result = family_to_json(family);
    result["provenance"] = "layer-minus-point(min{k,n-k} planes)";
    result["missed"] = built.missed.str();
    table_extra = "missed: " + built.missed.str() + "\n";
  } else if (mode == "halfcube") {
    auto built = halfcube_example_cover(n, t);
    family = built.family;
    result = family_to_json(family);
    result["provenance"] = "halfcube-example(n-1+2t-2 planes)";
    result["excluded"] = pointset_to_json(built.excluded);
  } else if (mode == "venkitesh") {
    auto inst = venkitesh_counterexample();
    family = inst.family;
    result = family_to_json(family);
    result["provenance"] = "venkitesh-counterexample(n=7, middle layer)";
    result["cover_size"] = inst.cover_size;
    result["conjectured_size"] = inst.conjectured_size;
    table_extra = "cover 4 planes vs conjectured 5\n";
  } else {
    throw std::invalid_argument("unknown construct mode: " + mode);
  }
  out.emit(result, family_table(family) + table_extra);
  return 0;
}

int run_verify(const std::string& family_path, const std::string& s_path, std::int64_t t,
               std::int64_t l, const Output& out) {
  CoverFamily family = family_from_json(parse_json_file(family_path));
  PointSet s = s_path.empty() ? PointSet(family.dim()) : pointset_from_string(read_file(s_path));
  CoverReport report = verify_cover(family, s, t, l);
  out.emit(report_to_json(report), report_table(report));
  return report.ok ? 0 : 1;
}

int run_complexity(const std::string& s_path, bool exact, bool greedy, bool algebraic,
                   std::uint32_t prime, const Output& out) {
  if (exact + greedy + algebraic != 1)
    throw std::invalid_argument("pick exactly one of --exact, --greedy, --algebraic");
  PointSet s = pointset_from_string(read_file(s_path));
  json result;
  std::ostringstream table;
  if (exact) {
    auto r = index_complexity_exact(s);
    result["r"] = r.r;
    if (r.witness) result["witness"] = index_witness_json(*r.witness);
    table << "r(S) = " << r.r << "\n";
  } else if (greedy) {
    auto r = index_complexity_greedy(s);
    result["k"] = r.k;
    result["witness"] = index_witness_json(r.witness);
    table << "greedy k = " << r.k << "\n";
  } else {
    FieldSpec field(prime);
    std::vector<std::vector<std::uint32_t>> points;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CubePoint p = s.point(i);
      std::vector<std::uint32_t> tuple(static_cast<std::size_t>(p.n));
      for (int c = 1; c <= p.n; ++c)
        tuple[static_cast<std::size_t>(c - 1)] = static_cast<std::uint32_t>(p.coordinate(c));
      points.push_back(std::move(tuple));
    }
    auto r = algebraic_complexity(points, field.p);
    result["a"] = r.a;
    result["witness"] = {{"g", poly_to_json(r.witness.g)},
                         {"v", r.witness.v},
                         {"degree", r.witness.degree}};
    table << "a(S) = " << r.a << " over Z_" << field.p << "\n";
  }
  out.emit(result, table.str());
  return 0;
}

int run_polynomial(const std::string& mode, const std::string& poly_path,
                   const std::string& family_path, const std::string& s_path,
                   const std::string& point_str, int t, int cap, const std::string& bound_mode,
                   const std::string& input_path, const Output& out) {
  if (mode == "from-family") {
    RatPoly p = from_family(family_from_json(parse_json_file(family_path)));
    out.emit(poly_to_json(p), poly_to_text(p) + "\n");
    return 0;
  }
  if (mode == "mult") {
    RatPoly p = rat_poly_from_json(parse_json_file(poly_path));
    auto cert = zero_multiplicity(p, point_from_string(point_str), cap);
    json j{{"point", cert.point.str()}, {"order", cert.order}};
    if (cert.witness_derivative) j["witness_derivative"] = *cert.witness_derivative;
    std::ostringstream table;
    table << "multiplicity at " << cert.point.str() << " = " << cert.order
          << (cert.witness_derivative ? "" : " (at least; cap reached)") << "\n";
    out.emit(j, table.str());
    return 0;
  }
  if (mode == "verify") {
    RatPoly p = rat_poly_from_json(parse_json_file(poly_path));
    PointSet s = pointset_from_string(read_file(s_path));
    CoverReport report = verify_poly_cover(p, s, t);
    out.emit(report_to_json(report), report_table(report));
    return report.ok ? 0 : 1;
  }
  if (mode == "degcert") {
    RatPoly p = rat_poly_from_json(parse_json_file(poly_path));
    PointSet s = pointset_from_string(read_file(s_path));
    DegreeBound mode_enum;
    if (bound_mode == "layer")
      mode_enum = DegreeBound::layer;
    else if (bound_mode == "index")
      mode_enum = DegreeBound::index;
    else if (bound_mode == "size")
      mode_enum = DegreeBound::size;
    else if (bound_mode == "sw")
      mode_enum = DegreeBound::sw;
    else
      throw std::invalid_argument("unknown bound mode: " + bound_mode);
    auto report = check_degree_certificates(p, s, t, mode_enum);
    json j{{"mode", bound_mode},
           {"bound", report.bound},
           {"degree", report.degree},
           {"slack", report.slack},
           {"ok", report.ok}};
    std::ostringstream table;
    table << "deg = " << report.degree << ", bound = " << report.bound
          << ", slack = " << report.slack << (report.ok ? "  OK" : "  VIOLATED") << "\n";
    out.emit(j, table.str());
    return report.ok ? 0 : 1;
  }
  if (mode == "gridcheck") {
    json in = parse_json_file(input_path);
    GridReport report;
    long deg_f = 0, deg_g = 0;
    if (in.contains("p")) {
      std::uint32_t p = in.at("p").get<std::uint32_t>();
      FpPoly f = fp_poly_from_json(in.at("f")), g = fp_poly_from_json(in.at("g"));
      std::vector<std::vector<Fp>> t_set, grid;
      for (const auto& row : in.at("T")) {
        std::vector<Fp> tuple;
        for (const auto& v : row) tuple.push_back(Fp::make(v.get<std::int64_t>(), p));
        t_set.push_back(std::move(tuple));
      }
      for (const auto& row : in.at("grid")) {
        std::vector<Fp> axis;
        for (const auto& v : row) axis.push_back(Fp::make(v.get<std::int64_t>(), p));
        grid.push_back(std::move(axis));
      }
      report = check_grid_theorem(f, g, t_set, grid);
    } else {
      RatPoly f = rat_poly_from_json(in.at("f")), g = rat_poly_from_json(in.at("g"));
      std::vector<std::vector<Rational>> t_set, grid;
      for (const auto& row : in.at("T")) {
        std::vector<Rational> tuple;
        for (const auto& v : row)
          tuple.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                        : Rational(v.get<std::int64_t>()));
        t_set.push_back(std::move(tuple));
      }
      for (const auto& row : in.at("grid")) {
        std::vector<Rational> axis;
        for (const auto& v : row)
          axis.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                       : Rational(v.get<std::int64_t>()));
        grid.push_back(std::move(axis));
      }
      report = check_grid_theorem(f, g, t_set, grid);
    }
    deg_f = report.deg_f.value_or(-0);
    deg_g = report.deg_g.value_or(-0);
    json j{{"failed_clause", report.failed_clause},
           {"bound", report.bound},
           {"inequality_ok", report.inequality_ok},
           {"ok", report.ok()}};
    if (report.deg_f) j["deg_f"] = *report.deg_f;
    if (report.deg_g) j["deg_g"] = *report.deg_g;
    std::ostringstream table;
    if (report.failed_clause != 0)
      table << "hypothesis (" << report.failed_clause << ") fails\n";
    else
      table << "deg f + deg g = " << deg_f + deg_g << " >= " << report.bound
            << (report.inequality_ok ? "  OK" : "  VIOLATED") << "\n";
    out.emit(j, table.str());
    return report.ok() ? 0 : 1;
  }
  throw std::invalid_argument("unknown polynomial mode: " + mode);
}

SumsetInstance instance_from_json(const json& in) {
  std::uint32_t p = in.at("p").get<std::uint32_t>();
  std::vector<std::vector<std::uint32_t>> sets;
  for (const auto& row : in.at("A")) {
    std::vector<std::uint32_t> a = row.get<std::vector<std::uint32_t>>();
    std::sort(a.begin(), a.end());
    sets.push_back(std::move(a));
  }
  std::set<std::vector<std::uint32_t>> forbidden;
  for (const auto& row : in.at("S")) forbidden.insert(row.get<std::vector<std::uint32_t>>());
  json gj = in.at("g");
  if (!gj.contains("p")) gj["p"] = p;
  return SumsetInstance(p, std::move(sets), std::move(forbidden), fp_poly_from_json(gj),
                        in.at("k").get<int>());
}

int run_sumset(const std::string& mode, const std::string& input_path, const Output& out) {
  json in = parse_json_file(input_path);
  if (mode == "compute") {
    std::uint32_t p = in.at("p").get<std::uint32_t>();
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    std::vector<std::vector<std::uint32_t>> sets;
    for (const auto& row : in.at("A")) {
      std::vector<std::uint32_t> a = row.get<std::vector<std::uint32_t>>();
      std::sort(a.begin(), a.end());
      sets.push_back(std::move(a));
    }
    std::set<std::vector<std::uint32_t>> forbidden;
    if (in.contains("S"))
      for (const auto& row : in.at("S")) forbidden.insert(row.get<std::vector<std::uint32_t>>());
    auto sums = restricted_sumset(p, sets, forbidden);
    json j{{"p", p}, {"sumset", std::vector<std::uint32_t>(sums.begin(), sums.end())},
           {"size", sums.size()}};
    std::ostringstream table;
    table << "|sumset| = " << sums.size() << "\n";
    out.emit(j, table.str());
    return 0;
  }
  if (mode == "check") {
    ResSumReport report = check_res_sum_theorem(instance_from_json(in));
    json j{{"hypothesis_holds", report.hypothesis_holds},
           {"coeff", report.coeff},
           {"m", report.m}};
    std::ostringstream table;
    if (report.hypothesis_holds) {
      j["sumset_size"] = report.sumset.size();
      j["bound_ok"] = report.bound_ok;
      table << "coefficient " << report.coeff << " != 0, |sumset| = " << report.sumset.size()
            << " >= " << report.m + 1 << "\n";
    } else {
      j["note"] = "hypothesis fails; the theorem is silent on this instance";
      table << "hypothesis fails (coefficient 0); theorem silent\n";
    }
    out.emit(j, table.str());
    return report.hypothesis_holds ? 0 : 1;
  }
  if (mode == "eh") {
    std::uint32_t p = in.at("p").get<std::uint32_t>();
    std::vector<std::uint32_t> a = in.at("A").get<std::vector<std::uint32_t>>();
    EhReport report = erdos_heilbronn_check(p, a);
    json j{{"sum_count", report.sum_count},
           {"bound", report.bound},
           {"ok", report.ok},
           {"route_checked", report.route_checked}};
    if (report.route_checked) j["route_coeff"] = report.route_coeff;
    std::ostringstream table;
    table << report.sum_count << " sums >= bound " << report.bound << (report.ok ? "  OK" : "")
          << "\n";
    out.emit(j, table.str());
    return report.ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown sumset mode: " + mode);
}

int run_cw(const std::string& input_path, const Output& out) {
  json in = parse_json_file(input_path);
  std::uint32_t p = in.at("p").get<std::uint32_t>();
  std::vector<FpPoly> polys;
  for (json pj : in.at("polys")) {
    if (!pj.contains("p")) pj["p"] = p;
    polys.push_back(fp_poly_from_json(pj));
  }
  auto t_set = tuples_from_json(in.at("T"));
  CwReport report = cw_generalized_search(polys, t_set);
  json j{{"hypothesis_holds", report.hypothesis_holds},
         {"r", report.r},
         {"deg_sum", report.deg_sum}};
  std::ostringstream table;
  if (report.zero) {
    j["zero"] = *report.zero;
    table << "common zero outside T: (";
    for (std::size_t i = 0; i < report.zero->size(); ++i)
      table << (i ? ", " : "") << (*report.zero)[i];
    table << ")\n";
  } else {
    j["note"] = "degree hypothesis fails; no search claim";
    table << "hypothesis fails: sum deg >= n - r/(q-1)\n";
  }
  out.emit(j, table.str());
  return report.hypothesis_holds ? 0 : 1;
}

int run_nullsatz(const std::string& input_path, const Output& out) {
  json in = parse_json_file(input_path);
  std::uint32_t p = in.at("p").get<std::uint32_t>();
  json fj = in.at("f");
  if (!fj.contains("p")) fj["p"] = p;
  FpPoly f = fp_poly_from_json(fj);
  std::vector<std::vector<std::uint32_t>> sets;
  for (const auto& row : in.at("sets")) {
    std::vector<std::uint32_t> a = row.get<std::vector<std::uint32_t>>();
    std::sort(a.begin(), a.end());
    sets.push_back(std::move(a));
  }
  GridSpec grid(p, std::move(sets), in.at("t").get<std::vector<std::uint64_t>>());
  auto witness = cn_witness(f, grid);
  json j{{"witness", witness}};
  std::ostringstream table;
  table << "f is nonzero at (";
  for (std::size_t i = 0; i < witness.size(); ++i) table << (i ? ", " : "") << witness[i];
  table << ")\n";
  out.emit(j, table.str());
  return 0;
}

int run_search(int n, const std::string& s_path, int t, int l, int coeff_bound, int max_size,
               const Output& out) {
  TraceCatalog catalog = enumerate_traces(n, coeff_bound);
  PointSet s = s_path.empty() ? PointSet(n) : pointset_from_string(read_file(s_path));
  SearchResult result = min_cover_search(catalog, s, t, l, max_size);
  std::ostringstream table;
  if (result.found)
    table << "minimal size within catalog(B=" << coeff_bound << "): " << result.size
          << " (theorem lower bound " << result.lower_bound << ")\n"
          << family_table(result.family);
  else
    table << "no family up to size " << result.max_size_searched << " within catalog(B="
          << coeff_bound << ")\n";
  json j = search_result_to_json(result);
  j["coeff_bound"] = coeff_bound;
  out.emit(j, table.str());
  return result.found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercube cover toolkit"};
  app.require_subcommand(1);

  Output out;
  int threads = 0;
  app.add_option("--format", out.format, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--out", out.path, "Write the report to a file instead of stdout");
  app.add_option("--threads", threads, "Worker count for parallel kernels (0 = default)");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit one of the explicit families");
  std::string c_mode;
  int c_n = 0, c_k = 0, c_t = 1, c_ell = 1, c_j = 0;
  construct->add_option("mode", c_mode,
                        "layer-cover | tail-cover | level-plane | layer-minus-point | halfcube | venkitesh")
      ->required();
  construct->add_option("--n", c_n, "Dimension");
  construct->add_option("--k", c_k, "Layer index");
  construct->add_option("--t", c_t, "Cover multiplicity");
  construct->add_option("--l,--ell", c_ell, "Tail parameter");
  construct->add_option("--j", c_j, "Level plane index");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a (t, l)-cover from files");
  std::string v_family, v_s;
  std::int64_t v_t = 1, v_l = 0;
  verify->add_option("--family", v_family, "CoverFamily JSON file")->required();
  verify->add_option("--S", v_s, "Exception point set (text or JSON file)");
  verify->add_option("--t", v_t, "Required cover count off S");
  verify->add_option("--l", v_l, "Exact cover count on S");

  // complexity
  auto* complexity = app.add_subcommand("complexity", "Index / algebraic complexity of a point set");
  std::string x_s;
  bool x_exact = false, x_greedy = false, x_algebraic = false;
  std::uint32_t x_prime = 2;
  complexity->add_option("--S", x_s, "Point set file")->required();
  complexity->add_flag("--exact", x_exact, "Exact index complexity r(S)");
  complexity->add_flag("--greedy", x_greedy, "Greedy halving upper bound");
  complexity->add_flag("--algebraic", x_algebraic, "Algebraic complexity a(S) over Z_p");
  complexity->add_option("--prime", x_prime, "Prime modulus for --algebraic");

  // polynomial
  auto* polynomial = app.add_subcommand("polynomial", "Polynomial-side operations");
  std::string p_mode, p_poly, p_family, p_s, p_point, p_bound_mode = "layer", p_input;
  int p_t = 1, p_cap = 6;
  polynomial->add_option("mode", p_mode, "from-family | mult | verify | degcert | gridcheck")
      ->required();
  polynomial->add_option("--poly", p_poly, "Polynomial JSON file");
  polynomial->add_option("--family", p_family, "CoverFamily JSON file");
  polynomial->add_option("--S", p_s, "Point set file");
  polynomial->add_option("--point", p_point, "Cube point as a bitstring");
  polynomial->add_option("--t", p_t, "Cover multiplicity");
  polynomial->add_option("--cap", p_cap, "Multiplicity cap (<= 8)");
  polynomial->add_option("--mode-bound", p_bound_mode, "layer | index | size | sw");
  polynomial->add_option("--input", p_input, "Grid-check instance JSON file");

  // sumset
  auto* sumset = app.add_subcommand("sumset", "Forbidden-set restricted sumsets");
  std::string ss_mode, ss_input;
  sumset->add_option("mode", ss_mode, "compute | check | eh")->required();
  sumset->add_option("--input", ss_input, "Instance JSON file")->required();

  // cw
  auto* cw = app.add_subcommand("cw", "Generalized Chevalley-Warning search");
  std::string cw_input;
  cw->add_option("--input", cw_input, "Instance JSON file")->required();

  // nullsatz
  auto* nullsatz = app.add_subcommand("nullsatz", "Combinatorial Nullstellensatz witness");
  std::string ns_input;
  nullsatz->add_option("--input", ns_input, "Instance JSON file")->required();

  // search
  auto* search = app.add_subcommand("search", "Minimal multi-cover search over a trace catalog");
  std::string se_s;
  int se_n = 0, se_t = 1, se_l = 0, se_bound = 0, se_max = -1;
  search->add_option("--n", se_n, "Dimension (<= 5)")->required();
  search->add_option("--S", se_s, "Exception point set file");
  search->add_option("--t", se_t, "Required cover count off S");
  search->add_option("--l", se_l, "Exact cover count on S");
  search->add_option("--coeff-bound", se_bound, "Coefficient box bound (<= n+1)");
  search->add_option("--max-size", se_max, "Largest family size to try");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  try {
    if (*construct) return run_construct(c_mode, c_n, c_k, c_t, c_ell, c_j, out);
    if (*verify) return run_verify(v_family, v_s, v_t, v_l, out);
    if (*complexity) return run_complexity(x_s, x_exact, x_greedy, x_algebraic, x_prime, out);
    if (*polynomial)
      return run_polynomial(p_mode, p_poly, p_family, p_s, p_point, p_t, p_cap, p_bound_mode,
                            p_input, out);
    if (*sumset) return run_sumset(ss_mode, ss_input, out);
    if (*cw) return run_cw(cw_input, out);
    if (*nullsatz) return run_nullsatz(ns_input, out);
    if (*search) {
      if (se_bound == 0) se_bound = se_n + 1;
      return run_search(se_n, se_s, se_t, se_l, se_bound, se_max, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
