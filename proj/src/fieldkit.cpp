#include "hypercover/fieldkit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypercover {

namespace {

constexpr std::uint64_t kScanCap = 10000000;  // 10^7 grid cells

void validate_sets(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& sets) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (sets.empty()) throw std::invalid_argument("no coordinate sets given");
  for (const auto& a : sets) {
    if (a.empty()) throw std::invalid_argument("coordinate set is empty");
    for (std::uint32_t x : a)
      if (x >= p) throw std::invalid_argument("coordinate set element not reduced mod p");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] >= a[i + 1]) throw std::invalid_argument("coordinate set not sorted and distinct");
  }
}

std::uint64_t product_size(const std::vector<std::vector<std::uint32_t>>& sets) {
  std::uint64_t cells = 1;
  for (const auto& a : sets) {
    cells *= a.size();
    if (cells > kScanCap) throw std::invalid_argument("scan size cap (10^7) exceeded");
  }
  return cells;
}

std::vector<std::uint32_t> decode_cell(std::uint64_t cell,
                                       const std::vector<std::vector<std::uint32_t>>& sets) {
  std::vector<std::uint32_t> tuple(sets.size());
  for (std::size_t i = sets.size(); i-- > 0;) {
    tuple[i] = sets[i][cell % sets[i].size()];
    cell /= sets[i].size();
  }
  return tuple;
}

std::vector<Fp> lift(const std::vector<std::uint32_t>& tuple, std::uint32_t p) {
  std::vector<Fp> out;
  out.reserve(tuple.size());
  for (std::uint32_t x : tuple) out.push_back(Fp::make(x, p));
  return out;
}

}  // namespace

GridSpec::GridSpec(std::uint32_t prime, std::vector<std::vector<std::uint32_t>> s,
                   std::vector<std::uint64_t> t)
    : p(prime), sets(std::move(s)), degrees(std::move(t)) {
  validate_sets(p, sets);
  if (degrees.size() != sets.size())
    throw std::invalid_argument("GridSpec: one degree per coordinate set required");
}

std::uint64_t GridSpec::cells() const { return product_size(sets); }

namespace {

std::vector<std::uint32_t> cn_scan(const FpPoly& f, const GridSpec& grid, bool parallel) {
  if (f.zero_elem().p != grid.p) throw std::invalid_argument("cn_witness: field mismatch");
  if (f.nvars() != static_cast<int>(grid.sets.size()))
    throw std::invalid_argument("cn_witness: variable count mismatch");

  std::uint64_t total_degree = 0;
  for (std::uint64_t t : grid.degrees) total_degree += t;
  auto deg = f.degree();
  if (!deg || static_cast<std::uint64_t>(*deg) != total_degree)
    throw std::invalid_argument("cn_witness: hypothesis violated: deg(f) != sum t_i");
  std::vector<std::uint32_t> top(grid.sets.size());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = static_cast<std::uint32_t>(grid.degrees[i]);
  if (f.coefficient_of(top).is_zero())
    throw std::invalid_argument("cn_witness: hypothesis violated: top coefficient of prod x_i^{t_i} is zero");
  for (std::size_t i = 0; i < grid.sets.size(); ++i)
    if (grid.sets[i].size() <= grid.degrees[i])
      throw std::invalid_argument("cn_witness: hypothesis violated: |S_" + std::to_string(i + 1) +
                                  "| <= t_" + std::to_string(i + 1));

  const std::uint64_t cells = grid.cells();
  std::uint64_t best = cells;
  if (parallel) {
    std::int64_t hit = static_cast<std::int64_t>(cells);
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static, 1024) reduction(min : hit)
    for (std::int64_t cell = 0; cell < static_cast<std::int64_t>(cells); ++cell) {
      try {
        auto tuple = lift(decode_cell(static_cast<std::uint64_t>(cell), grid.sets), grid.p);
        if (!f.evaluate(tuple).is_zero() && cell < hit) hit = cell;
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    best = static_cast<std::uint64_t>(hit);
  } else {
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      auto tuple = lift(decode_cell(cell, grid.sets), grid.p);
      if (!f.evaluate(tuple).is_zero()) {
        best = cell;
        break;
      }
    }
  }
  if (best == cells)
    throw std::logic_error("cn_witness: exhausted scan under verified hypotheses (arithmetic bug)");
  return decode_cell(best, grid.sets);
}

}  // namespace

std::vector<std::uint32_t> cn_witness(const FpPoly& f, const GridSpec& grid) {
  return cn_scan(f, grid, true);
}

std::vector<std::uint32_t> cn_witness_serial(const FpPoly& f, const GridSpec& grid) {
  return cn_scan(f, grid, false);
}

std::uint32_t claim_coeff(int n, std::uint32_t p) {
  if (n < 3) throw std::invalid_argument("claim_coeff: requires n >= 3");
  if (!is_prime(p)) throw std::invalid_argument("claim_coeff: p must be prime");
  if (p <= static_cast<std::uint32_t>(n)) throw std::invalid_argument("claim_coeff: requires p > n");

  FpPoly sum_all = fp_poly(n, p);
  FpPoly sum_rest = fp_poly(n, p);
  {
    FpPoly::Exponents e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i)] = 1;
      sum_all.add_term(e, Fp::make(1, p));
      if (i > 0) sum_rest.add_term(e, Fp::make(1, p));
      e[static_cast<std::size_t>(i)] = 0;
    }
  }

  FpPoly product = sum_all;
  for (int j = 1; j <= n - 2; ++j) {
    FpPoly h = sum_rest;  // n x_1 + sum_{i>=2} x_i - j
    FpPoly::Exponents e(static_cast<std::size_t>(n));
    e[0] = 1;
    h.add_term(e, Fp::make(n, p));
    h.add_term(FpPoly::Exponents(static_cast<std::size_t>(n)), Fp::make(-j, p));
    product *= h;
  }
  {
    FpPoly h = sum_rest;  // sum_{i>=2} x_i - (n-1)
    h.add_term(FpPoly::Exponents(static_cast<std::size_t>(n)), Fp::make(-(n - 1), p));
    product *= h;
  }

  std::uint32_t got = product.coefficient_of(FpPoly::Exponents(static_cast<std::size_t>(n), 1)).v;
  std::uint32_t cube = pow_mod(static_cast<std::uint32_t>(n - 1), 3, p);
  std::uint32_t fact = 1;
  for (int i = 2; i <= n - 2; ++i) fact = mul_mod(fact, static_cast<std::uint32_t>(i), p);
  std::uint32_t expected = mul_mod(cube, fact, p);
  if (got != expected)
    throw std::logic_error("claim_coeff: expansion disagrees with the closed form (arithmetic bug)");
  return got;
}

std::set<std::uint32_t> restricted_sumset(std::uint32_t p,
                                          const std::vector<std::vector<std::uint32_t>>& sets,
                                          const std::set<std::vector<std::uint32_t>>& forbidden) {
  validate_sets(p, sets);
  const std::uint64_t cells = product_size(sets);
  for (const auto& tuple : forbidden) {
    if (tuple.size() != sets.size())
      throw std::invalid_argument("restricted_sumset: forbidden tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (!std::binary_search(sets[i].begin(), sets[i].end(), tuple[i]))
        throw std::invalid_argument("restricted_sumset: forbidden tuple outside the product set");
  }

  std::set<std::uint32_t> out;
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    auto tuple = decode_cell(cell, sets);
    if (forbidden.count(tuple)) continue;
    std::uint64_t sum = 0;
    for (std::uint32_t x : tuple) sum += x;
    out.insert(static_cast<std::uint32_t>(sum % p));
  }
  return out;
}

SumsetInstance::SumsetInstance(std::uint32_t prime, std::vector<std::vector<std::uint32_t>> a,
                               std::set<std::vector<std::uint32_t>> s, FpPoly poly, int k)
    : p(prime), sets(std::move(a)), forbidden(std::move(s)), g(std::move(poly)), pivot(k) {
  validate_sets(p, sets);
  if (g.zero_elem().p != p) throw std::invalid_argument("SumsetInstance: polynomial field mismatch");
  if (g.nvars() != static_cast<int>(sets.size()))
    throw std::invalid_argument("SumsetInstance: polynomial arity mismatch");
  if (g.is_zero()) throw std::invalid_argument("SumsetInstance: zero exclusion polynomial");
  if (pivot < 1 || pivot > static_cast<int>(sets.size()))
    throw std::invalid_argument("SumsetInstance: pivot index out of range");

  std::size_t nonzero = 0;
  for (const auto& tuple : forbidden) {
    if (tuple.size() != sets.size())
      throw std::invalid_argument("SumsetInstance: forbidden tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (!std::binary_search(sets[i].begin(), sets[i].end(), tuple[i]))
        throw std::invalid_argument("SumsetInstance: forbidden tuple outside the product set");
    if (!g.evaluate(lift(tuple, p)).is_zero()) ++nonzero;
  }
  if (forbidden.empty() || nonzero != 1)
    throw std::invalid_argument("SumsetInstance: g must vanish on all of S except exactly one tuple");
}

long SumsetInstance::m() const {
  long sum_c = 0;
  for (const auto& a : sets) sum_c += static_cast<long>(a.size()) - 1;
  return sum_c - static_cast<long>(*g.degree()) - 1;
}

ResSumReport check_res_sum_theorem(const SumsetInstance& inst) {
  ResSumReport report;
  report.m = inst.m();
  if (report.m < 0) throw std::invalid_argument("check_res_sum_theorem: ill-formed instance (m < 0)");

  const std::size_t n = inst.sets.size();
  std::vector<std::uint64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = inst.sets[i].size() - 1;

  // Coefficient of prod x_i^{c_i} in x_k g (sum x_i)^m: each term d of x_k g
  // needs the power sum to supply exactly c - d, a single multinomial.
  std::uint32_t coeff = 0;
  for (const auto& [e, value] : inst.g.terms()) {
    std::vector<std::uint64_t> need(n);
    bool feasible = true;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t d = e[i] + (static_cast<int>(i) == inst.pivot - 1 ? 1u : 0u);
      if (d > c[i]) {
        feasible = false;
        break;
      }
      need[i] = c[i] - d;
      total += need[i];
    }
    if (!feasible || total != static_cast<std::uint64_t>(report.m)) continue;
    std::uint32_t mono = multinomial_mod(static_cast<std::uint64_t>(report.m), need, inst.p);
    coeff = add_mod(coeff, mul_mod(value.v, mono, inst.p), inst.p);
  }
  report.coeff = coeff;
  report.hypothesis_holds = coeff != 0;
  if (!report.hypothesis_holds) return report;  // theorem silent

  report.sumset = restricted_sumset(inst.p, inst.sets, inst.forbidden);
  report.bound_ok = static_cast<long>(report.sumset.size()) >= report.m + 1;
  if (!report.bound_ok)
    throw std::logic_error("check_res_sum_theorem: sumset bound violated (arithmetic bug)");
  return report;
}

EhReport erdos_heilbronn_check(std::uint32_t p, const std::vector<std::uint32_t>& a_in) {
  if (!is_prime(p) || p > 101) throw std::invalid_argument("erdos_heilbronn_check: p must be prime <= 101");
  if (a_in.empty()) throw std::invalid_argument("erdos_heilbronn_check: empty set");
  std::vector<std::uint32_t> a = a_in;
  for (auto& x : a) x %= p;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  EhReport report;
  std::set<std::uint32_t> sums;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) sums.insert(add_mod(a[i], a[j], p));
  report.sum_count = sums.size();
  report.bound = std::min<long>(p, 2 * static_cast<long>(a.size()) - 3);
  report.ok = static_cast<long>(report.sum_count) >= report.bound;
  if (!report.ok) throw std::logic_error("erdos_heilbronn_check: bound violated (arithmetic bug)");

  if (a.size() >= 2 && 2 * static_cast<long>(a.size()) - 3 < static_cast<long>(p)) {
    // Forbidden-set route: S = diagonal plus one off-diagonal tuple, g = x1 - x2.
    std::set<std::vector<std::uint32_t>> forbidden;
    for (std::uint32_t x : a) forbidden.insert({x, x});
    forbidden.insert({a[0], a[1]});
    FpPoly g = FpPoly::variable(2, 1, Fp::make(1, p)) - FpPoly::variable(2, 2, Fp::make(1, p));
    SumsetInstance inst(p, {a, a}, std::move(forbidden), std::move(g), 2);
    ResSumReport rs = check_res_sum_theorem(inst);

    const std::uint64_t q = a.size() - 1;
    std::uint32_t expected = sub_mod(binomial_mod(2 * q - 2, q - 1, p), binomial_mod(2 * q - 2, q, p), p);
    // Same value as the rising product (2q-2)(2q-3)...(q+1) / (q-1)!, defined since 2q-2 < p.
    std::uint32_t num = 1, den = 1;
    for (std::uint64_t v = q + 1; v + 2 <= 2 * q; ++v) num = mul_mod(num, static_cast<std::uint32_t>(v % p), p);
    for (std::uint64_t v = 2; v + 1 <= q; ++v) den = mul_mod(den, static_cast<std::uint32_t>(v % p), p);
    std::uint32_t closed_form = mul_mod(num, inv_mod(den, p), p);
    if (rs.coeff != expected || rs.coeff != closed_form)
      throw std::logic_error("erdos_heilbronn_check: coefficient disagrees with the closed form");
    if (!rs.hypothesis_holds || rs.m + 1 != report.bound || rs.sumset != sums)
      throw std::logic_error("erdos_heilbronn_check: forbidden-set route disagrees with brute force");
    report.route_checked = true;
    report.route_coeff = rs.coeff;
  }
  return report;
}

namespace {

CwReport cw_scan(const std::vector<FpPoly>& polys,
                 const std::vector<std::vector<std::uint32_t>>& t_set, bool parallel) {
  if (polys.empty()) throw std::invalid_argument("cw_generalized_search: no polynomials");
  const std::uint32_t p = polys[0].zero_elem().p;
  const int n = polys[0].nvars();
  if (!is_prime(p)) throw std::invalid_argument("cw_generalized_search: modulus is not prime");
  for (const auto& poly : polys) {
    if (poly.zero_elem().p != p || poly.nvars() != n)
      throw std::invalid_argument("cw_generalized_search: mixed fields or arities");
    if (poly.is_zero()) throw std::invalid_argument("cw_generalized_search: zero polynomial");
  }
  if (t_set.empty()) throw std::invalid_argument("cw_generalized_search: empty T");

  std::uint64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    cells *= p;
    if (cells > kScanCap) throw std::invalid_argument("cw_generalized_search: p^n cap exceeded");
  }

  std::set<std::vector<std::uint32_t>> t_sorted;
  for (const auto& point : t_set) {
    if (point.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("cw_generalized_search: T point arity mismatch");
    std::vector<std::uint32_t> reduced = point;
    for (auto& x : reduced) x %= p;
    for (const auto& poly : polys)
      if (!poly.evaluate(lift(reduced, p)).is_zero())
        throw std::invalid_argument("cw_generalized_search: T is not contained in the common zero set");
    t_sorted.insert(std::move(reduced));
  }

  CwReport report;
  report.r = algebraic_complexity({t_sorted.begin(), t_sorted.end()}, p).a;
  for (const auto& poly : polys) report.deg_sum += *poly.degree();
  // sum deg < n - r/(q-1), cleared of the fraction with q = p.
  report.hypothesis_holds =
      report.deg_sum * static_cast<long>(p - 1) < static_cast<long>(n) * (p - 1) - report.r;
  if (!report.hypothesis_holds) return report;

  auto decode = [&](std::uint64_t cell) {
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(n));
    for (std::size_t i = static_cast<std::size_t>(n); i-- > 0;) {
      tuple[i] = static_cast<std::uint32_t>(cell % p);
      cell /= p;
    }
    return tuple;
  };
  auto is_common_zero = [&](const std::vector<std::uint32_t>& tuple) {
    auto lifted = lift(tuple, p);
    for (const auto& poly : polys)
      if (!poly.evaluate(lifted).is_zero()) return false;
    return true;
  };

  std::uint64_t best = cells;
  if (parallel) {
    std::int64_t hit = static_cast<std::int64_t>(cells);
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static, 1024) reduction(min : hit)
    for (std::int64_t cell = 0; cell < static_cast<std::int64_t>(cells); ++cell) {
      try {
        auto tuple = decode(static_cast<std::uint64_t>(cell));
        if (!t_sorted.count(tuple) && is_common_zero(tuple) && cell < hit) hit = cell;
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    best = static_cast<std::uint64_t>(hit);
  } else {
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      auto tuple = decode(cell);
      if (!t_sorted.count(tuple) && is_common_zero(tuple)) {
        best = cell;
        break;
      }
    }
  }
  if (best == cells)
    throw std::logic_error("cw_generalized_search: exhausted scan under a verified hypothesis");
  report.zero = decode(best);
  return report;
}

}  // namespace

CwReport cw_generalized_search(const std::vector<FpPoly>& polys,
                               const std::vector<std::vector<std::uint32_t>>& t_set) {
  return cw_scan(polys, t_set, true);
}

CwReport cw_generalized_search_serial(const std::vector<FpPoly>& polys,
                                      const std::vector<std::vector<std::uint32_t>>& t_set) {
  return cw_scan(polys, t_set, false);
}

}  // namespace hypercover
