#include "hypercover/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hypercover/complexity.hpp"

namespace hypercover {

namespace {

struct RepKey {
  std::int64_t max_abs;
  std::int64_t sum_abs;
  std::vector<std::int64_t> tuple;  // (a..., b)

  friend bool operator<(const RepKey& x, const RepKey& y) {
    if (x.max_abs != y.max_abs) return x.max_abs < y.max_abs;
    if (x.sum_abs != y.sum_abs) return x.sum_abs < y.sum_abs;
    return x.tuple < y.tuple;
  }
};

RepKey rep_key(const Hyperplane& h) {
  RepKey k{0, 0, {}};
  k.tuple = h.a;
  k.tuple.push_back(h.b);
  for (std::int64_t c : k.tuple) {
    std::int64_t abs = c < 0 ? -c : c;
    k.max_abs = std::max(k.max_abs, abs);
    k.sum_abs += abs;
  }
  return k;
}

}  // namespace

TraceCatalog enumerate_traces(int n, int coeff_bound) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_traces: n out of range [1, 5]");
  if (coeff_bound < 1 || coeff_bound > n + 1)
    throw std::invalid_argument("enumerate_traces: coefficient bound out of range [1, n+1]");

  const int points = 1 << n;
  std::map<std::uint32_t, Hyperplane> by_trace;

  std::vector<std::int64_t> a(static_cast<std::size_t>(n), -coeff_bound);
  const std::int64_t b_max = static_cast<std::int64_t>(n) * coeff_bound;
  while (true) {
    bool all_zero = std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
    if (!all_zero) {
      // Dot products over the cube once per normal vector.
      std::vector<std::int64_t> dot(static_cast<std::size_t>(points), 0);
      for (int mask = 1; mask < points; ++mask) {
        int low = std::countr_zero(static_cast<unsigned>(mask));
        dot[static_cast<std::size_t>(mask)] =
            dot[static_cast<std::size_t>(mask & (mask - 1))] + a[static_cast<std::size_t>(low)];
      }
      for (std::int64_t b = -b_max; b <= b_max; ++b) {
        std::uint32_t tr = 0;
        for (int mask = 0; mask < points; ++mask)
          if (dot[static_cast<std::size_t>(mask)] == b) tr |= 1u << mask;
        Hyperplane h(n, a, b);
        auto [it, inserted] = by_trace.emplace(tr, h);
        if (!inserted && rep_key(h) < rep_key(it->second)) it->second = h;
      }
    }
    // Odometer over the coefficient box.
    std::size_t pos = 0;
    while (pos < a.size() && a[pos] == coeff_bound) a[pos++] = -coeff_bound;
    if (pos == a.size()) break;
    ++a[pos];
  }

  TraceCatalog catalog;
  catalog.n = n;
  catalog.coeff_bound = coeff_bound;
  for (auto& [tr, h] : by_trace) catalog.entries.push_back({tr, std::move(h)});
  return catalog;
}

namespace {

struct SearchContext {
  const TraceCatalog* catalog;
  int n;
  int points;
  int t;
  int l;
  std::vector<std::uint8_t> in_s;                // by point mask
  std::vector<std::vector<int>> planes_through;  // catalog indices, ascending
  std::vector<int> counts;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;
  bool budget_hit = false;
  bool greedy_order = true;

  int required(int mask) const { return in_s[static_cast<std::size_t>(mask)] ? l : t; }

  // Lex-first point still short of its target; also the largest deficiency.
  std::pair<int, int> first_unsat() const {
    int first = -1, worst = 0;
    for (int key = 0; key < points; ++key) {
      int mask = static_cast<int>(reverse_bits(static_cast<std::uint64_t>(key), n));
      int deficit = required(mask) - counts[static_cast<std::size_t>(mask)];
      if (deficit > 0) {
        if (first < 0) first = mask;
        worst = std::max(worst, deficit);
      }
    }
    return {first, worst};
  }

  bool blocked(std::uint32_t tr) const {
    // A plane may not push an exactly-l point past its target.
    std::uint32_t m = tr;
    while (m) {
      int mask = std::countr_zero(m);
      if (in_s[static_cast<std::size_t>(mask)] && counts[static_cast<std::size_t>(mask)] >= l)
        return true;
      m &= m - 1;
    }
    return false;
  }

  void apply(int idx, int delta) {
    std::uint32_t m = catalog->entries[static_cast<std::size_t>(idx)].points;
    while (m) {
      counts[static_cast<std::size_t>(std::countr_zero(m))] += delta;
      m &= m - 1;
    }
  }

  template <class OnSolution>
  bool dfs(int budget, bool stop_at_first, const OnSolution& on_solution) {
    if (node_budget && ++nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    auto [unsat, worst] = first_unsat();
    if (unsat < 0) {
      on_solution(chosen);
      return true;
    }
    if (worst > budget) return false;

    // Deficient points as a mask, to order candidates most-helpful-first.
    std::uint32_t deficient = 0;
    for (int mask = 0; mask < points; ++mask)
      if (required(mask) > counts[static_cast<std::size_t>(mask)]) deficient |= 1u << mask;
    std::vector<std::pair<int, int>> order;  // (-coverage, index)
    for (int idx : planes_through[static_cast<std::size_t>(unsat)]) {
      if (blocked(catalog->entries[static_cast<std::size_t>(idx)].points)) continue;
      int coverage = std::popcount(catalog->entries[static_cast<std::size_t>(idx)].points & deficient);
      order.emplace_back(-coverage, idx);
    }
    if (!greedy_order)
      for (auto& [cov, idx] : order) cov = 0;  // plain index order for lexicographic passes
    std::sort(order.begin(), order.end());

    bool found = false;
    for (auto [cov, idx] : order) {
      chosen.push_back(idx);
      apply(idx, +1);
      bool hit = dfs(budget - 1, stop_at_first, on_solution);
      apply(idx, -1);
      chosen.pop_back();
      if (hit) {
        found = true;
        if (stop_at_first) return true;
      }
      if (budget_hit) return found;
    }
    return found;
  }
};

}  // namespace

SearchResult min_cover_search(const TraceCatalog& catalog, const PointSet& s, int t, int l,
                              int max_size) {
  if (catalog.n < 1) throw std::invalid_argument("min_cover_search: empty catalog");
  if (t < 1 || t > 3) throw std::invalid_argument("min_cover_search: t out of range [1, 3]");
  if (l < 0 || l >= t) throw std::invalid_argument("min_cover_search: requires 0 <= l < t");
  if (!s.empty() && s.dim() != catalog.n)
    throw std::invalid_argument("min_cover_search: dimension mismatch");

  SearchContext ctx;
  ctx.catalog = &catalog;
  ctx.n = catalog.n;
  ctx.points = 1 << catalog.n;
  ctx.t = t;
  ctx.l = l;
  ctx.in_s.assign(static_cast<std::size_t>(ctx.points), 0);
  for (std::uint64_t key : s.lex_keys()) ctx.in_s[reverse_bits(key, ctx.n)] = 1;
  ctx.counts.assign(static_cast<std::size_t>(ctx.points), 0);
  ctx.planes_through.assign(static_cast<std::size_t>(ctx.points), {});
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    std::uint32_t m = catalog.entries[i].points;
    while (m) {
      ctx.planes_through[static_cast<std::size_t>(std::countr_zero(m))].push_back(
          static_cast<int>(i));
      m &= m - 1;
    }
  }

  // Unconditional lower bounds: per-point demand, plus the degree theorems
  // when the exception set is covered exactly t-1 times.
  long lb = 0;
  bool complement_nonempty = s.size() < static_cast<std::size_t>(ctx.points);
  if (complement_nonempty) lb = t;
  if (!s.empty()) lb = std::max(lb, static_cast<long>(l));
  if (l == t - 1 && !s.empty()) {
    long theorem;
    if (s.size() == 1) {
      theorem = ctx.n + 2l * t - 2;
    } else {
      auto weights = weight_set(s);
      int k = *weights.begin();
      if (weights.size() == 1 && s == layer(ctx.n, k))
        theorem = std::max(k, ctx.n - k) + 2 * t - 2;
      else
        theorem = ctx.n - index_complexity_exact(s).r + 2 * t - 2;
    }
    lb = std::max(lb, theorem);
  }

  SearchResult result;
  result.lower_bound = lb;
  if (max_size < 0) max_size = static_cast<int>(lb) + 8;

  for (int size = static_cast<int>(lb); size <= max_size; ++size) {
    ctx.nodes = 0;
    ctx.node_budget = 0;
    ctx.greedy_order = true;
    std::vector<int> first_hit;
    bool feasible = ctx.dfs(size, true, [&](const std::vector<int>& chosen) {
      if (first_hit.empty()) first_hit = chosen;
    });
    result.max_size_searched = size;
    if (!feasible) continue;

    // Collect every solution at this size to report the lexicographic minimum;
    // on blowup fall back to the first hit (size is exact either way).
    ctx.nodes = 0;
    ctx.node_budget = 5000000;
    ctx.greedy_order = false;
    std::set<std::vector<int>> solutions;
    ctx.dfs(size, false, [&](const std::vector<int>& chosen) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      solutions.insert(std::move(sorted));
    });
    std::vector<int> picked;
    if (!ctx.budget_hit && !solutions.empty()) {
      picked = *solutions.begin();
      result.lex_minimal = true;
    } else {
      picked = first_hit;
      std::sort(picked.begin(), picked.end());
    }

    result.found = true;
    result.size = static_cast<int>(picked.size());
    result.family = CoverFamily(ctx.n);
    for (int idx : picked) result.family.add(catalog.entries[static_cast<std::size_t>(idx)].rep);
    result.exhausted = true;
    if (!verify_cover(result.family, s, t, l).ok)
      throw std::logic_error("min_cover_search: candidate family failed independent verification");
    return result;
  }
  // Sizes below the theorem bound need no search; everything up to max_size
  // is therefore settled.
  result.max_size_searched = max_size;
  result.exhausted = !ctx.budget_hit;
  return result;
}

}  // namespace hypercover
