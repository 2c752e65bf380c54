#include "hypercover/complexity.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hypercover {

bool check_index_witness(const PointSet& s, const IndexWitness& w) {
  if (s.empty() || !s.contains(w.v)) return false;
  if (!std::is_sorted(w.coords.begin(), w.coords.end()) ||
      std::adjacent_find(w.coords.begin(), w.coords.end()) != w.coords.end())
    return false;
  std::uint64_t window = 0;
  for (int i : w.coords) {
    if (i < 1 || i > s.dim()) return false;
    window |= 1ull << (i - 1);
  }
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    CubePoint u = s.point(idx);
    if (u == w.v) continue;
    if (((u.bits ^ w.v.bits) & window) == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t project(std::uint64_t bits, const std::vector<int>& coords) {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < coords.size(); ++j)
    key |= ((bits >> (coords[j] - 1)) & 1u) << j;
  return key;
}

// First v (in the set's lexicographic order) whose projection onto `coords`
// is unique within S; that uniqueness is exactly the witness condition.
std::optional<CubePoint> unique_projection_point(const PointSet& s,
                                                 const std::vector<int>& coords) {
  std::unordered_map<std::uint64_t, int> counts;
  counts.reserve(s.size() * 2);
  std::vector<std::uint64_t> keys(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    keys[i] = project(s.point(i).bits, coords);
    ++counts[keys[i]];
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (counts[keys[i]] == 1) return s.point(i);
  return std::nullopt;
}

bool next_combination(std::vector<int>& c, int n) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - (r - 1 - i)) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IndexComplexity index_complexity_exact(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("index_complexity_exact: empty set");
  if (s.size() > (1ull << 20)) throw std::invalid_argument("index_complexity_exact: set too large");
  if (s.dim() > enum_dim_cap()) throw std::invalid_argument("index_complexity_exact: dimension cap");
  if (s.size() == 1) return {0, std::nullopt};

  const int cap = index_complexity_greedy(s).k;  // deepening never needs more
  for (int r = 1; r <= cap; ++r) {
    std::vector<int> coords(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) coords[static_cast<std::size_t>(i)] = i + 1;
    do {
      if (auto v = unique_projection_point(s, coords)) return {r, IndexWitness{*v, coords}};
    } while (next_combination(coords, s.dim()));
  }
  throw std::logic_error("index_complexity_exact: greedy bound not attained");  // unreachable
}

GreedyIndexComplexity index_complexity_greedy(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("index_complexity_greedy: empty set");
  std::vector<std::uint64_t> current;
  current.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) current.push_back(s.point(i).bits);

  std::vector<int> coords;
  while (current.size() > 1) {
    int split = 0;
    for (int i = 1; i <= s.dim(); ++i) {
      std::uint64_t bit = 1ull << (i - 1);
      bool first = (current[0] & bit) != 0;
      for (std::uint64_t m : current) {
        if (((m & bit) != 0) != first) {
          split = i;
          break;
        }
      }
      if (split) break;
    }
    std::uint64_t bit = 1ull << (split - 1);
    std::vector<std::uint64_t> zeros, ones;
    for (std::uint64_t m : current) ((m & bit) ? ones : zeros).push_back(m);
    current = (zeros.size() <= ones.size()) ? std::move(zeros) : std::move(ones);
    coords.push_back(split);
  }
  GreedyIndexComplexity out;
  out.k = static_cast<int>(coords.size());
  out.witness = IndexWitness{CubePoint(s.dim(), current[0]), std::move(coords)};
  return out;
}

namespace {

// Exponent vectors with per-variable bound p-1 and total degree exactly d,
// in lexicographic order.
void monomials_of_degree(int n, std::uint32_t maxe, long d,
                         std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long left) -> void {
    if (pos == n - 1) {
      if (left <= maxe) {
        e[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(left);
        out.push_back(e);
      }
      return;
    }
    for (long take = 0; take <= std::min<long>(maxe, left); ++take) {
      e[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(take);
      self(self, pos + 1, left - take);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
}

std::uint32_t eval_monomial(const std::vector<std::uint32_t>& point,
                            const std::vector<std::uint32_t>& e, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (e[i]) r = mul_mod(r, pow_mod(point[i], e[i], p), p);
  return r;
}

}  // namespace

bool check_alg_witness(const std::vector<std::vector<std::uint32_t>>& s, std::uint32_t p,
                       const AlgWitness& w) {
  if (s.empty()) return false;
  bool v_seen = false;
  for (const auto& point : s) {
    std::vector<Fp> tuple;
    tuple.reserve(point.size());
    for (std::uint32_t x : point) tuple.push_back(Fp::make(x, p));
    bool zero = w.g.evaluate(tuple).is_zero();
    if (point == w.v) {
      v_seen = true;
      if (zero) return false;
    } else if (!zero) {
      return false;
    }
  }
  if (!v_seen) return false;
  auto deg = w.g.degree();
  return deg && *deg == w.degree;
}

AlgComplexity algebraic_complexity(const std::vector<std::vector<std::uint32_t>>& s_in,
                                   std::uint32_t p) {
  if (!is_prime(p) || p > 101) throw std::invalid_argument("algebraic_complexity: p must be prime <= 101");
  if (s_in.empty()) throw std::invalid_argument("algebraic_complexity: empty set");
  if (s_in.size() > 2000) throw std::invalid_argument("algebraic_complexity: set too large");
  const int n = static_cast<int>(s_in[0].size());
  if (n < 1 || n > 8) throw std::invalid_argument("algebraic_complexity: arity out of range [1, 8]");

  std::vector<std::vector<std::uint32_t>> s = s_in;
  for (auto& point : s) {
    if (point.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("algebraic_complexity: mixed point arities");
    for (auto& x : point) x %= p;
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("algebraic_complexity: repeated point");

  if (s.size() == 1) {
    AlgWitness w{FpPoly::constant(n, Fp::make(1, p)), s[0], 0};
    return {0, std::move(w)};
  }

  std::vector<std::vector<std::uint32_t>> monomials;
  const long dmax = static_cast<long>(n) * (p - 1);
  for (long d = 0; d <= dmax; ++d) {
    monomials_of_degree(n, p - 1, d, monomials);  // grows the basis to degree d
    FpMatrix m(s.size(), monomials.size(), p);
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t c = 0; c < monomials.size(); ++c) m.at(r, c) = eval_monomial(s[r], monomials[c], p);
    std::size_t rank_full = fp_rank(m);

    for (std::size_t vi = 0; vi < s.size(); ++vi) {
      FpMatrix minus(s.size() - 1, monomials.size(), p);
      for (std::size_t r = 0, rr = 0; r < s.size(); ++r) {
        if (r == vi) continue;
        for (std::size_t c = 0; c < monomials.size(); ++c) minus.at(rr, c) = m.at(r, c);
        ++rr;
      }
      if (fp_rank(minus) + 1 != rank_full) continue;

      // Some polynomial vanishing off v is nonzero at v; extract one.
      for (const auto& x : fp_nullspace(std::move(minus))) {
        std::uint32_t at_v = 0;
        for (std::size_t c = 0; c < monomials.size(); ++c)
          at_v = add_mod(at_v, mul_mod(x[c], m.at(vi, c), p), p);
        if (at_v == 0) continue;
        FpPoly g = fp_poly(n, p);
        for (std::size_t c = 0; c < monomials.size(); ++c)
          if (x[c] != 0) g.add_term(monomials[c], Fp{x[c], p});
        AlgWitness w{std::move(g), s[vi], d};
        if (!check_alg_witness(s, p, w))
          throw std::logic_error("algebraic_complexity: witness failed its own invariant");
        return {d, std::move(w)};
      }
      throw std::logic_error("algebraic_complexity: rank drop without usable nullspace vector");
    }
  }
  throw std::logic_error("algebraic_complexity: no witness up to the interpolation degree");
}

}  // namespace hypercover
