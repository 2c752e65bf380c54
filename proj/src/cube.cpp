#include "hypercover/cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hypercover/checked.hpp"

namespace hypercover {

int enum_dim_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("HYPERCOVER_MAX_N")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 30) return v;
    }
    return 24;
  }();
  return cap;
}

std::uint64_t reverse_bits(std::uint64_t x, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) out |= ((x >> i) & 1u) << (n - 1 - i);
  return out;
}

CubePoint::CubePoint(int dim, std::uint64_t b) : n(dim), bits(b) {
  if (dim < 1 || dim > kPointDimCap) throw std::invalid_argument("CubePoint dimension out of range");
  if (dim < 64 && (b >> dim) != 0) throw std::invalid_argument("CubePoint has bits beyond dimension");
}

int CubePoint::coordinate(int i) const {
  if (i < 1 || i > n) throw std::out_of_range("coordinate index out of range");
  return static_cast<int>((bits >> (i - 1)) & 1u);
}

CubePoint CubePoint::complemented() const {
  std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  return CubePoint(n, ~bits & mask);
}

std::string CubePoint::str() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int weight(const CubePoint& p) { return std::popcount(p.bits); }

bool lex_less(const CubePoint& a, const CubePoint& b) {
  if (a.n != b.n) throw std::invalid_argument("comparing points of different dimension");
  return a.lex_key() < b.lex_key();
}

CubePoint point_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty point string");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= 1ull << i;
    else if (s[i] != '0')
      throw std::invalid_argument("point string must be over {0,1}: " + s);
  }
  return CubePoint(static_cast<int>(s.size()), bits);
}

PointSet::PointSet(int dim) : n_(dim) {
  if (dim < 1 || dim > kPointDimCap) throw std::invalid_argument("PointSet dimension out of range");
}

void PointSet::insert(const CubePoint& p) {
  if (n_ == 0) n_ = p.n;
  if (p.n != n_) throw std::invalid_argument("point dimension does not match set");
  std::uint64_t key = p.lex_key();
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) keys_.insert(it, key);
}

bool PointSet::contains(const CubePoint& p) const {
  if (p.n != n_) return false;
  return std::binary_search(keys_.begin(), keys_.end(), p.lex_key());
}

CubePoint PointSet::point(std::size_t idx) const {
  return CubePoint(n_, reverse_bits(keys_.at(idx), n_));
}

PointSet PointSet::from_sorted_keys(int dim, std::vector<std::uint64_t> keys) {
  PointSet s(dim);
  for (std::size_t i = 0; i + 1 < keys.size(); ++i)
    if (keys[i] >= keys[i + 1]) throw std::invalid_argument("keys not strictly increasing");
  s.keys_ = std::move(keys);
  return s;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

constexpr std::uint64_t kLayerSizeCap = 1ull << 26;

// Gosper's hack: next larger integer with the same popcount.
std::uint64_t next_same_weight(std::uint64_t x) {
  std::uint64_t u = x & (~x + 1);
  std::uint64_t v = u + x;
  if (v == 0) return 0;
  return v + (((v ^ x) / u) >> 2);
}

}  // namespace

PointSet layer(int n, int k) {
  if (n < 1 || n > kPointDimCap) throw std::invalid_argument("layer: dimension out of range");
  if (k < 0 || k > n) throw std::invalid_argument("layer: k out of range");
  std::uint64_t count = binomial(n, k);
  if (count > kLayerSizeCap) throw std::invalid_argument("layer: too large to materialize");
  std::vector<std::uint64_t> keys;
  keys.reserve(count);
  if (k == 0) {
    keys.push_back(0);
  } else {
    // Ascending lex keys of fixed weight; weight is preserved by bit reversal.
    std::uint64_t limit = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (std::uint64_t key = (1ull << k) - 1; key != 0 && key <= limit; key = next_same_weight(key))
      keys.push_back(key);
  }
  return PointSet::from_sorted_keys(n, std::move(keys));
}

PointSet tail_set(int n, int ell) {
  if (n < 1 || n > kPointDimCap) throw std::invalid_argument("tail_set: dimension out of range");
  if (ell < 1 || ell > n / 2) throw std::invalid_argument("tail_set: l out of range");
  PointSet out(n);
  for (int k = 0; k < ell; ++k) {
    out = set_union(out, layer(n, k));
    out = set_union(out, layer(n, n - k));
  }
  return out;
}

PointSet full_cube(int n) {
  if (n < 1 || n > enum_dim_cap()) throw std::invalid_argument("full_cube: dimension out of range");
  std::vector<std::uint64_t> keys(1ull << n);
  for (std::uint64_t i = 0; i < keys.size(); ++i) keys[i] = i;
  return PointSet::from_sorted_keys(n, std::move(keys));
}

std::set<int> weight_set(const PointSet& s) {
  std::set<int> out;
  for (std::uint64_t key : s.lex_keys()) out.insert(std::popcount(key));
  return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.dim() != b.dim()) throw std::invalid_argument("set_union: dimension mismatch");
  std::vector<std::uint64_t> keys;
  keys.reserve(a.size() + b.size());
  std::set_union(a.lex_keys().begin(), a.lex_keys().end(), b.lex_keys().begin(),
                 b.lex_keys().end(), std::back_inserter(keys));
  return PointSet::from_sorted_keys(a.dim(), std::move(keys));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) return a;
  if (a.dim() != b.dim()) throw std::invalid_argument("set_difference: dimension mismatch");
  std::vector<std::uint64_t> keys;
  std::set_difference(a.lex_keys().begin(), a.lex_keys().end(), b.lex_keys().begin(),
                      b.lex_keys().end(), std::back_inserter(keys));
  return PointSet::from_sorted_keys(a.dim(), std::move(keys));
}

std::vector<std::uint8_t> membership_bitmap(const PointSet& s) {
  if (s.dim() > enum_dim_cap()) throw std::invalid_argument("membership_bitmap: dimension too large");
  std::vector<std::uint8_t> table(1ull << s.dim(), 0);
  for (std::uint64_t key : s.lex_keys()) table[reverse_bits(key, s.dim())] = 1;
  return table;
}

}  // namespace hypercover
