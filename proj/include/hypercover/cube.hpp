#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hypercover {

/// Cap for operations that enumerate all 2^n vertices. Overridable through the
/// HYPERCOVER_MAX_N environment variable (at the caller's risk).
int enum_dim_cap();

/// Pointwise operations fit in a single 64-bit word.
inline constexpr int kPointDimCap = 63;

/// Reverses the low `n` bits of `x` (bit 0 swaps with bit n-1).
std::uint64_t reverse_bits(std::uint64_t x, int n);

/// One vertex of {0,1}^n. Bit i-1 of `bits` holds coordinate x_i, so the
/// serialized string "x_1 x_2 ... x_n" reads the word from bit 0 upward.
struct CubePoint {
  int n = 0;
  std::uint64_t bits = 0;

  CubePoint() = default;
  CubePoint(int dim, std::uint64_t b);

  int coordinate(int i) const;  // x_i for i in [1, n]
  CubePoint complemented() const;

  /// Key whose numeric order equals lexicographic order of the serialized
  /// string (x_1 is the most significant position).
  std::uint64_t lex_key() const { return reverse_bits(bits, n); }

  std::string str() const;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

int weight(const CubePoint& p);
bool lex_less(const CubePoint& a, const CubePoint& b);
CubePoint point_from_string(const std::string& s);

/// Deduplicated subset of {0,1}^n kept in lexicographic order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);

  int dim() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  void insert(const CubePoint& p);
  bool contains(const CubePoint& p) const;
  CubePoint point(std::size_t idx) const;

  /// Lexicographically ordered keys (see CubePoint::lex_key).
  const std::vector<std::uint64_t>& lex_keys() const { return keys_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Bulk constructor from strictly increasing lex keys.
  static PointSet from_sorted_keys(int dim, std::vector<std::uint64_t> keys);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> keys_;  // sorted ascending, unique
};

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(int n, int k);

/// All vertices of weight exactly k, in lexicographic order.
PointSet layer(int n, int k);

/// T(l) = { u : weight(u) < l or weight(u) > n-l }, for 1 <= l <= floor(n/2).
PointSet tail_set(int n, int ell);

/// All 2^n vertices (n capped by enum_dim_cap()).
PointSet full_cube(int n);

/// { weight(u) : u in S }.
std::set<int> weight_set(const PointSet& s);

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);

/// Dense membership table indexed by CubePoint::bits; size 2^n.
std::vector<std::uint8_t> membership_bitmap(const PointSet& s);

}  // namespace hypercover
