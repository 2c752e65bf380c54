#include "hypercover/constructions.hpp"

#include <stdexcept>

namespace hypercover {

namespace {

Hyperplane coordinate_plane(int n, std::int64_t value) {
  // x_1 - value = 0
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  a[0] = 1;
  return Hyperplane(n, std::move(a), value);
}

void add_duplicated_pair(CoverFamily& f, int n, int t) {
  // t-1 copies each of x_1 = 0 and x_1 = 1; every vertex lies on exactly one.
  if (t > 1) {
    f.add(coordinate_plane(n, 0), t - 1);
    f.add(coordinate_plane(n, 1), t - 1);
  }
}

}  // namespace

Hyperplane level_plane(int n, int j) {
  if (n < 1 || n > kPointDimCap) throw std::invalid_argument("level_plane: dimension out of range");
  if (j < 0 || j > n) throw std::invalid_argument("level_plane: j out of range");
  return Hyperplane(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1), j);
}

CoverFamily tail_cover(int n, int ell) {
  if (n < 2 || n > kPointDimCap) throw std::invalid_argument("tail_cover: dimension out of range");
  if (ell < 1 || ell > n / 2) throw std::invalid_argument("tail_cover: l out of range");
  CoverFamily f(n);
  for (int j = 1; j <= ell; ++j) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n - j; ++i) a[static_cast<std::size_t>(i - 1)] = 1;
    a[static_cast<std::size_t>(n - j)] = -(n - 2 * ell + j);  // coefficient of x_{n-j+1}
    f.add(Hyperplane(n, std::move(a), ell - j));
  }
  return f;
}

CoverFamily layer_complement_cover(int n, int k, int t) {
  if (n < 1 || n > kPointDimCap)
    throw std::invalid_argument("layer_complement_cover: dimension out of range");
  if (k < 0 || k > n) throw std::invalid_argument("layer_complement_cover: k out of range");
  if (t < 1) throw std::invalid_argument("layer_complement_cover: t must be positive");

  CoverFamily f(n);
  if (k == 0 || k == n) {
    for (int j = 0; j <= n; ++j)
      if (j != k) f.add(level_plane(n, j));
  } else {
    int r = std::min(k, n - k);
    f.add_all(tail_cover(n, r));
    // Middle window of level planes; the window depends on which side k is on.
    int lo = (r == k) ? r + 1 : r;
    int hi = (r == k) ? n - r : n - r - 1;
    for (int j = lo; j <= hi; ++j) f.add(level_plane(n, j));
  }
  add_duplicated_pair(f, n, t);
  return f;
}

LayerMinusPoint layer_minus_point_cover(int n, int k) {
  if (n < 1 || n > kPointDimCap)
    throw std::invalid_argument("layer_minus_point_cover: dimension out of range");
  if (k < 0 || k > n) throw std::invalid_argument("layer_minus_point_cover: k out of range");

  LayerMinusPoint out;
  out.family = CoverFamily(n);
  if (k <= n - k) {
    // H_j : n x_j + sum_{i != j} x_i - k = 0, j in [k]; misses 1^k 0^{n-k}.
    for (int j = 1; j <= k; ++j) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
      a[static_cast<std::size_t>(j - 1)] = n;
      out.family.add(Hyperplane(n, std::move(a), k));
    }
    out.missed = CubePoint(n, (k == 0) ? 0 : ((1ull << k) - 1));
  } else {
    // Bit-complement of the k' = n-k construction, rescaled to positive form:
    // n x_j + sum_{i != j} x_i - (n + k - 1) = 0, j in [n-k]; misses 0^{n-k} 1^k.
    for (int j = 1; j <= n - k; ++j) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
      a[static_cast<std::size_t>(j - 1)] = n;
      out.family.add(Hyperplane(n, std::move(a), n + k - 1));
    }
    std::uint64_t ones = (k == 64) ? ~0ull : ((1ull << k) - 1);
    out.missed = CubePoint(n, ones << (n - k));
  }
  return out;
}

HalfcubeCover halfcube_example_cover(int n, int t) {
  if (n < 3) throw std::invalid_argument("halfcube_example_cover: requires n >= 3");
  if (n > enum_dim_cap())
    throw std::invalid_argument("halfcube_example_cover: dimension out of range");
  if (t < 1) throw std::invalid_argument("halfcube_example_cover: t must be positive");

  HalfcubeCover out;
  out.family = CoverFamily(n);
  // H_j : n x_1 + sum_{i>=2} x_i - j = 0 for j in [n-2], and sum_{i>=2} x_i = n-1.
  for (int j = 1; j <= n - 2; ++j) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
    a[0] = n;
    out.family.add(Hyperplane(n, std::move(a), j));
  }
  {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
    a[0] = 0;
    out.family.add(Hyperplane(n, std::move(a), n - 1));
  }
  add_duplicated_pair(out.family, n, t);

  // Excluded set: { u : u_1 = 1, sum_{i>=2} u_i < n-1 } union { origin }.
  std::vector<std::uint64_t> keys;
  keys.reserve(1ull << (n - 1));
  for (std::uint64_t key = 0; key < (1ull << n); ++key) {
    std::uint64_t bits = reverse_bits(key, n);
    if (bits == 0) {
      keys.push_back(key);
      continue;
    }
    if ((bits & 1u) && std::popcount(bits >> 1) < n - 1) keys.push_back(key);
  }
  out.excluded = PointSet::from_sorted_keys(n, std::move(keys));
  return out;
}

VenkitConjectureInstance venkitesh_counterexample() {
  VenkitConjectureInstance inst;
  inst.family = layer_complement_cover(7, 3, 1);
  inst.covered = set_difference(full_cube(7), layer(7, 3));
  inst.cover_size = static_cast<int>(inst.family.size());
  inst.conjectured_size = static_cast<int>(weight_set(inst.covered).size()) - 2;
  return inst;
}

}  // namespace hypercover
