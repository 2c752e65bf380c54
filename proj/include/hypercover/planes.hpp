#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercover/cube.hpp"

namespace hypercover {

/// Affine form H(x) = <a, x> - b with exact integer coefficients, a != 0.
struct Hyperplane {
  int n = 0;
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  Hyperplane() = default;
  Hyperplane(int dim, std::vector<std::int64_t> coeffs, std::int64_t offset);

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// H(p), exact.
std::int64_t eval(const Hyperplane& h, const CubePoint& p);

struct WeightedPlane {
  Hyperplane plane;
  std::int64_t mult = 1;

  friend bool operator==(const WeightedPlane&, const WeightedPlane&) = default;
};

/// Multiset of hyperplanes in a common dimension; duplicates are counted.
class CoverFamily {
 public:
  CoverFamily() = default;
  explicit CoverFamily(int dim);

  int dim() const { return n_; }
  std::int64_t size() const { return size_; }  // with multiplicity
  const std::vector<WeightedPlane>& planes() const { return planes_; }

  void add(Hyperplane h, std::int64_t mult = 1);
  void add_all(const CoverFamily& other);

  /// Family with entry `idx` used one time less (dropped when its count hits 0).
  CoverFamily without_one(std::size_t idx) const;

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;

 private:
  int n_ = 0;
  std::vector<WeightedPlane> planes_;
  std::int64_t size_ = 0;
};

/// Per-vertex cover counts, dense over all 2^n points, indexed by CubePoint::bits.
struct MultiplicityProfile {
  int n = 0;
  std::vector<std::int64_t> counts;

  std::int64_t at(const CubePoint& p) const { return counts[p.bits]; }
};

/// counts[p] = #{ H in F, with multiplicity : H(p) = 0 }. OpenMP over points
/// when available; the result is identical to profile_serial by contract.
MultiplicityProfile profile(const CoverFamily& f);

/// Plain reference implementation, kept for testing and benchmarking.
MultiplicityProfile profile_serial(const CoverFamily& f);

struct Violation {
  CubePoint point;
  std::string rule;  // "== l" or ">= t"
  std::int64_t count = 0;
};

struct CoverReport {
  bool ok = false;
  std::int64_t family_size = 0;
  std::vector<Violation> violations;
};

/// Checks that every point of S is covered exactly `l` times and every point
/// of Q^n \ S at least `t` times. Requires l < t.
CoverReport verify_cover(const CoverFamily& f, const PointSet& s, std::int64_t t, std::int64_t l);

/// Points covered at least once, as a set.
PointSet trace(const CoverFamily& f);

/// Points of Q^n on the hyperplane.
PointSet trace(const Hyperplane& h);

}  // namespace hypercover
