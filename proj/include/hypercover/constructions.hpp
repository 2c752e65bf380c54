#pragma once

#include "hypercover/cube.hpp"
#include "hypercover/planes.hpp"

namespace hypercover {

/// G_j : sum_i x_i - j = 0, for 0 <= j <= n. Its trace is the j-th layer.
Hyperplane level_plane(int n, int j);

/// The l planes H_j : sum_{i<=n-j} x_i - (n-2l+j) x_{n-j+1} - (l-j) = 0,
/// j in [l]. Their joint trace is exactly tail_set(n, l).
CoverFamily tail_cover(int n, int ell);

/// Family of max{k, n-k} + 2t - 2 planes covering every point of the k-th
/// layer exactly t-1 times and every other vertex at least t times.
CoverFamily layer_complement_cover(int n, int k, int t);

struct LayerMinusPoint {
  CoverFamily family;  // min{k, n-k} planes
  CubePoint missed;    // the unique uncovered vertex of the layer
};

/// Covers the k-th layer except one vertex; off-layer behaviour unconstrained.
LayerMinusPoint layer_minus_point_cover(int n, int k);

struct HalfcubeCover {
  CoverFamily family;  // n - 1 + 2(t-1) planes
  PointSet excluded;   // the half-cube set of 2^{n-1} vertices left out
};

/// The half-cube family: an exact-size (t, t-1)-cover whose excluded set has
/// index complexity 1, far below the log-cardinality bound.
HalfcubeCover halfcube_example_cover(int n, int t);

struct VenkitConjectureInstance {
  CoverFamily family;     // 4 planes
  PointSet covered;       // Q^7 minus the middle layer
  int cover_size;         // 4
  int conjectured_size;   // |weight_set(covered)| - 2 = 5
};

/// The n = 7 instance where an exact cover of size 4 beats the conjectured
/// minimum W(S) - 2 = 5 for symmetric sets.
VenkitConjectureInstance venkitesh_counterexample();

}  // namespace hypercover
