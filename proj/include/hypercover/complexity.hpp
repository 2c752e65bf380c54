#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercover/cube.hpp"
#include "hypercover/poly.hpp"

namespace hypercover {

/// Certificate for index complexity: v in S together with a coordinate window
/// I such that every other member of S differs from v somewhere inside I.
struct IndexWitness {
  CubePoint v;
  std::vector<int> coords;  // 1-based, strictly increasing
};

/// Validates the witness against S, independently of any search code.
bool check_index_witness(const PointSet& s, const IndexWitness& w);

struct IndexComplexity {
  int r = 0;
  std::optional<IndexWitness> witness;  // absent for singleton S
};

/// Exact r(S) by iterative deepening on |I|; the search visits |I| ascending,
/// then I in lexicographic order, then v in lexicographic order, and returns
/// the first hit. The greedy bound floor(log2 |S|) caps the deepening.
IndexComplexity index_complexity_exact(const PointSet& s);

struct GreedyIndexComplexity {
  int k = 0;
  IndexWitness witness;
};

/// Halving heuristic: repeatedly split on the lowest-index non-constant
/// coordinate and keep the strictly smaller side (ties keep the 0 side).
/// Guarantees k <= floor(log2 |S|).
GreedyIndexComplexity index_complexity_greedy(const PointSet& s);

/// Certificate for algebraic complexity over Z_p: a reduced polynomial g that
/// vanishes on S except at v, where it is nonzero.
struct AlgWitness {
  FpPoly g;
  std::vector<std::uint32_t> v;
  long degree = 0;
};

bool check_alg_witness(const std::vector<std::vector<std::uint32_t>>& s, std::uint32_t p,
                       const AlgWitness& w);

struct AlgComplexity {
  long a = 0;
  AlgWitness witness;
};

/// Minimal degree of a reduced polynomial over Z_p vanishing on all of S but
/// one point, found by ascending-degree rank tests (exact elimination mod p).
/// Accepts arbitrary finite point sets in Z_p^n.
AlgComplexity algebraic_complexity(const std::vector<std::vector<std::uint32_t>>& s,
                                   std::uint32_t p);

}  // namespace hypercover
