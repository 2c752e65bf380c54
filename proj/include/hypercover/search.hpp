#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercover/cube.hpp"
#include "hypercover/planes.hpp"

namespace hypercover {

/// One realizable hyperplane trace on Q^n (n <= 5), stored as a bitset over the
/// 2^n vertices (bit = CubePoint::bits), with a smallest-coefficient representative.
struct TraceEntry {
  std::uint32_t points = 0;
  Hyperplane rep;
};

struct TraceCatalog {
  int n = 0;
  int coeff_bound = 0;
  std::vector<TraceEntry> entries;  // sorted by trace bitset, distinct
};

/// Enumerates every trace realized by planes with a_i in [-B, B] (not all
/// zero) and b in [-nB, nB], deduplicated by trace.
TraceCatalog enumerate_traces(int n, int coeff_bound);

struct SearchResult {
  bool found = false;
  int size = 0;
  CoverFamily family;
  long lower_bound = 0;       // theorem bound used to seed the search (l = t-1 only)
  int max_size_searched = 0;  // every multiset size up to this was exhausted
  bool exhausted = false;     // no feasible family exists within the catalog up to that size
  bool lex_minimal = false;   // the family is the lexicographic minimum at its size
};

/// Branch-and-bound over multisets of catalog traces: ascending family size
/// starting at the applicable theorem lower bound, feasibility by exact
/// verify_cover semantics. Minimality claims are scoped to the catalog.
SearchResult min_cover_search(const TraceCatalog& catalog, const PointSet& s, int t, int l,
                              int max_size = -1);

}  // namespace hypercover
