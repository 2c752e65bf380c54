#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hypercover/complexity.hpp"
#include "hypercover/modp.hpp"
#include "hypercover/poly.hpp"

namespace hypercover {

/// Grid S_1 x ... x S_n inside Z_p^n with per-variable degree targets t_i.
struct GridSpec {
  std::uint32_t p = 0;
  std::vector<std::vector<std::uint32_t>> sets;  // each sorted, distinct, reduced mod p
  std::vector<std::uint64_t> degrees;            // t_i (equivalently c_i = |A_i| - 1)

  GridSpec(std::uint32_t prime, std::vector<std::vector<std::uint32_t>> s,
           std::vector<std::uint64_t> t);
  std::uint64_t cells() const;
};

/// Returns the lexicographically first grid point where f is nonzero. The
/// hypotheses (deg f = sum t_i, nonzero top coefficient, |S_i| > t_i) are
/// verified first and reported precisely on violation; a completed scan with
/// no hit is impossible under verified hypotheses and throws std::logic_error.
std::vector<std::uint32_t> cn_witness(const FpPoly& f, const GridSpec& grid);
std::vector<std::uint32_t> cn_witness_serial(const FpPoly& f, const GridSpec& grid);

/// Coefficient of x_1...x_n in (sum x_i) * prod h_j for the explicit family
/// h_j = n x_1 + sum_{i>=2} x_i - j (j in [n-2]), h_{n-1} = sum_{i>=2} x_i - (n-1),
/// computed by full sparse expansion and checked against (n-1)^3 (n-2)! mod p.
std::uint32_t claim_coeff(int n, std::uint32_t p);

/// Exact { sum a_i mod p : (a_1..a_n) in A_1 x ... x A_n \ forbidden }.
std::set<std::uint32_t> restricted_sumset(std::uint32_t p,
                                          const std::vector<std::vector<std::uint32_t>>& sets,
                                          const std::set<std::vector<std::uint32_t>>& forbidden);

/// Forbidden-set sumset instance: sets A_i, forbidden tuples S, exclusion
/// polynomial g vanishing on all of S but one tuple, and a pivot index k.
struct SumsetInstance {
  std::uint32_t p;
  std::vector<std::vector<std::uint32_t>> sets;
  std::set<std::vector<std::uint32_t>> forbidden;
  FpPoly g;
  int pivot;  // k, 1-based

  SumsetInstance(std::uint32_t prime, std::vector<std::vector<std::uint32_t>> a,
                 std::set<std::vector<std::uint32_t>> s, FpPoly poly, int k);

  long m() const;  // sum c_i - deg(g) - 1
};

struct ResSumReport {
  bool hypothesis_holds = false;  // the target coefficient is nonzero mod p
  std::uint32_t coeff = 0;
  long m = 0;
  std::set<std::uint32_t> sumset;  // filled only when the hypothesis holds
  bool bound_ok = false;           // |sumset| >= m + 1
};

/// Computes the coefficient of prod x_i^{c_i} in x_k g (sum x_i)^m by
/// multinomial assembly (the power sum is never expanded), then checks the
/// sumset lower bound when the coefficient is nonzero.
ResSumReport check_res_sum_theorem(const SumsetInstance& inst);

struct EhReport {
  std::size_t sum_count = 0;
  long bound = 0;  // min{p, 2|A| - 3}
  bool ok = false;
  bool route_checked = false;        // the forbidden-set sumset route also ran
  std::uint32_t route_coeff = 0;     // its hypothesis coefficient
};

/// Brute-force check of |{a + a' : a != a'}| >= min{p, 2|A|-3}, cross-checked
/// through check_res_sum_theorem whenever 2|A|-3 < p.
EhReport erdos_heilbronn_check(std::uint32_t p, const std::vector<std::uint32_t>& a);

struct CwReport {
  bool hypothesis_holds = false;  // (q-1) sum deg(P_i) < n (q-1) - a(T)
  long r = 0;                     // a(T)
  long deg_sum = 0;
  std::optional<std::vector<std::uint32_t>> zero;  // first common zero outside T
};

/// Verifies T lies in the common zero set, checks the degree hypothesis, and
/// scans Z_p^n \ T for a common zero (lexicographically first). Exhaustion
/// under a verified hypothesis signals an arithmetic bug and throws.
CwReport cw_generalized_search(const std::vector<FpPoly>& polys,
                               const std::vector<std::vector<std::uint32_t>>& t_set);
CwReport cw_generalized_search_serial(const std::vector<FpPoly>& polys,
                                      const std::vector<std::vector<std::uint32_t>>& t_set);

}  // namespace hypercover
