#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercover/cube.hpp"
#include "hypercover/modp.hpp"
#include "hypercover/planes.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

/// Exact sparse multivariate polynomial over a coefficient type C
/// (Rational or Fp). Only nonzero coefficients are stored; the zero
/// polynomial has no terms and its degree is a distinct "none" value,
/// never an integer sentinel.
template <class C>
class SparsePoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  SparsePoly(int nvars, C zero) : n_(nvars), zero_(std::move(zero)) {
    if (nvars < 1) throw std::invalid_argument("SparsePoly: needs at least one variable");
  }

  int nvars() const { return n_; }
  const C& zero_elem() const { return zero_; }
  const std::map<Exponents, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<long> degree() const {
    std::optional<long> d;
    for (const auto& [e, c] : terms_) {
      long total = 0;
      for (std::uint32_t x : e) total += x;
      if (!d || total > *d) d = total;
    }
    return d;
  }

  C coefficient_of(const Exponents& e) const {
    check_exponents(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    check_exponents(e);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly out(n_, zero_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    a.check_compatible(b);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_compatible(b);
    SparsePoly out(a.n_, a.zero_);
    Exponents e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Formal derivative in variable `var` (1-based).
  SparsePoly partial_derivative(int var) const {
    if (var < 1 || var > n_) throw std::out_of_range("partial_derivative: variable out of range");
    SparsePoly out(n_, zero_);
    std::size_t idx = static_cast<std::size_t>(var - 1);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents d = e;
      --d[idx];
      out.add_term(d, c * zero_.context_int(e[idx]));
    }
    return out;
  }

  C evaluate(std::span<const C> point) const {
    if (point.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("evaluate: point dimension mismatch");
    C acc = zero_;
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
      acc += term;
    }
    return acc;
  }

  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly out(nvars, c.context_int(0));
    out.add_term(Exponents(static_cast<std::size_t>(nvars)), c);
    return out;
  }

  /// The monomial x_i (1-based).
  static SparsePoly variable(int nvars, int i, const C& one) {
    SparsePoly out(nvars, one.context_int(0));
    Exponents e(static_cast<std::size_t>(nvars));
    e.at(static_cast<std::size_t>(i - 1)) = 1;
    out.add_term(e, one);
    return out;
  }

 private:
  void check_exponents(const Exponents& e) const {
    if (e.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
  }
  void check_compatible(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SparsePoly: variable count mismatch");
    if (!(zero_ == o.zero_)) throw std::invalid_argument("SparsePoly: coefficient domain mismatch");
  }

  int n_;
  C zero_;
  std::map<Exponents, C> terms_;
};

using RatPoly = SparsePoly<Rational>;
using FpPoly = SparsePoly<Fp>;

inline RatPoly rat_poly(int nvars) { return RatPoly(nvars, Rational()); }
inline FpPoly fp_poly(int nvars, std::uint32_t p) { return FpPoly(nvars, Fp::make(0, p)); }

/// The affine form of a hyperplane as a degree-1 polynomial over Q.
RatPoly plane_poly(const Hyperplane& h);

/// Product of the affine forms of the family (with multiplicity); degree = size.
RatPoly from_family(const CoverFamily& f);

struct MultiplicityCert {
  CubePoint point;
  int order = 0;  // capped at the requested cap
  std::optional<std::vector<std::uint32_t>> witness_derivative;  // absent iff order == cap
};

/// Order of vanishing of P at a hypercube point, computed from formal partial
/// derivatives and capped at `cap` (cap <= 8). Rational domain only.
MultiplicityCert zero_multiplicity(const RatPoly& poly, const CubePoint& p, int cap);

/// Checks multiplicity >= t off S and exactly t-1 on S, over all of Q^n.
/// OpenMP over points; identical to verify_poly_cover_serial by contract.
CoverReport verify_poly_cover(const RatPoly& poly, const PointSet& s, int t);
CoverReport verify_poly_cover_serial(const RatPoly& poly, const PointSet& s, int t);

enum class DegreeBound { layer, index, size, sw };

struct DegreeCertReport {
  DegreeBound mode;
  long bound = 0;
  long degree = 0;
  long slack = 0;
  bool ok = false;  // degree >= bound; a failure here means an implementation bug
};

/// Verifies the cover precondition, then checks deg(P) against the selected
/// lower bound: layer -> max{k,n-k}+2t-2, index -> n-r(S)+2t-2,
/// size -> n-floor(log2|S|)+2t-2, sw -> n+2t-2 (singleton S).
DegreeCertReport check_degree_certificates(const RatPoly& poly, const PointSet& s, int t,
                                           DegreeBound mode);

struct GridReport {
  int failed_clause = 0;  // 0 = all hypotheses hold; 1, 2, 3 = first failing clause
  std::optional<long> deg_f;
  std::optional<long> deg_g;
  long bound = 0;  // sum_i (|S_i| - 1)
  bool inequality_ok = false;
  bool ok() const { return failed_clause == 0 && inequality_ok; }
};

/// Exhaustively verifies, over the grid S_1 x ... x S_n:
///   (1) f vanishes on the grid outside T,
///   (2) f is nonzero on every point of T,
///   (3) g vanishes on exactly |T|-1 points of T,
/// and then checks deg(f) + deg(g) >= sum (|S_i| - 1).
template <class C>
GridReport check_grid_theorem(const SparsePoly<C>& f, const SparsePoly<C>& g,
                              const std::vector<std::vector<C>>& t_set,
                              const std::vector<std::vector<C>>& grid);

// --- implementation of the templated grid check ---

template <class C>
GridReport check_grid_theorem(const SparsePoly<C>& f, const SparsePoly<C>& g,
                              const std::vector<std::vector<C>>& t_set,
                              const std::vector<std::vector<C>>& grid) {
  const std::size_t n = grid.size();
  if (n == 0) throw std::invalid_argument("check_grid_theorem: empty grid");
  if (f.nvars() != static_cast<int>(n) || g.nvars() != static_cast<int>(n))
    throw std::invalid_argument("check_grid_theorem: variable count mismatch");
  if (t_set.empty()) throw std::invalid_argument("check_grid_theorem: T must be nonempty");

  std::uint64_t cells = 1;
  for (const auto& axis : grid) {
    if (axis.empty()) throw std::invalid_argument("check_grid_theorem: empty grid axis");
    for (std::size_t i = 0; i < axis.size(); ++i)
      for (std::size_t j = i + 1; j < axis.size(); ++j)
        if (axis[i] == axis[j])
          throw std::invalid_argument("check_grid_theorem: repeated grid value");
    cells *= axis.size();
    if (cells > 1000000) throw std::invalid_argument("check_grid_theorem: grid size cap exceeded");
  }

  // Locate T cells by coordinate index within each axis.
  std::vector<std::vector<std::uint32_t>> t_idx;
  for (const auto& point : t_set) {
    if (point.size() != n) throw std::invalid_argument("check_grid_theorem: T point arity mismatch");
    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < grid[i].size(); ++j) {
        if (grid[i][j] == point[i]) {
          idx[i] = static_cast<std::uint32_t>(j);
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("check_grid_theorem: T point outside the grid");
    }
    t_idx.push_back(std::move(idx));
  }
  std::sort(t_idx.begin(), t_idx.end());
  if (std::adjacent_find(t_idx.begin(), t_idx.end()) != t_idx.end())
    throw std::invalid_argument("check_grid_theorem: repeated T point");

  GridReport report;
  report.deg_f = f.degree();
  report.deg_g = g.degree();
  long bound = 0;
  for (const auto& axis : grid) bound += static_cast<long>(axis.size()) - 1;
  report.bound = bound;

  // One exhaustive pass; clauses are then reported in statement order, so a
  // doubly-bad instance is attributed to the lowest-numbered hypothesis.
  std::vector<std::uint32_t> idx(n, 0);
  std::vector<C> value(n, f.zero_elem());
  bool f_nonzero_off_t = false;
  bool f_zero_on_t = false;
  std::size_t zeros_of_g_in_t = 0;
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    for (std::size_t i = 0; i < n; ++i) value[i] = grid[i][idx[i]];
    bool in_t = std::binary_search(t_idx.begin(), t_idx.end(), idx);
    bool f_zero = f.evaluate(value).is_zero();
    if (!in_t && !f_zero) f_nonzero_off_t = true;
    if (in_t) {
      if (f_zero) f_zero_on_t = true;
      if (g.evaluate(value).is_zero()) ++zeros_of_g_in_t;
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < grid[i].size()) break;
      idx[i] = 0;
    }
  }
  if (f_nonzero_off_t) {
    report.failed_clause = 1;
    return report;
  }
  if (f_zero_on_t) {
    report.failed_clause = 2;
    return report;
  }
  if (zeros_of_g_in_t != t_idx.size() - 1) {
    report.failed_clause = 3;
    return report;
  }
  report.inequality_ok = *report.deg_f + *report.deg_g >= bound;
  return report;
}

}  // namespace hypercover
