#include "hypercover/poly.hpp"

#include <cmath>

#include "hypercover/checked.hpp"
#include "hypercover/complexity.hpp"

namespace hypercover {

RatPoly plane_poly(const Hyperplane& h) {
  RatPoly out = rat_poly(h.n);
  RatPoly::Exponents e(static_cast<std::size_t>(h.n));
  for (int i = 0; i < h.n; ++i) {
    if (h.a[static_cast<std::size_t>(i)] == 0) continue;
    e[static_cast<std::size_t>(i)] = 1;
    out.add_term(e, Rational(h.a[static_cast<std::size_t>(i)]));
    e[static_cast<std::size_t>(i)] = 0;
  }
  out.add_term(e, Rational(checked_neg(h.b)));
  return out;
}

RatPoly from_family(const CoverFamily& f) {
  if (f.dim() < 1) throw std::invalid_argument("from_family: empty-dimension family");
  RatPoly out = RatPoly::constant(f.dim(), Rational(1));
  for (const auto& wp : f.planes()) {
    RatPoly factor = plane_poly(wp.plane);
    for (std::int64_t i = 0; i < wp.mult; ++i) out *= factor;
  }
  return out;
}

namespace {

std::int64_t falling_factorial(std::uint32_t e, std::uint32_t d) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < d; ++i) r = checked_mul(r, e - i);
  return r;
}

// All derivative values of P at p with total order < cap, keyed by the
// derivative's exponent vector. A term c * x^e contributes to d exactly when
// d matches e on the zero coordinates of p and d <= e on the one coordinates;
// the contribution is c * prod_{zeros} e_i! * prod_{ones} falling(e_i, d_i).
std::map<std::vector<std::uint32_t>, Rational> derivatives_at(const RatPoly& poly,
                                                              const CubePoint& p, int cap) {
  std::map<std::vector<std::uint32_t>, Rational> out;
  const int n = poly.nvars();
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n));
  std::vector<int> one_positions;

  for (const auto& [e, c] : poly.terms()) {
    int forced = 0;
    for (int i = 0; i < n; ++i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (((p.bits >> i) & 1u) == 0) forced += static_cast<int>(e[idx]);
    }
    if (forced >= cap) continue;

    Rational base = c;
    one_positions.clear();
    for (int i = 0; i < n; ++i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (((p.bits >> i) & 1u) == 0) {
        d[idx] = e[idx];
        base *= Rational(falling_factorial(e[idx], e[idx]));  // e_i!
      } else {
        d[idx] = 0;
        if (e[idx] > 0) one_positions.push_back(i);
      }
    }

    // Distribute the remaining derivative order over the one coordinates.
    int budget = cap - 1 - forced;
    auto emit = [&](auto&& self, std::size_t pos, int left, const Rational& coeff) -> void {
      auto [it, inserted] = out.emplace(d, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
      if (left == 0) return;
      for (std::size_t j = pos; j < one_positions.size(); ++j) {
        std::size_t idx = static_cast<std::size_t>(one_positions[j]);
        Rational scaled = coeff;
        std::uint32_t max_take = std::min<std::uint32_t>(e[idx], static_cast<std::uint32_t>(left));
        for (std::uint32_t take = 1; take <= max_take; ++take) {
          scaled *= Rational(e[idx] - (take - 1));
          d[idx] = take;
          self(self, j + 1, left - static_cast<int>(take), scaled);
        }
        d[idx] = 0;
      }
    };
    emit(emit, 0, budget, base);
  }
  return out;
}

}  // namespace

MultiplicityCert zero_multiplicity(const RatPoly& poly, const CubePoint& p, int cap) {
  if (poly.nvars() != p.n) throw std::invalid_argument("zero_multiplicity: dimension mismatch");
  if (cap < 0 || cap > 8) throw std::invalid_argument("zero_multiplicity: cap out of range [0, 8]");

  MultiplicityCert cert;
  cert.point = p;
  cert.order = cap;
  if (cap == 0) return cert;

  auto derivs = derivatives_at(poly, p, cap);
  int best_order = cap;
  const std::vector<std::uint32_t>* best = nullptr;
  for (const auto& [d, value] : derivs) {
    if (value.is_zero()) continue;
    int order = 0;
    for (std::uint32_t x : d) order += static_cast<int>(x);
    if (order < best_order) {  // map order is lex, so first hit per order wins
      best_order = order;
      best = &d;
    }
  }
  cert.order = best_order;
  if (best) cert.witness_derivative = *best;
  return cert;
}

namespace {

CoverReport poly_cover_report(const RatPoly& poly, const PointSet& s, int t, bool parallel) {
  const int n = poly.nvars();
  if (n > 20) throw std::invalid_argument("verify_poly_cover: dimension cap exceeded");
  if (t < 1 || t > 6) throw std::invalid_argument("verify_poly_cover: t out of range [1, 6]");
  if (s.dim() != 0 && s.dim() != n) throw std::invalid_argument("verify_poly_cover: dimension mismatch");

  std::vector<std::uint8_t> in_s(1ull << n, 0);
  for (std::uint64_t key : s.lex_keys()) in_s[reverse_bits(key, n)] = 1;

  const std::int64_t total = 1ll << n;
  std::vector<int> order(static_cast<std::size_t>(total), 0);
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t key = 0; key < total; ++key) {
    try {
      std::uint64_t bits = reverse_bits(static_cast<std::uint64_t>(key), n);
      order[static_cast<std::size_t>(key)] = zero_multiplicity(poly, CubePoint(n, bits), t).order;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  CoverReport report;
  report.family_size = poly.degree().value_or(0);
  for (std::int64_t key = 0; key < total; ++key) {
    std::uint64_t bits = reverse_bits(static_cast<std::uint64_t>(key), n);
    int got = order[static_cast<std::size_t>(key)];
    if (in_s[bits]) {
      if (got != t - 1)
        report.violations.push_back({CubePoint(n, bits), "mult == " + std::to_string(t - 1), got});
    } else {
      if (got < t)
        report.violations.push_back({CubePoint(n, bits), "mult >= " + std::to_string(t), got});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace

CoverReport verify_poly_cover(const RatPoly& poly, const PointSet& s, int t) {
  return poly_cover_report(poly, s, t, true);
}

CoverReport verify_poly_cover_serial(const RatPoly& poly, const PointSet& s, int t) {
  return poly_cover_report(poly, s, t, false);
}

DegreeCertReport check_degree_certificates(const RatPoly& poly, const PointSet& s, int t,
                                           DegreeBound mode) {
  CoverReport cover = verify_poly_cover(poly, s, t);
  if (!cover.ok)
    throw std::invalid_argument("check_degree_certificates: polynomial is not a (t, t-1)-cover");

  const int n = poly.nvars();
  DegreeCertReport report;
  report.mode = mode;
  switch (mode) {
    case DegreeBound::layer: {
      auto weights = weight_set(s);
      if (weights.size() != 1 || s.size() != binomial(n, *weights.begin()) || s != layer(n, *weights.begin()))
        throw std::invalid_argument("check_degree_certificates: S is not a full layer");
      int k = *weights.begin();
      report.bound = std::max(k, n - k) + 2 * t - 2;
      break;
    }
    case DegreeBound::index: {
      report.bound = n - index_complexity_exact(s).r + 2 * t - 2;
      break;
    }
    case DegreeBound::size: {
      if (s.empty()) throw std::invalid_argument("check_degree_certificates: empty S");
      int log2s = 0;
      while ((1ull << (log2s + 1)) <= s.size()) ++log2s;
      report.bound = n - log2s + 2 * t - 2;
      break;
    }
    case DegreeBound::sw: {
      if (s.size() != 1)
        throw std::invalid_argument("check_degree_certificates: sw mode needs a singleton S");
      report.bound = n + 2 * t - 2;
      break;
    }
  }
  auto deg = poly.degree();
  if (!deg) throw std::invalid_argument("check_degree_certificates: zero polynomial");
  report.degree = *deg;
  report.slack = report.degree - report.bound;
  report.ok = report.slack >= 0;
  return report;
}

}  // namespace hypercover
