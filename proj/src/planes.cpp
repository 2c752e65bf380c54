#include "hypercover/planes.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercover/checked.hpp"

namespace hypercover {

Hyperplane::Hyperplane(int dim, std::vector<std::int64_t> coeffs, std::int64_t offset)
    : n(dim), a(std::move(coeffs)), b(offset) {
  if (dim < 1 || dim > kPointDimCap) throw std::invalid_argument("Hyperplane dimension out of range");
  if (a.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("Hyperplane coefficient count does not match dimension");
  if (std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; }))
    throw std::invalid_argument("Hyperplane requires a nonzero normal vector");
}

std::int64_t eval(const Hyperplane& h, const CubePoint& p) {
  if (h.n != p.n) throw std::invalid_argument("eval: dimension mismatch");
  std::int64_t dot = 0;
  std::uint64_t bits = p.bits;
  while (bits) {
    int i = std::countr_zero(bits);
    dot = checked_add(dot, h.a[static_cast<std::size_t>(i)]);
    bits &= bits - 1;
  }
  return checked_sub(dot, h.b);
}

CoverFamily::CoverFamily(int dim) : n_(dim) {
  if (dim < 1 || dim > kPointDimCap) throw std::invalid_argument("CoverFamily dimension out of range");
}

void CoverFamily::add(Hyperplane h, std::int64_t mult) {
  if (mult < 0) throw std::invalid_argument("CoverFamily: negative multiplicity");
  if (mult == 0) return;
  if (n_ == 0) n_ = h.n;
  if (h.n != n_) throw std::invalid_argument("CoverFamily: plane dimension mismatch");
  size_ = checked_add(size_, mult);
  for (auto& wp : planes_) {
    if (wp.plane == h) {
      wp.mult += mult;
      return;
    }
  }
  planes_.push_back({std::move(h), mult});
}

void CoverFamily::add_all(const CoverFamily& other) {
  for (const auto& wp : other.planes()) add(wp.plane, wp.mult);
}

CoverFamily CoverFamily::without_one(std::size_t idx) const {
  if (idx >= planes_.size()) throw std::out_of_range("without_one: index out of range");
  CoverFamily out(n_);
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    std::int64_t m = planes_[i].mult - (i == idx ? 1 : 0);
    out.add(planes_[i].plane, m);
  }
  return out;
}

namespace {

std::int64_t count_at(const CoverFamily& f, std::uint64_t bits) {
  std::int64_t c = 0;
  for (const auto& wp : f.planes()) {
    std::int64_t dot = 0;
    std::uint64_t m = bits;
    while (m) {
      int i = std::countr_zero(m);
      dot = checked_add(dot, wp.plane.a[static_cast<std::size_t>(i)]);
      m &= m - 1;
    }
    if (dot == wp.plane.b) c += wp.mult;
  }
  return c;
}

void check_profile_dim(const CoverFamily& f) {
  if (f.dim() < 1) throw std::invalid_argument("profile: empty-dimension family");
  if (f.dim() > enum_dim_cap()) throw std::invalid_argument("profile: dimension cap exceeded");
}

}  // namespace

MultiplicityProfile profile_serial(const CoverFamily& f) {
  check_profile_dim(f);
  MultiplicityProfile prof;
  prof.n = f.dim();
  prof.counts.assign(1ull << f.dim(), 0);
  for (std::uint64_t bits = 0; bits < prof.counts.size(); ++bits)
    prof.counts[bits] = count_at(f, bits);
  return prof;
}

MultiplicityProfile profile(const CoverFamily& f) {
  check_profile_dim(f);
  MultiplicityProfile prof;
  prof.n = f.dim();
  prof.counts.assign(1ull << f.dim(), 0);
  const std::int64_t total = static_cast<std::int64_t>(prof.counts.size());
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static)
  for (std::int64_t bits = 0; bits < total; ++bits) {
    try {
      prof.counts[static_cast<std::uint64_t>(bits)] = count_at(f, static_cast<std::uint64_t>(bits));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return prof;
}

CoverReport verify_cover(const CoverFamily& f, const PointSet& s, std::int64_t t, std::int64_t l) {
  if (t < 1) throw std::invalid_argument("verify_cover: t must be positive");
  if (l < 0 || l >= t) throw std::invalid_argument("verify_cover: requires 0 <= l < t");
  if (s.dim() != 0 && s.dim() != f.dim())
    throw std::invalid_argument("verify_cover: dimension mismatch");

  MultiplicityProfile prof = profile(f);
  std::vector<std::uint8_t> in_s(1ull << f.dim(), 0);
  for (std::uint64_t key : s.lex_keys()) in_s[reverse_bits(key, f.dim())] = 1;

  CoverReport report;
  report.family_size = f.size();
  // Scan in lexicographic order so violation lists are reproducible.
  for (std::uint64_t key = 0; key < (1ull << f.dim()); ++key) {
    std::uint64_t bits = reverse_bits(key, f.dim());
    std::int64_t c = prof.counts[bits];
    if (in_s[bits]) {
      if (c != l) report.violations.push_back({CubePoint(f.dim(), bits), "== " + std::to_string(l), c});
    } else {
      if (c < t) report.violations.push_back({CubePoint(f.dim(), bits), ">= " + std::to_string(t), c});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

PointSet trace(const CoverFamily& f) {
  MultiplicityProfile prof = profile(f);
  std::vector<std::uint64_t> keys;
  for (std::uint64_t key = 0; key < (1ull << f.dim()); ++key)
    if (prof.counts[reverse_bits(key, f.dim())] > 0) keys.push_back(key);
  return PointSet::from_sorted_keys(f.dim(), std::move(keys));
}

PointSet trace(const Hyperplane& h) {
  CoverFamily f(h.n);
  f.add(h);
  return trace(f);
}

}  // namespace hypercover
