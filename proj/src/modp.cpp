#include "hypercover/modp.hpp"

#include <numeric>
#include <stdexcept>

namespace hypercover {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t prime) : p(prime) {
  if (p < 2 || p > 10000) throw std::invalid_argument("FieldSpec: modulus out of range [2, 10^4]");
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: modulus is not prime");
}

Fp Fp::make(std::int64_t x, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("Fp: modulus must be at least 2");
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r), p};
}

namespace {
void require_same_field(Fp a, Fp b) {
  if (a.p != b.p) throw std::invalid_argument("Fp: mixing elements of different fields");
}
}  // namespace

Fp operator+(Fp a, Fp b) {
  require_same_field(a, b);
  return {add_mod(a.v, b.v, a.p), a.p};
}

Fp operator-(Fp a, Fp b) {
  require_same_field(a, b);
  return {sub_mod(a.v, b.v, a.p), a.p};
}

Fp operator*(Fp a, Fp b) {
  require_same_field(a, b);
  return {mul_mod(a.v, b.v, a.p), a.p};
}

Fp Fp::inv() const { return {inv_mod(v, p), p}; }
Fp Fp::pow(std::uint64_t e) const { return {pow_mod(v, e, p), p}; }

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  // Extended Euclid on (a, p).
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("not invertible: modulus is not prime");
  std::int64_t inv = old_s % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

namespace {

// C(n, k) mod p for n, k < p, by factorials.
std::uint32_t binom_small(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul_mod(num, static_cast<std::uint32_t>((n - i) % p), p);
    den = mul_mod(den, static_cast<std::uint32_t>((i + 1) % p), p);
  }
  return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("binomial_mod: modulus must be prime");
  if (k > n) return 0;
  std::uint32_t r = 1;
  while (n > 0 || k > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;  // a carry in base p kills the binomial
    r = mul_mod(r, binom_small(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return r;
}

std::uint32_t multinomial_mod(std::uint64_t m, std::span<const std::uint64_t> parts,
                              std::uint32_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t part : parts) total += part;
  if (total != m) return 0;
  std::uint32_t r = 1;
  std::uint64_t remaining = m;
  for (std::uint64_t part : parts) {
    r = mul_mod(r, binomial_mod(remaining, part, p), p);
    remaining -= part;
  }
  return r;
}

namespace {

// Row echelon over Z_p; returns rank and leaves m reduced with pivot columns recorded.
std::size_t echelon(FpMatrix& m, std::vector<std::size_t>* pivot_cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
    std::uint32_t scale = inv_mod(m.at(rank, col), m.p);
    for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = mul_mod(m.at(rank, c), scale, m.p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      std::uint32_t factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = sub_mod(m.at(r, c), mul_mod(factor, m.at(rank, c), m.p), m.p);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t fp_rank(FpMatrix m) { return echelon(m, nullptr); }

std::vector<std::vector<std::uint32_t>> fp_nullspace(FpMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = echelon(m, &pivots);
  std::vector<std::uint8_t> is_pivot(m.cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> x(m.cols, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      // Row r reads x_{pivot_r} + sum(coeff * x_free) = 0.
      std::uint32_t coeff = m.at(r, free_col);
      if (coeff != 0) x[pivots[r]] = sub_mod(0, coeff, m.p);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace hypercover
