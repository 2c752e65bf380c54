#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hypercover {

bool is_prime(std::uint32_t n);

/// Prime modulus holder; construction checks primality.
struct FieldSpec {
  std::uint32_t p;
  explicit FieldSpec(std::uint32_t prime);
};

/// Element of Z_p carrying its modulus. Mixing moduli throws.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  static Fp make(std::int64_t x, std::uint32_t p);

  bool is_zero() const { return v == 0; }
  Fp context_int(std::int64_t k) const { return make(k, p); }

  Fp operator-() const { return {v == 0 ? 0 : p - v, p}; }
  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;
  std::string str() const { return std::to_string(v); }
};

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// C(n, k) mod p via Lucas' theorem; exact for any 64-bit n, k.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// m! / (parts_0! ... parts_r!) mod p where sum(parts) == m; 0 otherwise.
std::uint32_t multinomial_mod(std::uint64_t m, std::span<const std::uint64_t> parts,
                              std::uint32_t p);

/// Dense row-major matrix over Z_p.
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> data;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c, std::uint32_t prime)
      : rows(r), cols(c), p(prime), data(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank by exact Gaussian elimination over Z_p (the input is copied).
std::size_t fp_rank(FpMatrix m);

/// Basis of the right nullspace { x : M x = 0 }, one vector per column of slack.
std::vector<std::vector<std::uint32_t>> fp_nullspace(FpMatrix m);

}  // namespace hypercover
