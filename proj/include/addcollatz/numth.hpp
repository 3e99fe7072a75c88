#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace addcollatz {

using u64 = std::uint64_t;

/// Largest value any public operation accepts or produces (2^63 - 1).
inline constexpr u64 kMaxValue = static_cast<u64>(std::numeric_limits<std::int64_t>::max());

/// Checked arithmetic against kMaxValue; throws OverflowError.
u64 checked_add(u64 u, u64 v);
u64 checked_mul(u64 u, u64 v);

/// Prime-exponent decomposition, primes strictly ascending.
struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  Factorization() = default;
  /// Validates ordering, primality of entries is the caller's promise.
  explicit Factorization(std::vector<PrimePower> entries);

  const std::vector<PrimePower>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Product of prime^exponent; 1 for the empty factorization.
  u64 value() const;
  /// Number of divisors, prod(e_i + 1).
  u64 divisor_count() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> entries_;
};

/// gcd with gcd(0, v) = v. Throws DomainError when both are zero.
u64 gcd(u64 u, u64 v);
/// Throws OverflowError when the result exceeds kMaxValue.
u64 lcm(u64 u, u64 v);

u64 mul_mod(u64 u, u64 v, u64 modulus);
u64 mod_pow(u64 base, u64 exponent, u64 modulus);
/// (1 + m + ... + m^(terms-1)) mod modulus, O(log terms).
u64 geometric_sum_mod(u64 m, u64 terms, u64 modulus);
/// v with u*v = 1 (mod m); 0 when m = 1. Throws NotInvertibleError.
u64 mod_inverse(u64 u, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division to 10^6, then Pollard-Brent rho on the cofactor.
Factorization factorize(u64 n);

std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

u64 carmichael_lambda(u64 n);
u64 carmichael_lambda(const Factorization& f);

/// Least t >= 1 with d^t = 1 (mod m); 1 when m = 1.
/// Computed by stripping prime factors from lambda(m).
u64 multiplicative_order(u64 d, u64 m);

}  // namespace addcollatz
