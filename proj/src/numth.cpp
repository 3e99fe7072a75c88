#include "addcollatz/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "addcollatz/errors.hpp"

namespace addcollatz {

namespace {

using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 abs_diff(u64 u, u64 v) { return u > v ? u - v : v - u; }

// Pollard-Brent with f(x) = x^2 + c. Deterministic: c walks 1, 2, ...
u64 find_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 batch = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 f = find_factor(n);
  factor_into(f, primes);
  factor_into(n / f, primes);
}

void push_factor(std::vector<PrimePower>& out, u64 p, unsigned e) {
  if (e > 0) out.push_back({p, e});
}

}  // namespace

u64 checked_add(u64 u, u64 v) {
  if (u > kMaxValue || v > kMaxValue - u) {
    throw OverflowError("addition " + std::to_string(u) + " + " + std::to_string(v) +
                        " exceeds 2^63-1");
  }
  return u + v;
}

u64 checked_mul(u64 u, u64 v) {
  const u128 p = static_cast<u128>(u) * v;
  if (p > kMaxValue) {
    throw OverflowError("product " + std::to_string(u) + " * " + std::to_string(v) +
                        " exceeds 2^63-1");
  }
  return static_cast<u64>(p);
}

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].prime < 2 || entries_[i].exponent == 0) {
      throw DomainError("factorization entries need prime >= 2 and exponent >= 1");
    }
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
      throw DomainError("factorization primes must be strictly ascending");
    }
  }
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : entries_) {
    for (unsigned i = 0; i < e; ++i) v = checked_mul(v, p);
  }
  return v;
}

u64 Factorization::divisor_count() const {
  u64 c = 1;
  for (const auto& pe : entries_) c = checked_mul(c, pe.exponent + 1);
  return c;
}

u64 gcd(u64 u, u64 v) {
  if (u == 0 && v == 0) throw DomainError("gcd(0, 0) is undefined");
  return std::gcd(u, v);
}

u64 lcm(u64 u, u64 v) {
  if (u == 0 || v == 0) return 0;
  return checked_mul(u / std::gcd(u, v), v);
}

u64 mul_mod(u64 u, u64 v, u64 modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  return static_cast<u64>(static_cast<u128>(u) * v % modulus);
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

u64 geometric_sum_mod(u64 m, u64 terms, u64 modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  // sum(n) over the bits of n, most significant first:
  //   sum(2k) = sum(k) * (1 + m^k),  sum(k+1) = 1 + m*sum(k)
  m %= modulus;
  u64 sum = 0;
  u64 power = 1 % modulus;  // m^k for the prefix processed so far
  for (int bit = 63; bit >= 0; --bit) {
    sum = mul_mod(sum, (1 + power) % modulus, modulus);
    power = mul_mod(power, power, modulus);
    if ((terms >> bit) & 1) {
      sum = (1 + mul_mod(m, sum, modulus)) % modulus;
      power = mul_mod(power, m, modulus);
    }
  }
  return sum;
}

u64 mod_inverse(u64 u, u64 m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(u % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) {
    throw NotInvertibleError(std::to_string(u) + " is not invertible modulo " + std::to_string(m));
  }
  __int128 v = old_s % static_cast<__int128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 odd = n - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  // The first twelve prime bases are deterministic below 3.18 * 10^23.
  for (u64 base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = mod_pow(base, odd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < twos; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    push_factor(out, p, e);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= kTrialLimit && p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    // Every remaining prime factor exceeds the trial bound (or n is prime).
    std::vector<u64> big;
    factor_into(n, big);
    std::sort(big.begin(), big.end());
    for (std::size_t i = 0; i < big.size();) {
      std::size_t j = i;
      while (j < big.size() && big[j] == big[i]) ++j;
      push_factor(out, big[i], static_cast<unsigned>(j - i));
      i = j;
    }
  }
  return Factorization(std::move(out));
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t prior = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < prior; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f) {
    phi *= p - 1;
    for (unsigned k = 1; k < e; ++k) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 carmichael_lambda(const Factorization& f) {
  u64 lambda = 1;
  for (const auto& [p, e] : f) {
    u64 term;
    if (p == 2) {
      term = e == 1 ? 1 : e == 2 ? 2 : u64{1} << (e - 2);
    } else {
      term = p - 1;
      for (unsigned k = 1; k < e; ++k) term *= p;
    }
    lambda = lcm(lambda, term);
  }
  return lambda;
}

u64 carmichael_lambda(u64 n) { return carmichael_lambda(factorize(n)); }

u64 multiplicative_order(u64 d, u64 m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(d, m) != 1) {
    throw DomainError("multiplicative order needs gcd(" + std::to_string(d) + ", " +
                      std::to_string(m) + ") = 1");
  }
  u64 order = carmichael_lambda(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned k = 0; k < e && mod_pow(d, order / p, m) == 1; ++k) order /= p;
  }
  return order;
}

}  // namespace addcollatz
