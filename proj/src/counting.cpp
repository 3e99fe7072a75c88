#include "addcollatz/counting.hpp"

#include <algorithm>
#include <string>

#include "addcollatz/errors.hpp"

namespace addcollatz {

namespace {

u64 exact_div(u64 num, u64 den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InvariantViolation(std::string(what) + ": " + std::to_string(num) +
                             " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

}  // namespace

XiBreakdown xi_formula(u64 a, u64 d) {
  if (a == 0 || d == 0) throw DomainError("a and d must both be >= 1");
  if (gcd(a, d) != 1) {
    throw DomainError("loop count formula needs gcd(a, d) = 1, got a=" + std::to_string(a) +
                      " d=" + std::to_string(d));
  }
  XiBreakdown out{a, d, {}, 0};
  for (u64 f : divisors(a)) {
    XiTerm t{f, euler_phi(f), multiplicative_order(d, f), 0};
    t.term = exact_div(t.phi, t.order, "phi(f) / alpha_f(d)");
    out.total += t.term;
    out.terms.push_back(t);
  }
  return out;
}

u64 xi_lower_bound(u64 a) {
  if (a == 0) throw DomainError("a must be >= 1");
  u64 total = 0;
  for (u64 f : divisors(a)) {
    const auto ff = factorize(f);
    total += exact_div(euler_phi(ff), carmichael_lambda(ff), "phi(f) / lambda(f)");
  }
  return total;
}

u64 xi_pq(u64 p, u64 q, u64 d) {
  if (p == q || !is_prime(p) || !is_prime(q)) {
    throw DomainError("p and q must be distinct primes, got " + std::to_string(p) + ", " +
                      std::to_string(q));
  }
  const u64 pq = checked_mul(p, q);
  if (d == 0 || gcd(d, pq) != 1) throw DomainError("d must be coprime to p*q");
  const u64 ap = multiplicative_order(d, p);
  const u64 aq = multiplicative_order(d, q);
  const u64 cross = exact_div(checked_mul(checked_mul(p - 1, q - 1), gcd(ap, aq)),
                              checked_mul(ap, aq), "two-prime cross term");
  return 1 + exact_div(p - 1, ap, "(p-1)/alpha_p") + exact_div(q - 1, aq, "(q-1)/alpha_q") + cross;
}

std::optional<u64> strong_bound_witness(u64 a) {
  if (a == 0) throw DomainError("a must be >= 1");
  // Each term phi(f)/alpha_f(d) is at least phi(f)/lambda(f), so the total
  // meets the lower bound exactly when alpha_f(d) = lambda(f) for every f.
  struct Divisor {
    u64 value;
    u64 lambda;
  };
  std::vector<Divisor> divs;
  for (u64 f : divisors(a)) divs.push_back({f, carmichael_lambda(f)});
  const u64 limit = std::max<u64>(a, 2);
  for (u64 d = 1; d < limit; ++d) {
    if (gcd(d, a) != 1) continue;
    const bool attains = std::all_of(divs.begin(), divs.end(), [&](const Divisor& f) {
      return multiplicative_order(d, f.value) == f.lambda;
    });
    if (attains) return d;
  }
  return std::nullopt;
}

}  // namespace addcollatz
