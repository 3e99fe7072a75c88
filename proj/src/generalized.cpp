#include "addcollatz/generalized.hpp"

#include <string>
#include <unordered_map>

#include "addcollatz/errors.hpp"

namespace addcollatz {

namespace {

void require_start(u64 x) {
  if (x == 0) throw DomainError("starting value must be >= 1");
  if (x > kMaxValue) throw DomainError("starting value exceeds 2^63-1");
}

}  // namespace

GenParams::GenParams(u64 a, u64 d, u64 m) : a_(a), d_(d), m_(m) {
  if (a == 0 || m == 0) throw DomainError("a and m must be >= 1");
  if (d < 2) throw DomainError("d must be >= 2 for the generalized map");
  if (a > kMaxValue || d > kMaxValue || m > kMaxValue) {
    throw DomainError("parameters must not exceed 2^63-1");
  }
}

u64 gen_step(const GenParams& gp, u64 x) {
  require_start(x);
  if (x % gp.d() == 0) return x / gp.d();
  return checked_add(checked_mul(gp.m(), x), gp.a());
}

u64 eq4_value(const GenParams& gp, u64 x, u64 r) {
  const u64 d = gp.d();
  const u64 lead = mul_mod(mod_pow(gp.m(), r + 1, d), x % d, d);
  const u64 tail = mul_mod(gp.a() % d, geometric_sum_mod(gp.m(), r + 1, d), d);
  return (lead + tail) % d;
}

std::optional<u64> divisibility_reachable(const GenParams& gp, u64 x) {
  const u64 d = gp.d();
  const u64 m = gp.m() % d;
  const u64 a = gp.a() % d;
  u64 u = x % d;
  for (u64 r = 0; r < d; ++r) {
    u = (mul_mod(m, u, d) + a) % d;
    if (u == 0) return r;
  }
  return std::nullopt;
}

GenClass gen_classify(const GenParams& gp, u64 x, u64 cap) {
  require_start(x);
  std::unordered_map<u64, u64> first_seen;
  std::vector<u64> path;
  u64 v = x;
  for (u64 i = 0;; ++i) {
    if (auto it = first_seen.find(v); it != first_seen.end()) {
      std::vector<u64> cycle(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
      return Loops{it->second, canonical_cycle(std::move(cycle))};
    }
    if (v % gp.d() != 0 && !divisibility_reachable(gp, v)) {
      return NoDivisibilityDivergence{v % gp.d(), i};
    }
    if (i == cap) return Unknown{i, v, false};
    first_seen.emplace(v, i);
    path.push_back(v);
    try {
      v = gen_step(gp, v);
    } catch (const OverflowError&) {
      return Unknown{i, v, true};
    }
  }
}

GenSubRecord gen_sub_step(const GenParams& gp, u64 n) {
  require_start(n);
  if (n % gp.d() == 0) return {n / gp.d(), 0};
  if (!divisibility_reachable(gp, n)) {
    throw DomainError("no iterate of " + std::to_string(n) + " is divisible by " +
                      std::to_string(gp.d()));
  }
  u64 run = 0;
  while (n % gp.d() != 0) {
    n = checked_add(checked_mul(gp.m(), n), gp.a());
    ++run;
  }
  return {n / gp.d(), run};
}

std::vector<GenSubRecord> gen_sub_trajectory(const GenParams& gp, u64 x, std::size_t count) {
  require_start(x);
  if (gcd(gp.a(), gp.d()) != 1) throw DomainError("generalized division outputs need gcd(a, d) = 1");
  std::vector<GenSubRecord> out{{x, std::nullopt}};
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen_sub_step(gp, out.back().value));
  return out;
}

}  // namespace addcollatz
