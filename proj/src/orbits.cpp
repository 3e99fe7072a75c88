#include "addcollatz/orbits.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "addcollatz/errors.hpp"

namespace addcollatz {

namespace {

void require_unit(u64 a, u64 d) {
  if (a == 0 || d == 0) throw DomainError("a and d must both be >= 1");
  if (gcd(a, d) != 1) {
    throw DomainError("group action needs gcd(a, d) = 1, got a=" + std::to_string(a) +
                      " d=" + std::to_string(d));
  }
}

}  // namespace

OrbitPartition permutation_cycles(u64 a, u64 d) {
  require_unit(a, d);
  OrbitPartition out{a, d, {}};
  std::vector<bool> seen(a, false);
  for (u64 start = 0; start < a; ++start) {
    if (seen[start]) continue;
    std::vector<u64> orbit;
    for (u64 x = start; !seen[x]; x = mul_mod(x, d, a)) {
      seen[x] = true;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

u64 stabilizer_size(u64 a, u64 d, u64 x, StabilizerMode mode) {
  require_unit(a, d);
  if (x >= a) throw DomainError("residue must lie in [0, a)");
  const u64 group_order = multiplicative_order(d, a);
  if (mode == StabilizerMode::BruteForce) {
    u64 fixing = 0;
    u64 power = 1 % a;
    for (u64 t = 0; t < group_order; ++t) {
      if (mul_mod(power, x, a) == x) ++fixing;
      power = mul_mod(power, d, a);
    }
    return fixing;
  }
  const u64 p_x = a / gcd(x, a);
  return group_order / multiplicative_order(d, p_x);
}

u64 burnside_count(u64 a, u64 d) {
  require_unit(a, d);
  const u64 group_order = multiplicative_order(d, a);
  u64 total = 0;
  for (u64 x = 0; x < a; ++x) total += stabilizer_size(a, d, x);
  if (total % group_order != 0) {
    throw InvariantViolation("stabilizer sum " + std::to_string(total) +
                             " is not divisible by |H| = " + std::to_string(group_order));
  }
  return total / group_order;
}

std::vector<u64> loop_for_residue(const Params& p, u64 r) {
  if (!p.coprime() || p.d() < 2) throw DomainError("loop_for_residue needs gcd(a, d) = 1, d >= 2");
  if (r >= p.a()) throw DomainError("residue must lie in [0, a)");
  const auto verdict = classify(p, r == 0 ? p.a() : r);
  const auto* loop = std::get_if<Loops>(&verdict);
  if (loop == nullptr) throw InvariantViolation("coprime trajectory did not loop");
  return loop->cycle;
}

std::vector<std::vector<u64>> loop_inventory(const Params& p) {
  std::set<std::vector<u64>> cycles;
  for (u64 x = 1; x <= p.a(); ++x) cycles.insert(loop_for_residue(p, x % p.a()));
  return {cycles.begin(), cycles.end()};
}

}  // namespace addcollatz
