#include "addcollatz/trajectory.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "addcollatz/errors.hpp"

namespace addcollatz {

namespace {

void require_start(u64 x) {
  if (x == 0) throw DomainError("starting value must be >= 1");
  if (x > kMaxValue) throw DomainError("starting value exceeds 2^63-1");
}

void require_descent_regime(const Params& p) {
  if (!p.coprime() || p.d() < 2) {
    throw DomainError("division outputs need gcd(a, d) = 1 and d >= 2, got a=" +
                      std::to_string(p.a()) + " d=" + std::to_string(p.d()));
  }
}

}  // namespace

Params::Params(u64 a, u64 d) : a_(a), d_(d), delta_(0) {
  if (a == 0 || d == 0) throw DomainError("a and d must both be >= 1");
  if (a > kMaxValue || d > kMaxValue) throw DomainError("a and d must not exceed 2^63-1");
  delta_ = gcd(a, d);
}

u64 step(const Params& p, u64 x) {
  require_start(x);
  return x % p.d() == 0 ? x / p.d() : checked_add(x, p.a());
}

std::vector<u64> iterate(const Params& p, u64 x, std::size_t count) {
  require_start(x);
  std::vector<u64> out;
  out.reserve(count + 1);
  out.push_back(x);
  for (std::size_t i = 0; i < count; ++i) out.push_back(step(p, out.back()));
  return out;
}

TrajectoryClass classify(const Params& p, u64 x, u64 cap) {
  require_start(x);
  std::unordered_map<u64, u64> first_seen;
  std::vector<u64> path;
  u64 v = x;
  for (u64 i = 0;; ++i) {
    if (p.delta() > 1 && v % p.delta() != 0) return Diverges{i, v};
    if (auto it = first_seen.find(v); it != first_seen.end()) {
      const u64 start = it->second;
      std::vector<u64> cycle(path.begin() + static_cast<std::ptrdiff_t>(start), path.end());
      return Loops{start, canonical_cycle(std::move(cycle))};
    }
    if (i == cap) {
      throw CapExceededError("no verdict for a=" + std::to_string(p.a()) + " d=" +
                             std::to_string(p.d()) + " x=" + std::to_string(x) + " within " +
                             std::to_string(cap) + " steps");
    }
    first_seen.emplace(v, i);
    path.push_back(v);
    v = step(p, v);
  }
}

SubTrajectory sub_trajectory(const Params& p, u64 x, std::size_t count) {
  require_descent_regime(p);
  require_start(x);
  SubTrajectory out{p, {}};
  out.records.reserve(count + 1);
  u64 n = x, z = 0;
  for (std::size_t i = 0; i <= count; ++i) {
    out.records.push_back({i, z, n, std::nullopt});
    if (i == count) break;
    u64 y = 0;
    while (n % p.d() != 0) {
      n = checked_add(n, p.a());
      ++y;
    }
    n /= p.d();
    z += y + 1;
    out.records.back().additions = y;
  }
  return out;
}

Descent first_descent(const Params& p, u64 x) {
  require_descent_regime(p);
  require_start(x);
  u64 n = x;
  for (u64 i = 0;; ++i) {
    if (n <= p.a()) return {i, n};
    while (n % p.d() != 0) n = checked_add(n, p.a());
    n /= p.d();
  }
}

u64 descent_bound(const Params& p, u64 x) {
  require_descent_regime(p);
  const u64 gap = x > p.a() ? x - p.a() : 1;
  u64 e = 0;
  unsigned __int128 power = 1;
  while (power < gap) {
    power *= p.d();
    ++e;
  }
  return e + 1;
}

std::vector<u64> canonical_cycle(std::vector<u64> cycle) {
  if (cycle.empty()) throw DomainError("a cycle has at least one element");
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

u64 default_cap_from_env() {
  const char* raw = std::getenv("ADDCOLLATZ_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > kMaxValue) {
    throw DomainError(std::string("ADDCOLLATZ_CAP must be a positive integer, got '") + raw + "'");
  }
  return v;
}

}  // namespace addcollatz
