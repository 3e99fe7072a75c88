#pragma once

#include <optional>
#include <vector>

#include "addcollatz/numth.hpp"

namespace addcollatz {

/// One divisor's contribution phi(f) / alpha_f(d) to the loop count.
struct XiTerm {
  u64 divisor = 0;
  u64 phi = 0;
  u64 order = 0;
  u64 term = 0;
  friend bool operator==(const XiTerm&, const XiTerm&) = default;
};

/// Number of loops of the additive map for coprime (a, d), broken down by
/// divisor of a.
struct XiBreakdown {
  u64 a = 0;
  u64 d = 0;
  std::vector<XiTerm> terms;
  u64 total = 0;
  friend bool operator==(const XiBreakdown&, const XiBreakdown&) = default;
};

XiBreakdown xi_formula(u64 a, u64 d);

/// Sum over f | a of phi(f) / lambda(f); no d can give fewer loops.
u64 xi_lower_bound(u64 a);

/// Closed form of xi(p*q, d) for distinct primes p, q.
u64 xi_pq(u64 p, u64 q, u64 d);

/// Smallest d in [1, max(a, 2)) coprime to a attaining xi_lower_bound(a),
/// or nullopt if none does.
std::optional<u64> strong_bound_witness(u64 a);

}  // namespace addcollatz
