#pragma once

#include <vector>

#include "addcollatz/numth.hpp"
#include "addcollatz/trajectory.hpp"

namespace addcollatz {

/// Orbits of the cyclic group generated by d acting on Z/aZ by
/// multiplication. Each orbit is ascending; orbits are ordered by their
/// smallest residue, so the first orbit is always {0}.
struct OrbitPartition {
  u64 modulus = 0;
  u64 multiplier = 0;
  std::vector<std::vector<u64>> orbits;
  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

OrbitPartition permutation_cycles(u64 a, u64 d);

enum class StabilizerMode { Formula, BruteForce };

/// Number of powers of d fixing x modulo a.
u64 stabilizer_size(u64 a, u64 d, u64 x, StabilizerMode mode = StabilizerMode::Formula);

/// Average stabilizer size over Z/aZ. Throws InvariantViolation if the
/// average is not an integer.
u64 burnside_count(u64 a, u64 d);

/// Canonical trajectory cycle reached from residue r (r = 0 is represented
/// by the trajectory value a).
std::vector<u64> loop_for_residue(const Params& p, u64 r);

/// Distinct canonical cycles over starting points 1..a.
std::vector<std::vector<u64>> loop_inventory(const Params& p);

}  // namespace addcollatz
