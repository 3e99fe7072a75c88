#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addcollatz/numth.hpp"
#include "addcollatz/trajectory.hpp"

namespace addcollatz {

inline constexpr u64 kDefaultGenCap = 100'000;

/// Parameters of C(x) = x / d if d | x, else m*x + a.
class GenParams {
 public:
  GenParams(u64 a, u64 d, u64 m);

  u64 a() const { return a_; }
  u64 d() const { return d_; }
  u64 m() const { return m_; }

  friend bool operator==(const GenParams&, const GenParams&) = default;

 private:
  u64 a_;
  u64 d_;
  u64 m_;
};

/// From the start, no iterate is ever divisible by d: the residue walk
/// u -> m*u + a (mod d) from `witness_residue` never reaches 0.
struct NoDivisibilityDivergence {
  u64 witness_residue = 0;
  u64 steps = 0;
  friend bool operator==(const NoDivisibilityDivergence&,
                         const NoDivisibilityDivergence&) = default;
};

/// Cap exhausted, or the value left the 63-bit range.
struct Unknown {
  u64 steps_executed = 0;
  u64 last_value = 0;
  bool overflowed = false;
  friend bool operator==(const Unknown&, const Unknown&) = default;
};

using GenClass = std::variant<Loops, NoDivisibilityDivergence, Unknown>;

/// One division output of the generalized map. `run_length` is the number
/// of non-division steps taken before the division that produced `value`;
/// absent on the starting record.
struct GenSubRecord {
  u64 value = 0;
  std::optional<u64> run_length;
  friend bool operator==(const GenSubRecord&, const GenSubRecord&) = default;
};

u64 gen_step(const GenParams& gp, u64 x);

/// m^(r+1) x + a (m^r + ... + 1) mod d, via modular powers and a
/// logarithmic-time geometric sum.
u64 eq4_value(const GenParams& gp, u64 x, u64 r);

/// Least r >= 0 with eq4_value(gp, x, r) = 0, or nullopt. Walks at most d
/// residues.
std::optional<u64> divisibility_reachable(const GenParams& gp, u64 x);

GenClass gen_classify(const GenParams& gp, u64 x, u64 cap = kDefaultGenCap);

/// The division that follows n: (next division output, run length).
/// Throws DomainError naming n when divisibility is unreachable from it.
GenSubRecord gen_sub_step(const GenParams& gp, u64 n);

std::vector<GenSubRecord> gen_sub_trajectory(const GenParams& gp, u64 x, std::size_t count);

}  // namespace addcollatz
