#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "addcollatz/numth.hpp"

namespace addcollatz {

inline constexpr u64 kDefaultCap = 10'000'000;

/// Parameters of the additive map T(x) = x / d if d | x, else x + a.
class Params {
 public:
  Params(u64 a, u64 d);

  u64 a() const { return a_; }
  u64 d() const { return d_; }
  /// gcd(a, d).
  u64 delta() const { return delta_; }
  bool coprime() const { return delta_ == 1; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  u64 a_;
  u64 d_;
  u64 delta_;
};

/// The trajectory enters `cycle` after `preperiod` steps. Cycle is canonical.
struct Loops {
  u64 preperiod = 0;
  std::vector<u64> cycle;
  friend bool operator==(const Loops&, const Loops&) = default;
};

/// After `steps` steps the trajectory reaches `witness`, which is not a
/// multiple of gcd(a, d) > 1; from there only the addition branch fires.
struct Diverges {
  u64 steps = 0;
  u64 witness = 0;
  friend bool operator==(const Diverges&, const Diverges&) = default;
};

using TrajectoryClass = std::variant<Loops, Diverges>;

/// One division output n_i of a trajectory. `step_index` is z_i, the
/// position of n_i in the full trajectory. `additions` is y_i, the number
/// of addition steps taken from n_i before the next division; it is absent
/// on the final record.
struct SubRecord {
  u64 division_index = 0;
  u64 step_index = 0;
  u64 value = 0;
  std::optional<u64> additions;
  friend bool operator==(const SubRecord&, const SubRecord&) = default;
};

struct SubTrajectory {
  Params params;
  std::vector<SubRecord> records;
  friend bool operator==(const SubTrajectory&, const SubTrajectory&) = default;
};

struct Descent {
  u64 division_index = 0;
  u64 value = 0;
  friend bool operator==(const Descent&, const Descent&) = default;
};

u64 step(const Params& p, u64 x);

/// (x, T(x), ..., T^count(x)).
std::vector<u64> iterate(const Params& p, u64 x, std::size_t count);

/// Decides looping or certified divergence. Throws CapExceededError after
/// `cap` steps without a verdict.
TrajectoryClass classify(const Params& p, u64 x, u64 cap = kDefaultCap);

/// First count+1 division outputs. Needs gcd(a, d) = 1 and d >= 2.
SubTrajectory sub_trajectory(const Params& p, u64 x, std::size_t count);

/// Least division index i with n_i <= a. Needs gcd(a, d) = 1 and d >= 2.
Descent first_descent(const Params& p, u64 x);

/// ceil(log_d(max(x - a, 1))) + 1, the guaranteed upper bound on
/// first_descent(p, x).division_index.
u64 descent_bound(const Params& p, u64 x);

/// Rotates so the minimum element comes first.
std::vector<u64> canonical_cycle(std::vector<u64> cycle);

/// Reads the cap override from ADDCOLLATZ_CAP, falling back to kDefaultCap.
u64 default_cap_from_env();

}  // namespace addcollatz
