#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addcollatz/numth.hpp"

namespace addcollatz {

/// Finite parameter grid shared by every claim. Each claim reads only the
/// axes it needs; all bounds are inclusive.
struct ClaimRanges {
  u64 a_lo = 1, a_hi = 12;
  u64 d_lo = 1, d_hi = 12;
  u64 x_lo = 1, x_hi = 50;
  u64 m_lo = 1, m_hi = 10;
  u64 prime_max = 31;
  u64 scaling_steps = 20;      // k range of the scaling identity
  u64 divergence_steps = 500;  // iterates checked against x + a*k
  u64 eq4_r_max = 30;
  u64 gen_sub_count = 10;
  std::size_t counterexample_limit = 10;

  /// Every axis empty.
  static ClaimRanges empty();

  friend bool operator==(const ClaimRanges&, const ClaimRanges&) = default;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Named coordinates of one grid point, e.g. {a=4, d=2, r=2}.
struct GridPoint {
  std::vector<std::pair<std::string, u64>> coords;

  /// Throws DomainError when the coordinate is missing.
  u64 at(std::string_view name) const;
  std::string to_string() const;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct Counterexample {
  GridPoint point;
  std::string observed;
  std::string claimed;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Verdict { Pass, Counterexamples };

struct ClaimReport {
  std::string claim_id;
  std::string statement;
  std::string range_description;
  u64 checked_count = 0;
  Verdict verdict = Verdict::Pass;
  /// First counterexamples in grid order, at most counterexample_limit.
  std::vector<Counterexample> counterexamples;
  u64 counterexample_total = 0;
  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
  /// Verdict on the default grid.
  Verdict expected;
};

/// Registry in reporting order.
const std::vector<ClaimInfo>& claim_registry();

/// Throws DomainError for an unregistered id.
ClaimReport run_claim(std::string_view claim_id, const ClaimRanges& ranges);

/// One report per registered claim, in registry order. `jobs` > 1 runs
/// claims on worker threads; the output does not depend on it.
std::vector<ClaimReport> run_all(const ClaimRanges& ranges, unsigned jobs = 1);

/// Re-evaluates a single grid point; returns the failure if the claim does
/// not hold there. Axis bounds in `ranges` are ignored, step depths are used.
std::optional<Counterexample> check_point(std::string_view claim_id, const GridPoint& point,
                                          const ClaimRanges& ranges);

std::string_view to_string(Verdict v);

}  // namespace addcollatz
