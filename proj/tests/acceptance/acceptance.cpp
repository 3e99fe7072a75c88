// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "addcollatz/claims.hpp"
#include "addcollatz/counting.hpp"
#include "addcollatz/errors.hpp"
#include "addcollatz/generalized.hpp"
#include "addcollatz/orbits.hpp"
#include "addcollatz/serialize.hpp"
#include "addcollatz/trajectory.hpp"
#include "cli_support.hpp"

using namespace addcollatz;
using boost::multiprecision::cpp_int;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  u64 checked = 0;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string s(u64 v) { return std::to_string(v); }

Outcome orbit_count_triple() {
  Outcome o;
  for (u64 a = 1; a <= 60; ++a) {
    for (u64 d = 1; d <= 60; ++d) {
      if (std::gcd(a, d) != 1) continue;
      ++o.checked;
      const u64 xi = xi_formula(a, d).total;
      const u64 burnside = burnside_count(a, d);
      const u64 orbits = permutation_cycles(a, d).orbits.size();
      if (xi != burnside || xi != orbits) {
        o.fail("a=" + s(a) + " d=" + s(d) + ": " + s(xi) + "/" + s(burnside) + "/" + s(orbits));
      }
    }
  }
  return o;
}

Outcome loop_count_bridge() {
  Outcome o;
  for (u64 a = 1; a <= 40; ++a) {
    for (u64 d = 2; d <= 20; ++d) {
      if (std::gcd(a, d) != 1) continue;
      ++o.checked;
      const Params p(a, d);
      std::set<std::vector<u64>> cycles;
      for (u64 x = 1; x <= a; ++x) {
        const auto verdict = classify(p, x);
        if (!std::holds_alternative<Loops>(verdict)) {
          o.fail("a=" + s(a) + " d=" + s(d) + " x=" + s(x) + " did not loop");
          continue;
        }
        cycles.insert(std::get<Loops>(verdict).cycle);
      }
      const u64 xi = xi_formula(a, d).total;
      if (cycles.size() != xi) {
        o.fail("a=" + s(a) + " d=" + s(d) + ": " + s(cycles.size()) + " cycles, xi " + s(xi));
      }
    }
  }
  return o;
}

Outcome divergence_law() {
  Outcome o;
  for (u64 a = 1; a <= 20; ++a) {
    for (u64 d = 1; d <= 20; ++d) {
      const u64 g = std::gcd(a, d);
      if (g == 1) continue;
      const Params p(a, d);
      for (u64 x = 1; x <= 100; ++x) {
        if (x % g == 0) continue;
        ++o.checked;
        const auto path = iterate(p, x, 1000);
        for (u64 k = 0; k < path.size(); ++k) {
          if (path[k] != x + a * k) {
            o.fail("a=" + s(a) + " d=" + s(d) + " x=" + s(x) + " k=" + s(k));
            break;
          }
        }
      }
    }
  }
  return o;
}

// ceil(log_d(max(x - a, 1))) + 1 by repeated multiplication.
u64 reference_descent_bound(u64 a, u64 d, u64 x) {
  const u64 target = x > a + 1 ? x - a : 1;
  u64 e = 0;
  cpp_int pw = 1;
  while (pw < target) {
    pw *= d;
    ++e;
  }
  return e + 1;
}

Outcome descent_and_closure() {
  Outcome o;
  for (u64 a = 1; a <= 20; ++a) {
    for (u64 d = 2; d <= 12; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const Params p(a, d);
      for (u64 x = 1; x <= 10'000; ++x) {
        ++o.checked;
        const std::string at = "a=" + s(a) + " d=" + s(d) + " x=" + s(x);
        const Descent desc = first_descent(p, x);
        const u64 bound = reference_descent_bound(a, d, x);
        if (descent_bound(p, x) != bound) o.fail(at + ": descent_bound " + s(descent_bound(p, x)));
        if (desc.division_index > bound) o.fail(at + ": first descent " + s(desc.division_index));

        const auto sub = sub_trajectory(p, x, desc.division_index + 2 * a + 2);
        const cpp_int excess = cpp_int(x) - a;
        cpp_int d_pow = 1;
        for (std::size_t k = 0; k < sub.records.size(); ++k) {
          const u64 n = sub.records[k].value;
          if (k > 0) {
            d_pow *= d;
            // n_k <= (n_0 - a) / d^k + a, multiplied through by d^k.
            if ((cpp_int(n) - a) * d_pow > excess) o.fail(at + ": envelope at k=" + s(k));
          }
          if (k < desc.division_index && n <= a) o.fail(at + ": early descent at " + s(k));
          if (k >= desc.division_index && n > a) o.fail(at + ": n_" + s(k) + " = " + s(n) + " > a");
        }
      }
    }
  }
  return o;
}

bool lists(const ClaimReport& r, const GridPoint& pt) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& c) { return c.point == pt; });
}

Outcome claims_fixture() {
  Outcome o;
  const std::set<std::string> expect_fail{"L1", "P4", "G-M1"};
  const std::set<std::string> expect_pass{"P1", "P2", "P3", "XI", "LB", "UB", "PQ", "G-EQ4",
                                          "G-SUB", "G-M1-COPRIME"};
  const auto started = std::chrono::steady_clock::now();
  const auto reports = run_all({});
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  if (reports.size() != expect_fail.size() + expect_pass.size()) {
    o.fail(s(reports.size()) + " reports");
  }
  for (const auto& r : reports) {
    ++o.checked;
    const bool want_fail = expect_fail.count(r.claim_id) > 0;
    if (!want_fail && expect_pass.count(r.claim_id) == 0) o.fail("unexpected claim " + r.claim_id);
    if ((r.verdict == Verdict::Counterexamples) != want_fail) {
      o.fail(r.claim_id + " verdict " + std::string(to_string(r.verdict)));
    }
  }
  if (elapsed.count() >= 60.0) o.fail("default run took " + std::to_string(elapsed.count()) + " s");

  // Membership is read from the complete counterexample lists; the default
  // limit keeps only the first few in grid order.
  ClaimRanges all;
  all.counterexample_limit = kUnlimited;
  const GridPoint p4{{{"a", 4}, {"d", 2}, {"r", 2}}};
  const GridPoint l1{{{"a", 6}, {"d", 4}, {"r", 8}, {"k", 1}}};
  if (!lists(run_claim("P4", all), p4) || !check_point("P4", p4, {})) o.fail("P4 lacks (4,2,2)");
  if (!lists(run_claim("L1", all), l1) || !check_point("L1", l1, {})) o.fail("L1 lacks (6,4,8,1)");
  if (o.ok) o.detail = "default run " + std::to_string(elapsed.count()).substr(0, 4) + " s";
  return o;
}

Outcome bounds() {
  Outcome o;
  for (u64 a = 1; a <= 100; ++a) {
    ++o.checked;
    const u64 lower = xi_lower_bound(a);
    for (u64 d = 1; d <= a; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const u64 xi = xi_formula(a, d).total;
      if (xi < lower || xi > a) o.fail("a=" + s(a) + " d=" + s(d) + " xi=" + s(xi));
    }
    if (xi_formula(a, 1).total != a) o.fail("a=" + s(a) + ": xi(a,1) != a");
    const auto w = strong_bound_witness(a);
    if (!w) {
      o.fail("a=" + s(a) + ": no witness");
    } else if (xi_formula(a, *w).total != lower) {
      o.fail("a=" + s(a) + ": witness " + s(*w) + " misses the bound");
    }
  }
  return o;
}

Outcome two_prime() {
  Outcome o;
  std::vector<u64> primes;
  for (u64 n = 2; n <= 31; ++n) {
    bool prime = true;
    for (u64 k = 2; k * k <= n; ++k) prime = prime && n % k != 0;
    if (prime) primes.push_back(n);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const u64 p = primes[i], q = primes[j];
      for (u64 d = 1; d <= 50; ++d) {
        if (std::gcd(d, p * q) != 1) continue;
        ++o.checked;
        if (xi_pq(p, q, d) != xi_formula(p * q, d).total) {
          o.fail("p=" + s(p) + " q=" + s(q) + " d=" + s(d));
        }
      }
    }
  }
  return o;
}

Outcome carmichael() {
  Outcome o;
  for (u64 m = 1; m <= 200; ++m) {
    ++o.checked;
    u64 best = 1;
    for (u64 u = 1; u < std::max<u64>(m, 2); ++u) {
      if (std::gcd(u, m) != 1) continue;
      u64 t = 1;
      for (u64 v = u % m; v != 1 % m; v = v * u % m) ++t;
      best = std::max(best, t);
    }
    if (carmichael_lambda(m) != best) o.fail("m=" + s(m));
  }
  return o;
}

Outcome generalized() {
  Outcome o;
  u64 truncated = 0;
  for (u64 a = 1; a <= 10; ++a) {
    for (u64 d = 2; d <= 12; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const u64 a_inv = mod_inverse(a % d, d);
      for (u64 m = 1; m <= 10; ++m) {
        if (m % d != 1) continue;
        const GenParams gp(a, d, m);
        for (u64 x = 1; x <= 50; ++x) {
          ++o.checked;
          const std::string at = "a=" + s(a) + " d=" + s(d) + " m=" + s(m) + " x=" + s(x);
          if (!divisibility_reachable(gp, x)) o.fail(at + ": unreachable");

          cpp_int v = x;
          for (u64 r = 0; r <= 30; ++r) {
            v = m * v + a;
            if (eq4_value(gp, x, r) != static_cast<u64>(v % d)) o.fail(at + ": eq4 r=" + s(r));
          }

          // Ten divisions, or as many as fit below 2^63.
          std::vector<GenSubRecord> recs;
          for (u64 count = 10; count > 0 && recs.empty(); --count) {
            try {
              recs = gen_sub_trajectory(gp, x, count);
            } catch (const OverflowError&) {
            }
          }
          if (recs.size() < 11) ++truncated;
          for (std::size_t i = 1; i < recs.size(); ++i) {
            const u64 n = recs[i - 1].value, r = *recs[i].run_length;
            cpp_int rhs = n, pw = 1, geo = 0;
            if (r > 0) {
              for (u64 j = 0; j < r; ++j, pw *= m) geo += pw;
              rhs = pw * n + a * geo;
            }
            if (cpp_int(d) * recs[i].value != rhs) o.fail(at + ": recurrence at " + s(i));
            if (n % d != 0) {
              const u64 want = (d - a_inv * (n % d) % d) % d;
              if (r == 0 || r >= d || r % d != want) o.fail(at + ": congruence at " + s(i));
            }
          }
        }
      }
    }
  }
  if (o.ok && truncated > 0) o.detail = s(truncated) + " starts stop early at the 2^63 limit";
  return o;
}

Outcome cli_contract() {
  using namespace addcollatz::testing;
  Outcome o;
  for (const auto& g : golden_cases()) {
    ++o.checked;
    const auto r = run_cli(g.args);
    if (r.code != 0 || stable_envelope(r.out) != load_golden(g.file)) o.fail(g.file);
  }
  const auto count = stable_envelope(run_cli({"count", "8", "3", "--method", "all"}).out);
  for (const char* key : {"formula", "burnside", "brute"}) {
    if (count["result"][key] != 5) o.fail(std::string("count ") + key);
  }
  const auto b = stable_envelope(run_cli({"bounds", "8"}).out)["result"];
  if (b["lower"] != 5 || b["witness"] != 3) o.fail("bounds 8");
  const auto c = stable_envelope(run_cli({"classify", "4", "2", "2"}).out)["result"];
  if (c["kind"] != "diverges" || c["witness"] != 1) o.fail("classify 4 2 2");
  if (c.get<TrajectoryClass>() != TrajectoryClass{Diverges{1, 1}}) o.fail("classify decode");

  for (const auto& args : envelope_commands()) {
    ++o.checked;
    const auto r = run_cli(args);
    try {
      const json j = json::parse(r.out);
      if (r.code != 0 || json::parse(j.dump()) != j || j["schema_version"] != "1") {
        o.fail(args.front() + " envelope");
      }
    } catch (const json::exception&) {
      o.fail(args.front() + " does not parse");
    }
  }
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"orbit count: formula = Burnside = orbit walk, a, d <= 60", orbit_count_triple},
      {"distinct loops over x in [1, a] = xi, a <= 40, 2 <= d <= 20", loop_count_bridge},
      {"off-lattice iterates equal x + a k for 1000 steps, a, d <= 20, x <= 100", divergence_law},
      {"descent envelope, descent bound and closure, a <= 20, d <= 12, x <= 10^4",
       descent_and_closure},
      {"default claims run verdicts and pinned counterexamples", claims_fixture},
      {"lower bound <= xi <= a, xi(a, 1) = a, witness exists, a <= 100", bounds},
      {"two-prime closed form, p < q <= 31, d <= 50", two_prime},
      {"Carmichael lambda = max order, m <= 200", carmichael},
      {"generalized map with m = 1 mod d: reachability, recurrence, congruence, residues",
       generalized},
      {"CLI golden envelopes and JSON round trips", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].name << " ("
              << o.checked << " cases, " << std::to_string(elapsed.count()).substr(0, 5) << " s";
    if (!o.detail.empty()) std::cout << "; " << o.detail;
    std::cout << ")\n";
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
