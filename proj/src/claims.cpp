#include "addcollatz/claims.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "addcollatz/counting.hpp"
#include "addcollatz/errors.hpp"
#include "addcollatz/generalized.hpp"
#include "addcollatz/orbits.hpp"
#include "addcollatz/trajectory.hpp"

namespace addcollatz {

namespace {

using boost::multiprecision::cpp_int;

struct Failure {
  std::string observed;
  std::string claimed;
};

using Outcome = std::optional<Failure>;
using Visit = std::function<void(GridPoint)>;

struct Claim {
  ClaimInfo info;
  std::function<std::string(const ClaimRanges&)> describe;
  std::function<void(const ClaimRanges&, const Visit&)> enumerate;
  std::function<Outcome(const GridPoint&, const ClaimRanges&)> evaluate;
};

std::string str(u64 v) { return std::to_string(v); }

std::string span(const char* name, u64 lo, u64 hi) {
  return std::string(name) + " in [" + str(lo) + ", " + str(hi) + "]";
}

cpp_int big_pow(u64 base, u64 exp) {
  return boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exp));
}

bool is_m_one(u64 m, u64 d) { return m % d == 1 % d; }

// (a, d, x) grids, optionally filtered.
void for_adx(const ClaimRanges& r, u64 d_floor, const std::function<bool(u64, u64, u64)>& keep,
             const Visit& visit, const char* x_name = "x") {
  for (u64 a = r.a_lo; a <= r.a_hi; ++a) {
    for (u64 d = std::max(r.d_lo, d_floor); d <= r.d_hi; ++d) {
      for (u64 x = r.x_lo; x <= r.x_hi; ++x) {
        if (keep(a, d, x)) visit({{{"a", a}, {"d", d}, {x_name, x}}});
      }
    }
  }
}

void for_admx(const ClaimRanges& r, const std::function<bool(u64, u64, u64)>& keep,
              const Visit& visit) {
  for (u64 a = r.a_lo; a <= r.a_hi; ++a) {
    for (u64 d = std::max<u64>(r.d_lo, 2); d <= r.d_hi; ++d) {
      for (u64 m = std::max<u64>(r.m_lo, 1); m <= r.m_hi; ++m) {
        if (!keep(a, d, m)) continue;
        for (u64 x = r.x_lo; x <= r.x_hi; ++x) {
          visit({{{"a", a}, {"d", d}, {"m", m}, {"x", x}}});
        }
      }
    }
  }
}

void for_coprime_ad(const ClaimRanges& r, const Visit& visit) {
  for (u64 a = r.a_lo; a <= r.a_hi; ++a) {
    for (u64 d = r.d_lo; d <= r.d_hi; ++d) {
      if (std::gcd(a, d) == 1) visit({{{"a", a}, {"d", d}}});
    }
  }
}

std::string describe_adx(const ClaimRanges& r, const std::string& extra) {
  return span("a", r.a_lo, r.a_hi) + ", " + span("d", r.d_lo, r.d_hi) + ", " +
         span("x", r.x_lo, r.x_hi) + extra;
}

std::string describe_admx(const ClaimRanges& r, const std::string& extra) {
  return span("a", r.a_lo, r.a_hi) + ", " + span("d", std::max<u64>(r.d_lo, 2), r.d_hi) + ", " +
         span("m", r.m_lo, r.m_hi) + ", " + span("x", r.x_lo, r.x_hi) + extra;
}

std::string describe_class(const TrajectoryClass& c) {
  if (const auto* loop = std::get_if<Loops>(&c)) {
    return "loops after " + str(loop->preperiod) + " steps, cycle length " + str(loop->cycle.size());
  }
  const auto& div = std::get<Diverges>(c);
  return "diverges: step " + str(div.steps) + " reaches " + str(div.witness);
}

// ---- scaling identity -----------------------------------------------------

Outcome eval_scaling(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a"), d = pt.at("d"), r = pt.at("r"), k = pt.at("k");
  const Params full(a, d);
  const u64 delta = full.delta();
  if (r % delta != 0) return Failure{"r not a multiple of gcd(a, d)", "hypothesis"};
  const Params reduced(a / delta, d / delta);
  const u64 lhs = iterate(full, r, k).back();
  const u64 rhs = checked_mul(delta, iterate(reduced, r / delta, k).back());
  if (lhs == rhs) return std::nullopt;
  return Failure{"T^k(r) = " + str(lhs), "gcd * T'^k(r / gcd) = " + str(rhs)};
}

// ---- residues off the gcd lattice drift upward ---------------------------

Outcome eval_drift(const GridPoint& pt, const ClaimRanges& r) {
  const u64 a = pt.at("a"), d = pt.at("d"), x = pt.at("x");
  const Params p(a, d);
  const auto path = iterate(p, x, r.divergence_steps);
  for (u64 k = 0; k < path.size(); ++k) {
    const u64 expect = checked_add(x, checked_mul(a, k));
    if (path[k] != expect) {
      return Failure{"T^" + str(k) + "(x) = " + str(path[k]), "x + a*k = " + str(expect)};
    }
  }
  return std::nullopt;
}

// ---- descent below a ------------------------------------------------------

Outcome eval_descent(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a"), d = pt.at("d"), x = pt.at("x");
  const Params p(a, d);
  const Descent desc = first_descent(p, x);
  const u64 bound = descent_bound(p, x);
  if (desc.division_index > bound) {
    return Failure{"first descent at division " + str(desc.division_index),
                   "at most " + str(bound)};
  }
  const auto sub = sub_trajectory(p, x, desc.division_index + 8);
  const cpp_int n0 = x;
  cpp_int weighted = 0;  // sum of y_i d^i
  cpp_int d_pow = 1;     // d^i
  for (std::size_t k = 0; k + 1 < sub.records.size(); ++k) {
    weighted += cpp_int(*sub.records[k].additions) * d_pow;
    d_pow *= d;
    const cpp_int next = sub.records[k + 1].value;
    // n_{k+1} <= (n_0 - a) / d^{k+1} + a, cleared of the denominator.
    if ((next - a) * d_pow > n0 - a) {
      return Failure{"n_" + str(k + 1) + " = " + str(sub.records[k + 1].value),
                     "<= (n0 - a) / d^" + str(k + 1) + " + a"};
    }
    if (d_pow * next != n0 + a * weighted) {
      return Failure{"d^(k+1) n_(k+1) = " + cpp_int(d_pow * next).str() + " at k=" + str(k),
                     "n0 + a*sum(y_i d^i) = " + cpp_int(n0 + a * weighted).str()};
    }
  }
  return std::nullopt;
}

// ---- closure below a ------------------------------------------------------

Outcome eval_closure(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a"), d = pt.at("d"), x = pt.at("x");
  const Params p(a, d);
  const auto sub = sub_trajectory(p, x, a + 1);
  for (const auto& rec : sub.records) {
    if (rec.value > a) {
      return Failure{"n_" + str(rec.division_index) + " = " + str(rec.value), "<= a"};
    }
  }
  const auto verdict = classify(p, x);
  if (!std::holds_alternative<Loops>(verdict)) return Failure{describe_class(verdict), "loops"};
  return std::nullopt;
}

// ---- lattice multiples loop ----------------------------------------------

Outcome eval_lattice_loops(const GridPoint& pt, const ClaimRanges&) {
  const Params p(pt.at("a"), pt.at("d"));
  const auto verdict = classify(p, pt.at("r"));
  if (std::holds_alternative<Loops>(verdict)) return std::nullopt;
  return Failure{describe_class(verdict), "loops"};
}

// ---- loop count -----------------------------------------------------------

Outcome eval_loop_count(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a"), d = pt.at("d");
  const u64 formula = xi_formula(a, d).total;
  const u64 burnside = burnside_count(a, d);
  const u64 orbits = permutation_cycles(a, d).orbits.size();
  std::string observed = "formula " + str(formula) + ", burnside " + str(burnside) +
                         ", orbits " + str(orbits);
  bool agree = formula == burnside && burnside == orbits;
  if (d >= 2) {
    const u64 loops = loop_inventory(Params(a, d)).size();
    observed += ", loops " + str(loops);
    agree = agree && loops == formula;
  }
  if (agree) return std::nullopt;
  return Failure{observed, "all equal"};
}

// ---- lower bound ----------------------------------------------------------

Outcome eval_lower_bound(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a");
  const u64 lower = xi_lower_bound(a);
  for (u64 d = 1; d <= a; ++d) {
    if (std::gcd(a, d) != 1) continue;
    const u64 xi = xi_formula(a, d).total;
    if (xi < lower) return Failure{"xi(a, " + str(d) + ") = " + str(xi), ">= " + str(lower)};
  }
  const auto witness = strong_bound_witness(a);
  if (!witness) return Failure{"no d attains the lower bound", "some d attains " + str(lower)};
  const u64 attained = xi_formula(a, *witness).total;
  if (attained != lower) {
    return Failure{"witness d=" + str(*witness) + " gives " + str(attained), str(lower)};
  }
  return std::nullopt;
}

// ---- upper bound ----------------------------------------------------------

Outcome eval_upper_bound(const GridPoint& pt, const ClaimRanges&) {
  const u64 a = pt.at("a"), d = pt.at("d");
  const u64 xi = xi_formula(a, d).total;
  if (xi > a) return Failure{"xi = " + str(xi), "<= a = " + str(a)};
  if (d == 1 && xi != a) return Failure{"xi(a, 1) = " + str(xi), "= a = " + str(a)};
  return std::nullopt;
}

// ---- two primes -----------------------------------------------------------

Outcome eval_two_prime(const GridPoint& pt, const ClaimRanges&) {
  const u64 p = pt.at("p"), q = pt.at("q"), d = pt.at("d");
  const u64 closed = xi_pq(p, q, d);
  const u64 general = xi_formula(p * q, d).total;
  if (closed == general) return std::nullopt;
  return Failure{"closed form " + str(closed), "divisor sum " + str(general)};
}

// ---- generalized: reachability equation ----------------------------------

Outcome eval_eq4(const GridPoint& pt, const ClaimRanges& r) {
  const u64 a = pt.at("a"), d = pt.at("d"), m = pt.at("m"), x = pt.at("x");
  const GenParams gp(a, d, m);
  cpp_int v = x;
  for (u64 run = 0; run <= r.eq4_r_max; ++run) {
    v = m * v + a;
    const u64 direct = static_cast<u64>(v % d);
    const u64 closed = eq4_value(gp, x, run);
    if (direct != closed) {
      return Failure{"closed form at r=" + str(run) + " gives " + str(closed),
                     "direct iterate mod d = " + str(direct)};
    }
  }
  if (x % d == 0 || divisibility_reachable(gp, x)) return std::nullopt;

  constexpr u64 kDirectSteps = 10'000;
  const auto verdict = gen_classify(gp, x, kDirectSteps);
  if (!std::holds_alternative<NoDivisibilityDivergence>(verdict)) {
    return Failure{"unsolvable start not certified as divergent", "no loop"};
  }
  u64 prev = x;
  for (u64 k = 0; k < kDirectSteps; ++k) {
    if (prev % d == 0) return Failure{"iterate " + str(k) + " divisible by d", "never divisible"};
    u64 next;
    try {
      next = gen_step(gp, prev);
    } catch (const OverflowError&) {
      break;  // the residue certificate covers the rest
    }
    if (next <= prev) return Failure{"iterate " + str(k + 1) + " did not increase", "increasing"};
    prev = next;
  }
  return std::nullopt;
}

// ---- generalized: m = 1 (mod d) always reaches a division ----------------

Outcome eval_m_one(const GridPoint& pt, const ClaimRanges&) {
  const GenParams gp(pt.at("a"), pt.at("d"), pt.at("m"));
  if (divisibility_reachable(gp, pt.at("x"))) return std::nullopt;
  return Failure{"no r solves the reachability equation", "a solution exists"};
}

// ---- generalized: division-output recurrence -----------------------------

Outcome eval_gen_sub(const GridPoint& pt, const ClaimRanges& r) {
  const u64 a = pt.at("a"), d = pt.at("d"), m = pt.at("m"), x = pt.at("x");
  const GenParams gp(a, d, m);
  const u64 a_inv = mod_inverse(a % d, d);
  u64 n = x;
  for (u64 i = 0; i < r.gen_sub_count; ++i) {
    GenSubRecord rec;
    try {
      rec = gen_sub_step(gp, n);
    } catch (const OverflowError&) {
      break;
    }
    const u64 run = *rec.run_length;
    const cpp_int lhs = cpp_int(d) * rec.value;
    cpp_int rhs = n;
    if (run > 0) {
      cpp_int geometric = 0;
      for (u64 j = 0; j < run; ++j) geometric += big_pow(m, j);
      rhs = big_pow(m, run) * n + a * geometric;
    }
    if (lhs != rhs) {
      return Failure{"d * n_(i+1) = " + lhs.str() + " at i=" + str(i), rhs.str()};
    }
    if (n % d != 0) {
      const u64 congruent = (d - mul_mod(a_inv, n % d, d)) % d;
      if (run == 0 || run > d - 1 || run % d != congruent) {
        return Failure{"run length " + str(run) + " from n=" + str(n),
                       "r = -a^-1 n mod d = " + str(congruent) + ", 0 < r < d"};
      }
    }
    n = rec.value;
  }
  return std::nullopt;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> c;
    c.push_back({{"L1", "T_{a,d}^k(r) = gcd * T_{a/gcd,d/gcd}^k(r/gcd) for r a multiple of gcd(a,d)",
                  Verdict::Counterexamples},
                 [](const ClaimRanges& r) {
                   return span("a", r.a_lo, r.a_hi) + ", " + span("d", r.d_lo, r.d_hi) + ", " +
                          span("r", r.x_lo, r.x_hi) + ", k in [0, " + str(r.scaling_steps) +
                          "], r multiple of gcd(a,d)";
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_adx(r, 1, [](u64 a, u64 d, u64 x) { return x % std::gcd(a, d) == 0; },
                           [&](GridPoint pt) {
                             for (u64 k = 0; k <= r.scaling_steps; ++k) {
                               GridPoint with_k = pt;
                               with_k.coords.emplace_back("k", k);
                               visit(std::move(with_k));
                             }
                           },
                           "r");
                 },
                 eval_scaling});
    c.push_back({{"P1", "x not a multiple of gcd(a,d) > 1 gives T^k(x) = x + a*k for all k",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return describe_adx(r, ", k <= " + str(r.divergence_steps) + ", gcd(a,d) > 1");
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_adx(r, 1, [](u64 a, u64 d, u64 x) {
                     const u64 g = std::gcd(a, d);
                     return g > 1 && x % g != 0;
                   }, visit);
                 },
                 eval_drift});
    c.push_back({{"P2", "coprime (a,d): the division outputs descend to <= a within the envelope "
                        "(n0 - a)/d^(k+1) + a",
                  Verdict::Pass},
                 [](const ClaimRanges& r) { return describe_adx(r, ", gcd(a,d) = 1, d >= 2"); },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_adx(r, 2, [](u64 a, u64 d, u64) { return std::gcd(a, d) == 1; }, visit);
                 },
                 eval_descent});
    c.push_back({{"P3", "coprime (a,d): starting at x <= a the division outputs stay <= a and "
                        "the trajectory loops",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return describe_adx(r, ", gcd(a,d) = 1, d >= 2, x <= a");
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_adx(r, 2, [](u64 a, u64 d, u64 x) { return std::gcd(a, d) == 1 && x <= a; },
                           visit);
                 },
                 eval_closure});
    c.push_back({{"P4", "every multiple r of gcd(a,d) has a looping trajectory",
                  Verdict::Counterexamples},
                 [](const ClaimRanges& r) {
                   return span("a", r.a_lo, r.a_hi) + ", " + span("d", r.d_lo, r.d_hi) + ", " +
                          span("r", r.x_lo, r.x_hi) + ", r multiple of gcd(a,d)";
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_adx(r, 1, [](u64 a, u64 d, u64 x) { return x % std::gcd(a, d) == 0; },
                           visit, "r");
                 },
                 eval_lattice_loops});
    c.push_back({{"XI", "loop count = sum over f | a of phi(f)/ord_f(d) = Burnside count = "
                        "number of orbits of multiplication by d",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return span("a", r.a_lo, r.a_hi) + ", " + span("d", r.d_lo, r.d_hi) +
                          ", gcd(a,d) = 1";
                 },
                 for_coprime_ad, eval_loop_count});
    c.push_back({{"LB", "sum over f | a of phi(f)/lambda(f) bounds every loop count from below "
                        "and is attained by some d",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return span("a", r.a_lo, r.a_hi) + ", all d in [1, a] coprime to a";
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for (u64 a = r.a_lo; a <= r.a_hi; ++a) visit({{{"a", a}}});
                 },
                 eval_lower_bound});
    c.push_back({{"UB", "the loop count never exceeds a and equals a at d = 1", Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return span("a", r.a_lo, r.a_hi) + ", " + span("d", r.d_lo, r.d_hi) +
                          ", gcd(a,d) = 1";
                 },
                 for_coprime_ad, eval_upper_bound});
    c.push_back({{"PQ", "closed form 1 + (p-1)/ap + (q-1)/aq + (p-1)(q-1)gcd(ap,aq)/(ap aq) equals "
                        "the divisor sum for a = pq",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return "primes p < q <= " + str(r.prime_max) + ", " + span("d", r.d_lo, r.d_hi) +
                          ", gcd(d, pq) = 1";
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for (u64 p = 2; p <= r.prime_max; ++p) {
                     if (!is_prime(p)) continue;
                     for (u64 q = p + 1; q <= r.prime_max; ++q) {
                       if (!is_prime(q)) continue;
                       for (u64 d = r.d_lo; d <= r.d_hi; ++d) {
                         if (std::gcd(d, p * q) == 1) visit({{{"p", p}, {"q", q}, {"d", d}}});
                       }
                     }
                   }
                 },
                 eval_two_prime});
    c.push_back({{"G-EQ4", "m^(r+1) x + a(m^r + ... + 1) mod d tracks the non-division iterates, "
                           "and with no solution the trajectory never loops",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return describe_admx(r, (", r <= " + str(r.eq4_r_max)));
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_admx(r, [](u64, u64, u64) { return true; }, visit);
                 },
                 eval_eq4});
    c.push_back({{"G-M1", "m = 1 (mod d) makes the reachability equation solvable",
                  Verdict::Counterexamples},
                 [](const ClaimRanges& r) { return describe_admx(r, ", m = 1 (mod d)"); },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_admx(r, [](u64, u64 d, u64 m) { return is_m_one(m, d); }, visit);
                 },
                 eval_m_one});
    c.push_back({{"G-M1-COPRIME", "m = 1 (mod d) and gcd(a,d) = 1 make the reachability equation "
                                  "solvable",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return describe_admx(r, ", m = 1 (mod d), gcd(a,d) = 1");
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_admx(r, [](u64 a, u64 d, u64 m) { return is_m_one(m, d) && std::gcd(a, d) == 1; },
                            visit);
                 },
                 eval_m_one});
    c.push_back({{"G-SUB", "division outputs satisfy d n' = m^r n + a(m^(r-1) + ... + 1) with "
                           "r = -a^-1 n (mod d), 0 < r < d",
                  Verdict::Pass},
                 [](const ClaimRanges& r) {
                   return describe_admx(r, (", m = 1 (mod d), gcd(a,d) = 1, " +
                                            str(r.gen_sub_count) + " divisions"));
                 },
                 [](const ClaimRanges& r, const Visit& visit) {
                   for_admx(r, [](u64 a, u64 d, u64 m) { return is_m_one(m, d) && std::gcd(a, d) == 1; },
                            visit);
                 },
                 eval_gen_sub});
    return c;
  }();
  return registry;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claims()) {
    if (c.info.id == id) return c;
  }
  throw DomainError("unknown claim id '" + std::string(id) + "'");
}

ClaimReport run(const Claim& claim, const ClaimRanges& ranges) {
  ClaimReport report{std::string(claim.info.id), std::string(claim.info.statement),
                     claim.describe(ranges), 0, Verdict::Pass, {}, 0};
  claim.enumerate(ranges, [&](GridPoint pt) {
    ++report.checked_count;
    if (auto failure = claim.evaluate(pt, ranges)) {
      ++report.counterexample_total;
      if (report.counterexamples.size() < ranges.counterexample_limit) {
        report.counterexamples.push_back(
            {std::move(pt), std::move(failure->observed), std::move(failure->claimed)});
      }
    }
  });
  if (report.counterexample_total > 0) report.verdict = Verdict::Counterexamples;
  return report;
}

}  // namespace

ClaimRanges ClaimRanges::empty() {
  ClaimRanges r;
  r.a_lo = r.d_lo = r.x_lo = r.m_lo = 1;
  r.a_hi = r.d_hi = r.x_hi = r.m_hi = 0;
  r.prime_max = 0;
  return r;
}

u64 GridPoint::at(std::string_view name) const {
  for (const auto& [key, value] : coords) {
    if (key == name) return value;
  }
  throw DomainError("grid point lacks coordinate '" + std::string(name) + "'");
}

std::string GridPoint::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out << ", ";
    out << coords[i].first << '=' << coords[i].second;
  }
  out << ')';
  return out.str();
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

ClaimReport run_claim(std::string_view claim_id, const ClaimRanges& ranges) {
  return run(find_claim(claim_id), ranges);
}

std::vector<ClaimReport> run_all(const ClaimRanges& ranges, unsigned jobs) {
  const auto& registry = claims();
  std::vector<ClaimReport> reports;
  reports.reserve(registry.size());
  if (jobs <= 1) {
    for (const auto& c : registry) reports.push_back(run(c, ranges));
    return reports;
  }
  std::vector<std::future<ClaimReport>> pending;
  std::size_t next = 0;
  auto launch = [&] {
    const Claim* c = &registry[next++];
    pending.push_back(std::async(std::launch::async, [c, &ranges] { return run(*c, ranges); }));
  };
  while (next < registry.size() && pending.size() < jobs) launch();
  for (std::size_t done = 0; done < registry.size(); ++done) {
    reports.push_back(pending[done].get());
    if (next < registry.size()) launch();
  }
  return reports;
}

std::optional<Counterexample> check_point(std::string_view claim_id, const GridPoint& point,
                                          const ClaimRanges& ranges) {
  auto failure = find_claim(claim_id).evaluate(point, ranges);
  if (!failure) return std::nullopt;
  return Counterexample{point, std::move(failure->observed), std::move(failure->claimed)};
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Pass ? "PASS" : "COUNTEREXAMPLES";
}

}  // namespace addcollatz
