#include "addcollatz/serialize.hpp"

#include "addcollatz/errors.hpp"

using nlohmann::json;

namespace addcollatz {

namespace {

json optional_to_json(const std::optional<u64>& v) { return v ? json(*v) : json(nullptr); }

std::optional<u64> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<u64>();
}

}  // namespace

void to_json(json& j, const PrimePower& v) { j = {{"prime", v.prime}, {"exponent", v.exponent}}; }
void from_json(const json& j, PrimePower& v) {
  j.at("prime").get_to(v.prime);
  j.at("exponent").get_to(v.exponent);
}

void to_json(json& j, const Factorization& v) { j = v.entries(); }
void from_json(const json& j, Factorization& v) {
  v = Factorization(j.get<std::vector<PrimePower>>());
}

void to_json(json& j, const Loops& v) {
  j = {{"kind", "loops"}, {"preperiod", v.preperiod}, {"cycle", v.cycle}};
}
void from_json(const json& j, Loops& v) {
  j.at("preperiod").get_to(v.preperiod);
  j.at("cycle").get_to(v.cycle);
}

void to_json(json& j, const Diverges& v) {
  j = {{"kind", "diverges"}, {"steps", v.steps}, {"witness", v.witness}};
}
void from_json(const json& j, Diverges& v) {
  j.at("steps").get_to(v.steps);
  j.at("witness").get_to(v.witness);
}

void to_json(json& j, const SubRecord& v) {
  j = {{"i", v.division_index}, {"z", v.step_index}, {"n", v.value},
       {"y", optional_to_json(v.additions)}};
}
void from_json(const json& j, SubRecord& v) {
  j.at("i").get_to(v.division_index);
  j.at("z").get_to(v.step_index);
  j.at("n").get_to(v.value);
  v.additions = optional_from_json(j.at("y"));
}

void to_json(json& j, const Descent& v) {
  j = {{"division_index", v.division_index}, {"value", v.value}};
}
void from_json(const json& j, Descent& v) {
  j.at("division_index").get_to(v.division_index);
  j.at("value").get_to(v.value);
}

void to_json(json& j, const OrbitPartition& v) {
  j = {{"modulus", v.modulus}, {"multiplier", v.multiplier}, {"orbits", v.orbits}};
}
void from_json(const json& j, OrbitPartition& v) {
  j.at("modulus").get_to(v.modulus);
  j.at("multiplier").get_to(v.multiplier);
  j.at("orbits").get_to(v.orbits);
}

void to_json(json& j, const XiTerm& v) {
  j = {{"divisor", v.divisor}, {"phi", v.phi}, {"order", v.order}, {"term", v.term}};
}
void from_json(const json& j, XiTerm& v) {
  j.at("divisor").get_to(v.divisor);
  j.at("phi").get_to(v.phi);
  j.at("order").get_to(v.order);
  j.at("term").get_to(v.term);
}

void to_json(json& j, const XiBreakdown& v) {
  j = {{"a", v.a}, {"d", v.d}, {"terms", v.terms}, {"total", v.total}};
}
void from_json(const json& j, XiBreakdown& v) {
  j.at("a").get_to(v.a);
  j.at("d").get_to(v.d);
  j.at("terms").get_to(v.terms);
  j.at("total").get_to(v.total);
}

void to_json(json& j, const NoDivisibilityDivergence& v) {
  j = {{"kind", "no_divisibility_divergence"}, {"witness_residue", v.witness_residue},
       {"steps", v.steps}};
}
void from_json(const json& j, NoDivisibilityDivergence& v) {
  j.at("witness_residue").get_to(v.witness_residue);
  j.at("steps").get_to(v.steps);
}

void to_json(json& j, const Unknown& v) {
  j = {{"kind", "unknown"}, {"steps_executed", v.steps_executed}, {"last_value", v.last_value},
       {"overflowed", v.overflowed}};
}
void from_json(const json& j, Unknown& v) {
  j.at("steps_executed").get_to(v.steps_executed);
  j.at("last_value").get_to(v.last_value);
  j.at("overflowed").get_to(v.overflowed);
}

void to_json(json& j, const GenSubRecord& v) {
  j = {{"n", v.value}, {"r", optional_to_json(v.run_length)}};
}
void from_json(const json& j, GenSubRecord& v) {
  j.at("n").get_to(v.value);
  v.run_length = optional_from_json(j.at("r"));
}

void to_json(json& j, const GridPoint& v) {
  // Arrays of pairs keep coordinate order, which an object would not.
  j = json::array();
  for (const auto& [name, value] : v.coords) j.push_back({name, value});
}
void from_json(const json& j, GridPoint& v) {
  v.coords.clear();
  for (const auto& entry : j) v.coords.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<u64>());
}

void to_json(json& j, const Counterexample& v) {
  j = {{"point", v.point}, {"observed", v.observed}, {"claimed", v.claimed}};
}
void from_json(const json& j, Counterexample& v) {
  j.at("point").get_to(v.point);
  j.at("observed").get_to(v.observed);
  j.at("claimed").get_to(v.claimed);
}

void to_json(json& j, const Verdict& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Verdict& v) {
  const auto s = j.get<std::string>();
  if (s == "PASS") {
    v = Verdict::Pass;
  } else if (s == "COUNTEREXAMPLES") {
    v = Verdict::Counterexamples;
  } else {
    throw DomainError("unknown verdict '" + s + "'");
  }
}

void to_json(json& j, const ClaimReport& v) {
  j = {{"claim_id", v.claim_id},
       {"statement", v.statement},
       {"range_description", v.range_description},
       {"checked_count", v.checked_count},
       {"verdict", v.verdict},
       {"counterexamples", v.counterexamples},
       {"counterexample_total", v.counterexample_total}};
}
void from_json(const json& j, ClaimReport& v) {
  j.at("claim_id").get_to(v.claim_id);
  j.at("statement").get_to(v.statement);
  j.at("range_description").get_to(v.range_description);
  j.at("checked_count").get_to(v.checked_count);
  j.at("verdict").get_to(v.verdict);
  j.at("counterexamples").get_to(v.counterexamples);
  j.at("counterexample_total").get_to(v.counterexample_total);
}

}  // namespace addcollatz

namespace nlohmann {

void adl_serializer<addcollatz::Params>::to_json(json& j, const addcollatz::Params& v) {
  j = {{"a", v.a()}, {"d", v.d()}, {"delta", v.delta()}};
}
addcollatz::Params adl_serializer<addcollatz::Params>::from_json(const json& j) {
  return {j.at("a").get<addcollatz::u64>(), j.at("d").get<addcollatz::u64>()};
}

void adl_serializer<addcollatz::GenParams>::to_json(json& j, const addcollatz::GenParams& v) {
  j = {{"a", v.a()}, {"d", v.d()}, {"m", v.m()}};
}
addcollatz::GenParams adl_serializer<addcollatz::GenParams>::from_json(const json& j) {
  return {j.at("a").get<addcollatz::u64>(), j.at("d").get<addcollatz::u64>(),
          j.at("m").get<addcollatz::u64>()};
}

void adl_serializer<addcollatz::SubTrajectory>::to_json(json& j,
                                                        const addcollatz::SubTrajectory& v) {
  j = {{"params", v.params}, {"records", v.records}};
}
addcollatz::SubTrajectory adl_serializer<addcollatz::SubTrajectory>::from_json(const json& j) {
  return {j.at("params").get<addcollatz::Params>(),
          j.at("records").get<std::vector<addcollatz::SubRecord>>()};
}

void adl_serializer<addcollatz::TrajectoryClass>::to_json(json& j,
                                                          const addcollatz::TrajectoryClass& v) {
  std::visit([&](const auto& alt) { j = alt; }, v);
}
addcollatz::TrajectoryClass adl_serializer<addcollatz::TrajectoryClass>::from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "loops") return j.get<addcollatz::Loops>();
  if (kind == "diverges") return j.get<addcollatz::Diverges>();
  throw addcollatz::DomainError("unknown trajectory class '" + kind + "'");
}

void adl_serializer<addcollatz::GenClass>::to_json(json& j, const addcollatz::GenClass& v) {
  std::visit([&](const auto& alt) { j = alt; }, v);
}
addcollatz::GenClass adl_serializer<addcollatz::GenClass>::from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "loops") return j.get<addcollatz::Loops>();
  if (kind == "no_divisibility_divergence") return j.get<addcollatz::NoDivisibilityDivergence>();
  if (kind == "unknown") return j.get<addcollatz::Unknown>();
  throw addcollatz::DomainError("unknown generalized class '" + kind + "'");
}

}  // namespace nlohmann
