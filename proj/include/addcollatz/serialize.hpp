#pragma once

// JSON encodings of the domain types. Every encoding round-trips:
// value == json(value).get<T>().

#include <json.hpp>

#include "addcollatz/claims.hpp"
#include "addcollatz/counting.hpp"
#include "addcollatz/generalized.hpp"
#include "addcollatz/numth.hpp"
#include "addcollatz/orbits.hpp"
#include "addcollatz/trajectory.hpp"

namespace addcollatz {

void to_json(nlohmann::json& j, const PrimePower& v);
void from_json(const nlohmann::json& j, PrimePower& v);
void to_json(nlohmann::json& j, const Factorization& v);
void from_json(const nlohmann::json& j, Factorization& v);

void to_json(nlohmann::json& j, const Loops& v);
void from_json(const nlohmann::json& j, Loops& v);
void to_json(nlohmann::json& j, const Diverges& v);
void from_json(const nlohmann::json& j, Diverges& v);
void to_json(nlohmann::json& j, const SubRecord& v);
void from_json(const nlohmann::json& j, SubRecord& v);
void to_json(nlohmann::json& j, const Descent& v);
void from_json(const nlohmann::json& j, Descent& v);

void to_json(nlohmann::json& j, const OrbitPartition& v);
void from_json(const nlohmann::json& j, OrbitPartition& v);

void to_json(nlohmann::json& j, const XiTerm& v);
void from_json(const nlohmann::json& j, XiTerm& v);
void to_json(nlohmann::json& j, const XiBreakdown& v);
void from_json(const nlohmann::json& j, XiBreakdown& v);

void to_json(nlohmann::json& j, const NoDivisibilityDivergence& v);
void from_json(const nlohmann::json& j, NoDivisibilityDivergence& v);
void to_json(nlohmann::json& j, const Unknown& v);
void from_json(const nlohmann::json& j, Unknown& v);
void to_json(nlohmann::json& j, const GenSubRecord& v);
void from_json(const nlohmann::json& j, GenSubRecord& v);

void to_json(nlohmann::json& j, const GridPoint& v);
void from_json(const nlohmann::json& j, GridPoint& v);
void to_json(nlohmann::json& j, const Counterexample& v);
void from_json(const nlohmann::json& j, Counterexample& v);
void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);
void to_json(nlohmann::json& j, const ClaimReport& v);
void from_json(const nlohmann::json& j, ClaimReport& v);

}  // namespace addcollatz

namespace nlohmann {

// Types without a default constructor, and the variants.
template <>
struct adl_serializer<addcollatz::Params> {
  static void to_json(json& j, const addcollatz::Params& v);
  static addcollatz::Params from_json(const json& j);
};

template <>
struct adl_serializer<addcollatz::GenParams> {
  static void to_json(json& j, const addcollatz::GenParams& v);
  static addcollatz::GenParams from_json(const json& j);
};

template <>
struct adl_serializer<addcollatz::SubTrajectory> {
  static void to_json(json& j, const addcollatz::SubTrajectory& v);
  static addcollatz::SubTrajectory from_json(const json& j);
};

template <>
struct adl_serializer<addcollatz::TrajectoryClass> {
  static void to_json(json& j, const addcollatz::TrajectoryClass& v);
  static addcollatz::TrajectoryClass from_json(const json& j);
};

template <>
struct adl_serializer<addcollatz::GenClass> {
  static void to_json(json& j, const addcollatz::GenClass& v);
  static addcollatz::GenClass from_json(const json& j);
};

}  // namespace nlohmann
