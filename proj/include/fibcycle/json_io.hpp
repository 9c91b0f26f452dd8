#pragma once

#include <json.hpp>

#include "fibcycle/classification.hpp"
#include "fibcycle/core.hpp"
#include "fibcycle/periods.hpp"
#include "fibcycle/systems.hpp"

namespace fibcycle {

void to_json(nlohmann::json& j, const SeedPair& s);
void to_json(nlohmann::json& j, const InvariantValue& v);
void to_json(nlohmann::json& j, const Cycle& c);
void to_json(nlohmann::json& j, const PeriodRecord& r);
void to_json(nlohmann::json& j, const PrimeDivisibilityReport& r);
void to_json(nlohmann::json& j, const FMembership& f);
void to_json(nlohmann::json& j, const Classification& c);
void to_json(nlohmann::json& j, const Disagreement& d);
void to_json(nlohmann::json& j, const SweepReport& r);
void to_json(nlohmann::json& j, const LiftReport& r);
void to_json(nlohmann::json& j, const SystemCatalog& cat);
void to_json(nlohmann::json& j, const TernaryDecompositionReport& r);

// Reconstruct validated values; throws on malformed or inconsistent input.
SeedPair seed_from_json(const nlohmann::json& j);
Cycle cycle_from_json(const nlohmann::json& j);

}  // namespace fibcycle
