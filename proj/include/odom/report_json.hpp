#pragma once

#include <string>

#include <json.hpp>

#include "odom/nets.hpp"
#include "odom/resolution.hpp"
#include "odom/verify.hpp"

namespace odom {

// All objects use sorted keys; arrays follow the library's canonical orders,
// so output is byte-stable for fixed input.
nlohmann::json betti_json(const BettiTable& betti, const VariableTable& table);
nlohmann::json nets_json(const MinimalNetFamily& family, const VariableTable& table);
nlohmann::json report_json(const InvariantReport& report);
nlohmann::json fuzz_json(const FuzzSummary& summary, const FuzzParams& params);

std::string emit_json(const InvariantReport& report);

}  // namespace odom
