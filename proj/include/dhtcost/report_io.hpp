#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhtcost/analytic.hpp"
#include "dhtcost/engine.hpp"

namespace dhtcost::io {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

inline constexpr const char* kPerNodeCsvHeader = "node_id,service,access,routing,maintenance,total";

void write_pernode_csv(std::ostream& out, const CostReport& report);

/// Parses a per-node CSV back into costs; node ids are resolved against `spec`.
std::vector<NodeCost> read_pernode_csv(std::istream& in, const GeometrySpec& spec);

nlohmann::ordered_json to_json(const GeometrySpec& spec);
GeometrySpec geometry_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CostParams& params);
CostParams params_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CostReport& report);
CostReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const ComparisonTable& table);
nlohmann::ordered_json to_json(const analytic::DeBruijnBounds& bounds);
nlohmann::ordered_json to_json(const analytic::EquilibriumSize& size);

}  // namespace dhtcost::io
