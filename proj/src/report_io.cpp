#include "dhtcost/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dhtcost/error.hpp"

namespace dhtcost::io {
namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json breakdown_json(const CostBreakdown& b) {
  return json{{"service", b.service},
              {"access", b.access},
              {"routing", b.routing},
              {"maintenance", b.maintenance},
              {"total", total_cost(b)}};
}

CostBreakdown breakdown_from_json(const json& j) {
  return {j.at("service").get<double>(), j.at("access").get<double>(),
          j.at("routing").get<double>(), j.at("maintenance").get<double>()};
}

double parse_double(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidParameter("bad numeric field '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_pernode_csv(std::ostream& out, const CostReport& report) {
  out << kPerNodeCsvHeader << '\n';
  for (const auto& entry : report.per_node) {
    const auto& c = entry.cost;
    out << node_label(report.geometry, entry.node) << ',' << format_double(c.service) << ','
        << format_double(c.access) << ',' << format_double(c.routing) << ','
        << format_double(c.maintenance) << ',' << format_double(total_cost(c)) << '\n';
  }
}

std::vector<NodeCost> read_pernode_csv(std::istream& in, const GeometrySpec& spec) {
  std::string line;
  if (!std::getline(in, line) || line != kPerNodeCsvHeader) {
    throw InvalidParameter("per-node CSV header mismatch");
  }
  std::vector<NodeCost> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw InvalidParameter("per-node CSV row needs 6 fields");
    NodeCost row;
    row.node = parse_node_label(spec, fields[0]);
    row.cost = {parse_double(fields[1]), parse_double(fields[2]), parse_double(fields[3]),
                parse_double(fields[4])};
    rows.push_back(row);
  }
  return rows;
}

json to_json(const GeometrySpec& spec) {
  json j;
  j["kind"] = std::string(geometry_name(spec));
  std::visit(overloaded{
                 [&](const Star& g) { j["n"] = g.n; },
                 [&](const DeBruijn& g) {
                   j["delta"] = g.delta;
                   j["d"] = g.d;
                 },
                 [&](const Torus& g) {
                   j["d"] = g.d;
                   j["n_side"] = g.n_side;
                 },
                 [&](const PlaxtonTree& g) {
                   j["delta"] = g.delta;
                   j["d"] = g.d;
                 },
                 [&](const ChordRing& g) { j["d"] = g.d; },
             },
             spec);
  j["node_count"] = node_count(spec);
  return j;
}

GeometrySpec geometry_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "star") return Star{j.at("n").get<std::uint64_t>()};
  if (kind == "debruijn") {
    return DeBruijn{j.at("delta").get<std::uint32_t>(), j.at("d").get<std::uint32_t>()};
  }
  if (kind == "torus") {
    return Torus{j.at("d").get<std::uint32_t>(), j.at("n_side").get<std::uint32_t>()};
  }
  if (kind == "plaxton") {
    return PlaxtonTree{j.at("delta").get<std::uint32_t>(), j.at("d").get<std::uint32_t>()};
  }
  if (kind == "chord") return ChordRing{j.at("d").get<std::uint32_t>()};
  throw InvalidParameter("unknown geometry kind '" + kind + "'");
}

json to_json(const CostParams& p) { return json{{"s", p.s}, {"a", p.a}, {"r", p.r}, {"m", p.m}}; }

CostParams params_from_json(const json& j) {
  return {j.at("s").get<double>(), j.at("a").get<double>(), j.at("r").get<double>(),
          j.at("m").get<double>()};
}

json to_json(const CostReport& report) {
  json j;
  j["method"] = std::string(to_string(report.method));
  j["geometry"] = to_json(report.geometry);
  j["params"] = to_json(report.params);

  json per_node = json::array();
  for (const auto& entry : report.per_node) {
    json row{{"node_id", node_label(report.geometry, entry.node)}, {"index", entry.node.value}};
    row.update(breakdown_json(entry.cost));
    per_node.push_back(std::move(row));
  }
  j["per_node"] = std::move(per_node);

  json aggregates;
  for (auto component : kComponents) {
    const auto& stats = report.aggregates[component];
    aggregates[std::string(to_string(component))] =
        json{{"mean", stats.mean}, {"min", stats.min}, {"max", stats.max}};
  }
  aggregates["second_min_routing"] = report.aggregates.second_min_routing;
  j["aggregates"] = std::move(aggregates);

  if (report.sim_meta) {
    const auto& meta = *report.sim_meta;
    json se = json::array();
    for (const auto& e : meta.standard_error) {
      se.push_back(json{{"service", e.service}, {"access", e.access}, {"routing", e.routing}});
    }
    j["sim_meta"] = json{{"seeds", meta.seeds},
                         {"requests_per_seed", meta.requests_per_seed},
                         {"mean_access_se", meta.mean_access_se},
                         {"mean_routing_se", meta.mean_routing_se},
                         {"standard_error", std::move(se)}};
  } else {
    j["sim_meta"] = nullptr;
  }
  return j;
}

CostReport report_from_json(const json& j) {
  CostReport report;
  report.method = parse_method(j.at("method").get<std::string>());
  report.geometry = geometry_from_json(j.at("geometry"));
  report.params = params_from_json(j.at("params"));
  for (const auto& row : j.at("per_node")) {
    report.per_node.push_back({NodeId{row.at("index").get<std::uint32_t>()}, breakdown_from_json(row)});
  }
  const auto& aggregates = j.at("aggregates");
  for (auto component : kComponents) {
    const auto& stats = aggregates.at(std::string(to_string(component)));
    report.aggregates.stats[static_cast<std::size_t>(component)] = {
        stats.at("mean").get<double>(), stats.at("min").get<double>(),
        stats.at("max").get<double>()};
  }
  report.aggregates.second_min_routing = aggregates.at("second_min_routing").get<double>();
  if (j.contains("sim_meta") && !j.at("sim_meta").is_null()) {
    const auto& m = j.at("sim_meta");
    SimulationMeta meta;
    meta.seeds = m.at("seeds").get<std::vector<std::uint64_t>>();
    meta.requests_per_seed = m.at("requests_per_seed").get<std::uint64_t>();
    meta.mean_access_se = m.at("mean_access_se").get<double>();
    meta.mean_routing_se = m.at("mean_routing_se").get<double>();
    for (const auto& e : m.at("standard_error")) {
      meta.standard_error.push_back({e.at("service").get<double>(), e.at("access").get<double>(),
                                     e.at("routing").get<double>(), 0.0});
    }
    report.sim_meta = std::move(meta);
  }
  return report;
}

json to_json(const ComparisonTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json components = json::array();
    for (const auto& dev : row.components) {
      components.push_back(json{{"component", std::string(to_string(dev.component))},
                                {"max_abs", dev.max_abs},
                                {"max_rel", dev.max_rel},
                                {"mean_abs", dev.mean_abs},
                                {"mean_rel", dev.mean_rel},
                                {"within_tolerance", dev.within}});
    }
    rows.push_back(json{{"reference", std::string(to_string(row.reference))},
                        {"candidate", std::string(to_string(row.candidate))},
                        {"within_tolerance", row.within},
                        {"components", std::move(components)}});
  }
  return rows;
}

json to_json(const analytic::DeBruijnBounds& b) {
  return json{{"a_min", b.a_min}, {"a_max", b.a_max}, {"r_max", b.r_max}, {"l_max", b.l_max}};
}

json to_json(const analytic::EquilibriumSize& size) {
  json j{{"kind", analytic::to_string(size.kind)}};
  if (size.kind == analytic::EquilibriumSize::Kind::Candidate) {
    j["n0"] = size.n0_real;
    j["is_integer"] = size.is_integer;
  } else {
    j["n0"] = nullptr;
    j["is_integer"] = nullptr;
  }
  return j;
}

}  // namespace dhtcost::io
