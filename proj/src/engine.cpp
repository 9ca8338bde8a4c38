#include "dhtcost/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dhtcost/analytic.hpp"
#include "dhtcost/error.hpp"

namespace dhtcost {
namespace {

void check_enumeration_guard(const Topology& topology, const EnumerationOptions& options) {
  if (topology.node_count() > options.max_nodes) {
    throw ResourceLimit("exact enumeration of " + describe(topology.spec()) + " needs " +
                        std::to_string(topology.node_count()) +
                        " nodes, above the enumeration cap of " +
                        std::to_string(options.max_nodes));
  }
}

CostReport make_report(Method method, const Topology& topology, const CostParams& params) {
  CostReport report;
  report.method = method;
  report.geometry = topology.spec();
  report.params = params;
  report.per_node.resize(topology.node_count());
  for (std::uint32_t i = 0; i < topology.node_count(); ++i) {
    auto& entry = report.per_node[i];
    entry.node = NodeId{i};
    entry.cost.service = service_cost(params, topology.node_count());
    entry.cost.maintenance = maintenance_cost(params, topology.degree(NodeId{i}));
  }
  return report;
}

// Standard error of the mean of R draws whose sum and sum of squares are given.
double standard_error(double sum, double sum_sq, double draws) {
  if (draws < 2.0) return 0.0;
  const double mean = sum / draws;
  const double variance = std::max(0.0, (sum_sq - draws * mean * mean) / (draws - 1.0));
  return std::sqrt(variance / draws);
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Analytic:
      return "analytic";
    case Method::Exact:
      return "exact";
    case Method::Simulated:
      return "simulated";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "analytic") return Method::Analytic;
  if (text == "exact") return Method::Exact;
  if (text == "sim" || text == "simulated") return Method::Simulated;
  throw InvalidParameter("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Component component) {
  switch (component) {
    case Component::Service:
      return "service";
    case Component::Access:
      return "access";
    case Component::Routing:
      return "routing";
    case Component::Maintenance:
      return "maintenance";
    case Component::Total:
      return "total";
  }
  return "unknown";
}

double component_value(const CostBreakdown& cost, Component component) {
  switch (component) {
    case Component::Service:
      return cost.service;
    case Component::Access:
      return cost.access;
    case Component::Routing:
      return cost.routing;
    case Component::Maintenance:
      return cost.maintenance;
    case Component::Total:
      return total_cost(cost);
  }
  return 0.0;
}

Aggregates summarize(std::span<const NodeCost> per_node) {
  Aggregates out;
  if (per_node.empty()) return out;
  for (auto component : kComponents) {
    auto& stats = out.stats[static_cast<std::size_t>(component)];
    double sum = 0.0;
    stats.min = std::numeric_limits<double>::infinity();
    stats.max = -std::numeric_limits<double>::infinity();
    for (const auto& entry : per_node) {
      const double v = component_value(entry.cost, component);
      sum += v;
      stats.min = std::min(stats.min, v);
      stats.max = std::max(stats.max, v);
    }
    stats.mean = sum / static_cast<double>(per_node.size());
  }
  double second = std::numeric_limits<double>::infinity();
  for (const auto& entry : per_node) {
    if (entry.cost.routing != 0.0) second = std::min(second, entry.cost.routing);
  }
  out.second_min_routing = std::isinf(second) ? 0.0 : second;
  return out;
}

void SimulationTally::merge(const SimulationTally& other) {
  if (served.empty()) {
    *this = other;
    return;
  }
  requests += other.requests;
  for (std::size_t i = 0; i < served.size(); ++i) {
    served[i] += other.served[i];
    hop_sum[i] += other.hop_sum[i];
    hop_sq_sum[i] += other.hop_sq_sum[i];
    forwarded[i] += other.forwarded[i];
  }
  total_hop_sq += other.total_hop_sq;
  total_intermediate_sq += other.total_intermediate_sq;
}

RouteCounts count_routes(const Topology& topology, const EnumerationOptions& options) {
  check_enumeration_guard(topology, options);
  return kernels::count_routes_parallel(topology);
}

LoadingProfile node_loading(const Topology& topology, const EnumerationOptions& options) {
  auto counts = count_routes(topology, options);
  return {std::move(counts.loading), counts.total_intermediates};
}

CostReport enumerate_exact(const Topology& topology, const CostParams& params,
                           const EnumerationOptions& options) {
  params.validate();
  const auto counts = count_routes(topology, options);
  const double n = topology.node_count();
  auto report = make_report(Method::Exact, topology, params);
  for (std::uint32_t i = 0; i < topology.node_count(); ++i) {
    auto& cost = report.per_node[i].cost;
    cost.access = params.a * static_cast<double>(counts.hop_sum[i]) / n;
    cost.routing = params.r * static_cast<double>(counts.loading[i]) / (n * n);
  }
  report.aggregates = summarize(report.per_node);
  return report;
}

CostReport analytic_report(const Topology& topology, const CostParams& params) {
  params.validate();
  auto report = make_report(Method::Analytic, topology, params);
  const auto& spec = topology.spec();
  auto fill_uniform = [&](const analytic::AccessRouting& ar) {
    for (auto& entry : report.per_node) {
      entry.cost.access = ar.access;
      entry.cost.routing = ar.routing;
    }
  };

  if (const auto* star = std::get_if<Star>(&spec)) {
    const auto b = analytic::star_breakdown(star->n, params);
    for (auto& entry : report.per_node) {
      entry.cost = entry.node.value == 0 ? b.center : b.peripheral;
    }
  } else if (std::holds_alternative<DeBruijn>(spec)) {
    throw Unsupported("de Bruijn graphs have closed-form bounds only, not per-node costs");
  } else if (const auto* torus = std::get_if<Torus>(&spec)) {
    fill_uniform(analytic::torus_costs(torus->d, torus->n_side, params));
  } else if (const auto* plaxton = std::get_if<PlaxtonTree>(&spec)) {
    fill_uniform(analytic::plaxton_costs(plaxton->delta, plaxton->d, params));
  } else if (const auto* chord = std::get_if<ChordRing>(&spec)) {
    fill_uniform(analytic::chord_costs(chord->d, params));
  }
  report.aggregates = summarize(report.per_node);
  return report;
}

CostReport simulate(const Topology& topology, const CostParams& params, std::uint64_t requests,
                    std::span<const std::uint64_t> seeds) {
  params.validate();
  if (requests == 0) throw InvalidParameter("simulation needs at least one request");
  if (seeds.empty()) throw InvalidParameter("simulation needs at least one seed");

  std::vector<SimulationTally> per_seed(seeds.size());
  const auto seed_count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < seed_count; ++k) {
    per_seed[k] = kernels::simulate_tally(topology, requests, seeds[k]);
  }
  SimulationTally pooled;
  for (const auto& tally : per_seed) pooled.merge(tally);

  const double n = topology.node_count();
  const double draws = static_cast<double>(pooled.requests);
  auto report = make_report(Method::Simulated, topology, params);
  SimulationMeta meta;
  meta.seeds.assign(seeds.begin(), seeds.end());
  meta.requests_per_seed = requests;
  meta.standard_error.resize(topology.node_count());

  double hop_total = 0.0;
  double forwarded_total = 0.0;
  for (std::uint32_t i = 0; i < topology.node_count(); ++i) {
    auto& cost = report.per_node[i].cost;
    const double served = static_cast<double>(pooled.served[i]);
    const double hops = static_cast<double>(pooled.hop_sum[i]);
    const double hops_sq = static_cast<double>(pooled.hop_sq_sum[i]);
    const double forwarded = static_cast<double>(pooled.forwarded[i]);
    cost.service = params.s * served / draws;
    cost.access = params.a * n * hops / draws;
    cost.routing = params.r * forwarded / draws;

    auto& se = meta.standard_error[i];
    se.service = standard_error(params.s * served, params.s * params.s * served, draws);
    se.access = standard_error(params.a * n * hops, params.a * params.a * n * n * hops_sq, draws);
    se.routing = standard_error(params.r * forwarded, params.r * params.r * forwarded, draws);
    hop_total += hops;
    forwarded_total += forwarded;
  }
  // Network means are per-request averages of a*t and r*(intermediates)/N.
  meta.mean_access_se = standard_error(params.a * hop_total,
                                       params.a * params.a * static_cast<double>(pooled.total_hop_sq),
                                       draws);
  meta.mean_routing_se =
      standard_error(params.r * forwarded_total / n,
                     params.r * params.r * static_cast<double>(pooled.total_intermediate_sq) / (n * n),
                     draws);
  report.sim_meta = std::move(meta);
  report.aggregates = summarize(report.per_node);
  return report;
}

CostReport simulate(const Topology& topology, const CostParams& params, std::uint64_t requests,
                    std::uint64_t seed) {
  const std::uint64_t seeds[] = {seed};
  return simulate(topology, params, requests, seeds);
}

double relative_difference(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

bool ComparisonTable::all_within() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& row) { return row.within; });
}

ComparisonTable compare(std::span<const CostReport> reports, const Tolerance& tolerance) {
  ComparisonTable table;
  if (reports.size() < 2) return table;
  const auto& reference = reports.front();
  for (std::size_t k = 1; k < reports.size(); ++k) {
    const auto& candidate = reports[k];
    if (!(candidate.geometry == reference.geometry)) {
      throw InvalidParameter("cannot compare reports of different geometries");
    }
    if (!(candidate.params == reference.params)) {
      throw InvalidParameter("cannot compare reports with different cost params");
    }
    if (candidate.per_node.size() != reference.per_node.size()) {
      throw InvalidParameter("cannot compare reports with different node sets");
    }
    MethodComparison row;
    row.reference = reference.method;
    row.candidate = candidate.method;
    for (auto component : kComponents) {
      ComponentDeviation dev;
      dev.component = component;
      bool nodes_within = true;
      for (std::size_t i = 0; i < reference.per_node.size(); ++i) {
        const double x = component_value(reference.per_node[i].cost, component);
        const double y = component_value(candidate.per_node[i].cost, component);
        dev.max_abs = std::max(dev.max_abs, std::abs(x - y));
        const double rel = relative_difference(x, y);
        dev.max_rel = std::max(dev.max_rel, rel);
        nodes_within = nodes_within && (std::abs(x - y) <= tolerance.abs || rel <= tolerance.rel);
      }
      const double xm = reference.aggregates[component].mean;
      const double ym = candidate.aggregates[component].mean;
      dev.mean_abs = std::abs(xm - ym);
      dev.mean_rel = relative_difference(xm, ym);
      dev.within = tolerance.per_node
                       ? nodes_within
                       : (dev.mean_abs <= tolerance.abs || dev.mean_rel <= tolerance.rel);
      row.within = row.within && dev.within;
      row.components.push_back(dev);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace dhtcost
