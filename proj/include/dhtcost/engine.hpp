#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dhtcost/core.hpp"
#include "dhtcost/geometry.hpp"
#include "dhtcost/topology.hpp"

namespace dhtcost {

enum class Method { Analytic, Exact, Simulated };

std::string_view to_string(Method method);
/// Accepts "analytic", "exact", "sim" / "simulated".
Method parse_method(std::string_view text);

enum class Component { Service, Access, Routing, Maintenance, Total };

inline constexpr std::array<Component, 5> kComponents = {
    Component::Service, Component::Access, Component::Routing, Component::Maintenance,
    Component::Total};

std::string_view to_string(Component component);
double component_value(const CostBreakdown& cost, Component component);

struct NodeCost {
  NodeId node;
  CostBreakdown cost;
};

struct ComponentStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct Aggregates {
  std::array<ComponentStats, kComponents.size()> stats{};
  /// Minimum routing cost over nodes whose routing cost is nonzero; equals
  /// the plain minimum when no node routes nothing, and 0 when all do.
  double second_min_routing = 0.0;

  const ComponentStats& operator[](Component c) const {
    return stats[static_cast<std::size_t>(c)];
  }
};

Aggregates summarize(std::span<const NodeCost> per_node);

struct SimulationMeta {
  std::vector<std::uint64_t> seeds;
  std::uint64_t requests_per_seed = 0;
  /// Per-node standard errors of the service, access and routing
  /// estimators (maintenance is deterministic and stays 0).
  std::vector<CostBreakdown> standard_error;
  double mean_access_se = 0.0;
  double mean_routing_se = 0.0;
};

struct CostReport {
  Method method = Method::Exact;
  GeometrySpec geometry;
  CostParams params;
  std::vector<NodeCost> per_node;
  Aggregates aggregates;
  std::optional<SimulationMeta> sim_meta;
};

/// Exact integer route statistics over all N^2 ordered (source, holder) pairs.
struct RouteCounts {
  std::vector<std::uint64_t> hop_sum;  ///< per source: sum of hop counts to every node
  std::vector<std::uint64_t> loading;  ///< per node: routes using it as an intermediate
  std::uint64_t total_hops = 0;
  std::uint64_t total_intermediates = 0;
  std::uint64_t routed_pairs = 0;  ///< ordered pairs with source != holder

  friend bool operator==(const RouteCounts&, const RouteCounts&) = default;
};

struct LoadingProfile {
  std::vector<std::uint64_t> per_node;
  std::uint64_t total = 0;
};

/// Raw per-seed request tallies; see simulate() for the estimators.
struct SimulationTally {
  std::uint64_t requests = 0;
  std::vector<std::uint64_t> served;     ///< per holder
  std::vector<std::uint64_t> hop_sum;    ///< per source
  std::vector<std::uint64_t> hop_sq_sum; ///< per source
  std::vector<std::uint64_t> forwarded;  ///< per intermediate node
  std::uint64_t total_hop_sq = 0;
  std::uint64_t total_intermediate_sq = 0;

  void merge(const SimulationTally& other);
  friend bool operator==(const SimulationTally&, const SimulationTally&) = default;
};

namespace kernels {

/// Reference implementation: one thread, sources in order.
RouteCounts count_routes_serial(const Topology& topology);

/// OpenMP over source nodes; per-thread counters merged by summation.
RouteCounts count_routes_parallel(const Topology& topology);

/// Draws `requests` i.i.d. uniform (source, holder) pairs from an
/// mt19937_64 stream seeded with `seed` and routes each one.
SimulationTally simulate_tally(const Topology& topology, std::uint64_t requests,
                               std::uint64_t seed);

}  // namespace kernels

struct EnumerationOptions {
  std::uint64_t max_nodes = 4096;
};

/// Throws ResourceLimit when the topology exceeds options.max_nodes.
RouteCounts count_routes(const Topology& topology, const EnumerationOptions& options = {});

/// L_i for every node.
LoadingProfile node_loading(const Topology& topology, const EnumerationOptions& options = {});

/// S_i = s/N, A_i = a sum_j t_ij / N, R_i = r L_i / N^2, M_i = m deg(i).
CostReport enumerate_exact(const Topology& topology, const CostParams& params,
                           const EnumerationOptions& options = {});

/// Closed-form per-node report. Throws Unsupported for de Bruijn graphs
/// (only bounds exist) and for tori with n_side < 3.
CostReport analytic_report(const Topology& topology, const CostParams& params);

/// Monte Carlo estimate from `requests` draws per seed, pooled over seeds.
/// With R total requests the per-node estimators are
///   S_i = s * served_i / R
///   A_i = a * N * hop_sum_i / R
///   R_i = r * forwarded_i / R
/// which are unbiased for the exact values. Seeds run in parallel.
CostReport simulate(const Topology& topology, const CostParams& params, std::uint64_t requests,
                    std::span<const std::uint64_t> seeds);
CostReport simulate(const Topology& topology, const CostParams& params, std::uint64_t requests,
                    std::uint64_t seed);

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;
  /// Judge per-node deviations; otherwise only the network means.
  bool per_node = true;
};

struct ComponentDeviation {
  Component component = Component::Service;
  double max_abs = 0.0;   ///< over nodes
  double max_rel = 0.0;   ///< over nodes
  double mean_abs = 0.0;  ///< of the network means
  double mean_rel = 0.0;
  bool within = true;
};

struct MethodComparison {
  Method reference = Method::Exact;
  Method candidate = Method::Exact;
  std::vector<ComponentDeviation> components;
  bool within = true;
};

struct ComparisonTable {
  std::vector<MethodComparison> rows;
  bool all_within() const;
};

/// Compares every report against the first one. A deviation is within
/// tolerance when it is below either the absolute or the relative bound.
/// Throws InvalidParameter when geometries, params or node sets differ.
ComparisonTable compare(std::span<const CostReport> reports, const Tolerance& tolerance = {});

/// |x - y| / max(|x|, |y|), 0 when both are 0.
double relative_difference(double x, double y);

}  // namespace dhtcost
