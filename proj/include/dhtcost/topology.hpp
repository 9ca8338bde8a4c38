#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dhtcost/geometry.hpp"
#include "dhtcost/routers.hpp"

namespace dhtcost {

struct BuildOptions {
  std::uint64_t max_nodes = 1'000'000;
};

/// Immutable node set, neighbor tables and canonical router for one geometry.
class Topology {
 public:
  const GeometrySpec& spec() const { return spec_; }
  std::uint32_t node_count() const { return node_count_; }
  bool contains(NodeId node) const { return node.value < node_count_; }

  /// Distinct out-neighbors in table order; self-loops are never listed.
  /// Tables are generated on demand rather than stored.
  std::vector<NodeId> out_neighbors(NodeId node) const;
  void out_neighbors_into(NodeId node, std::vector<NodeId>& neighbors) const;

  /// Neighbor table size, without generating the table.
  std::uint32_t degree(NodeId node) const;

  /// Writes the canonical shortest route src -> dst (inclusive) into `hops`,
  /// replacing its contents. Nodes must be valid; not range checked.
  void route_into(NodeId src, NodeId dst, std::vector<NodeId>& hops) const;

  /// Hop count of the canonical route without materializing it.
  std::uint32_t route_length(NodeId src, NodeId dst) const;

  /// Calls fn(router) with the concrete router of this geometry, so hot
  /// loops can walk routes without per-pair dispatch.
  template <class Fn>
  decltype(auto) with_router(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), router_);
  }

 private:
  friend Topology build(const GeometrySpec& spec, const BuildOptions& options);
  Topology() = default;

  GeometrySpec spec_;
  std::uint32_t node_count_ = 0;
  routing::Router router_;
  std::vector<std::uint32_t> powers_;  // base^k of the identifier digits
};

/// Throws InvalidParameter on bad shape parameters and ResourceLimit when
/// the node count exceeds options.max_nodes.
Topology build(const GeometrySpec& spec, const BuildOptions& options = {});

struct Route {
  NodeId source;
  NodeId destination;
  std::vector<NodeId> hops;

  std::size_t length() const { return hops.empty() ? 0 : hops.size() - 1; }
};

/// Deterministic shortest route per geometry:
///   star      direct when the center is an endpoint, else via node 0
///   de Bruijn unique maximal-overlap string route
///   torus     dimension order, shorter way round, positive on antipodal ties
///   Plaxton   most significant mismatched digit first
///   Chord     greedy largest power-of-two jump
Route canonical_route(const Topology& topology, NodeId src, NodeId dst);

/// Directed shortest-path hop count by BFS; nullopt means unreachable.
std::optional<std::uint32_t> bfs_distance(const Topology& topology, NodeId src, NodeId dst);

inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

/// All BFS distances from `src`, kUnreachable for nodes with no path.
std::vector<std::uint32_t> bfs_distances_from(const Topology& topology, NodeId src);

std::uint32_t degree(const Topology& topology, NodeId node);

/// True iff every digit of a de Bruijn identifier is the same symbol.
/// Throws InvalidParameter for other geometries or out-of-range nodes.
bool is_repeated_symbol_node(const GeometrySpec& spec, NodeId node);

}  // namespace dhtcost
