#include "dhtcost/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dhtcost/error.hpp"

namespace dhtcost {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::vector<NodeId> Topology::out_neighbors(NodeId node) const {
  std::vector<NodeId> neighbors;
  out_neighbors_into(node, neighbors);
  return neighbors;
}

void Topology::out_neighbors_into(NodeId node, std::vector<NodeId>& out) const {
  out.clear();
  const std::uint32_t i = node.value;
  const auto n = node_count_;
  std::visit(overloaded{
                 [&](const Star&) {
                   if (i == 0) {
                     for (std::uint32_t j = 1; j < n; ++j) out.push_back(NodeId{j});
                   } else {
                     out.push_back(NodeId{0});
                   }
                 },
                 [&](const DeBruijn& g) {
                   const auto shifted = i % powers_[g.d - 1] * g.delta;
                   for (std::uint32_t x = 0; x < g.delta; ++x) {
                     if (shifted + x != i) out.push_back(NodeId{shifted + x});
                   }
                 },
                 [&](const Torus& g) {
                   for (std::uint32_t c = 0; c < g.d; ++c) {
                     const auto weight = powers_[g.d - 1 - c];
                     const auto coord = i / weight % g.n_side;
                     const auto up = i - coord * weight + (coord + 1) % g.n_side * weight;
                     const auto down =
                         i - coord * weight + (coord + g.n_side - 1) % g.n_side * weight;
                     out.push_back(NodeId{up});
                     if (down != up) out.push_back(NodeId{down});
                   }
                 },
                 [&](const PlaxtonTree& g) {
                   for (std::uint32_t p = g.d; p-- > 0;) {
                     const auto weight = powers_[p];
                     const auto digit = i / weight % g.delta;
                     for (std::uint32_t x = 0; x < g.delta; ++x) {
                       if (x != digit) out.push_back(NodeId{i - digit * weight + x * weight});
                     }
                   }
                 },
                 [&](const ChordRing& g) {
                   for (std::uint32_t k = 0; k < g.d; ++k) {
                     out.push_back(NodeId{(i + (1u << k)) & (n - 1)});
                   }
                 },
             },
             spec_);
}

std::uint32_t Topology::degree(NodeId node) const {
  return std::visit(
      overloaded{
          [&](const Star&) -> std::uint32_t { return node.value == 0 ? node_count_ - 1 : 1; },
          [&](const DeBruijn& g) -> std::uint32_t {
            // Only repeated-symbol nodes (those equal to their own shift) lose the self-loop.
            const auto shifted = node.value % powers_[g.d - 1] * g.delta;
            const bool self = node.value >= shifted && node.value - shifted < g.delta;
            return self ? g.delta - 1 : g.delta;
          },
          [&](const Torus& g) -> std::uint32_t { return g.n_side == 2 ? g.d : 2 * g.d; },
          [&](const PlaxtonTree& g) -> std::uint32_t { return g.d * (g.delta - 1); },
          [&](const ChordRing& g) -> std::uint32_t { return g.d; },
      },
      spec_);
}

std::uint32_t Topology::route_length(NodeId src, NodeId dst) const {
  return with_router([&](const auto& router) { return router.walk(src, dst, [](NodeId) {}); });
}

void Topology::route_into(NodeId src, NodeId dst, std::vector<NodeId>& hops) const {
  hops.clear();
  hops.push_back(src);
  if (src == dst) return;
  with_router([&](const auto& router) {
    router.walk(src, dst, [&](NodeId node) { hops.push_back(node); });
  });
  hops.push_back(dst);
}

Topology build(const GeometrySpec& spec, const BuildOptions& options) {
  const auto count = node_count(spec);
  if (count > options.max_nodes) {
    throw ResourceLimit(describe(spec) + " has " + std::to_string(count) +
                        " nodes, above the configured cap of " +
                        std::to_string(options.max_nodes));
  }

  Topology topo;
  topo.spec_ = spec;
  topo.node_count_ = static_cast<std::uint32_t>(count);
  topo.router_ = routing::make_router(spec);
  const auto layout = digit_layout(spec);
  if (!std::holds_alternative<Star>(spec)) {
    topo.powers_.assign(layout.length + 1, 1);
    for (std::uint32_t k = 1; k <= layout.length; ++k) {
      topo.powers_[k] = topo.powers_[k - 1] * layout.base;
    }
  }
  return topo;
}

Route canonical_route(const Topology& topology, NodeId src, NodeId dst) {
  if (!topology.contains(src) || !topology.contains(dst)) {
    throw InvalidParameter("route endpoint outside " + describe(topology.spec()));
  }
  Route route{src, dst, {}};
  topology.route_into(src, dst, route.hops);
  return route;
}

std::vector<std::uint32_t> bfs_distances_from(const Topology& topology, NodeId src) {
  if (!topology.contains(src)) throw InvalidParameter("BFS source outside topology");
  std::vector<std::uint32_t> dist(topology.node_count(), kUnreachable);
  std::vector<NodeId> frontier{src};
  std::vector<NodeId> next;
  std::vector<NodeId> neighbors;
  dist[src.value] = 0;
  for (std::uint32_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (auto node : frontier) {
      topology.out_neighbors_into(node, neighbors);
      for (auto neighbor : neighbors) {
        if (dist[neighbor.value] == kUnreachable) {
          dist[neighbor.value] = level;
          next.push_back(neighbor);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::optional<std::uint32_t> bfs_distance(const Topology& topology, NodeId src, NodeId dst) {
  if (!topology.contains(dst)) throw InvalidParameter("BFS target outside topology");
  if (src == dst) return 0;
  const auto dist = bfs_distances_from(topology, src);
  if (dist[dst.value] == kUnreachable) return std::nullopt;
  return dist[dst.value];
}

std::uint32_t degree(const Topology& topology, NodeId node) {
  if (!topology.contains(node)) throw InvalidParameter("node outside topology");
  return topology.degree(node);
}

bool is_repeated_symbol_node(const GeometrySpec& spec, NodeId node) {
  if (!std::holds_alternative<DeBruijn>(spec)) {
    throw InvalidParameter("repeated-symbol nodes are only defined for de Bruijn graphs");
  }
  const auto digits = node_digits(spec, node);
  return std::all_of(digits.begin(), digits.end(), [&](auto d) { return d == digits.front(); });
}

}  // namespace dhtcost
