#pragma once

// Test-only reference implementations. They work on explicit digit /
// coordinate vectors and BFS, never on the library routers, so they can
// check the routers and the counting kernels independently.

#include <cstdint>
#include <vector>

#include "dhtcost/geometry.hpp"
#include "dhtcost/topology.hpp"

namespace oracle {

using dhtcost::GeometrySpec;
using dhtcost::NodeId;

using Digits = std::vector<std::uint32_t>;

inline Digits digits_of(const GeometrySpec& spec, NodeId node) {
  return dhtcost::node_digits(spec, node);
}

inline NodeId node_of(const GeometrySpec& spec, const Digits& digits) {
  return dhtcost::node_from_digits(spec, digits);
}

/// Canonical route built by manipulating identifier strings.
inline std::vector<NodeId> route(const GeometrySpec& spec, NodeId src, NodeId dst) {
  std::vector<NodeId> hops{src};
  if (src == dst) return hops;

  if (std::holds_alternative<dhtcost::Star>(spec)) {
    if (src.value != 0 && dst.value != 0) hops.push_back(NodeId{0});
    hops.push_back(dst);
    return hops;
  }

  const auto s = digits_of(spec, src);
  const auto t = digits_of(spec, dst);
  const auto len = s.size();

  if (const auto* g = std::get_if<dhtcost::DeBruijn>(&spec)) {
    (void)g;
    std::size_t overlap = 0;
    for (std::size_t l = len - 1; l > 0; --l) {
      if (std::equal(s.end() - static_cast<long>(l), s.end(), t.begin())) {
        overlap = l;
        break;
      }
    }
    Digits word = s;
    word.insert(word.end(), t.begin() + static_cast<long>(overlap), t.end());
    for (std::size_t h = 1; h + len <= word.size(); ++h) {
      hops.push_back(node_of(spec, Digits(word.begin() + static_cast<long>(h),
                                          word.begin() + static_cast<long>(h + len))));
    }
    return hops;
  }

  if (const auto* g = std::get_if<dhtcost::Torus>(&spec)) {
    const auto n = static_cast<std::int64_t>(g->n_side);
    Digits cur = s;
    for (std::size_t c = 0; c < len; ++c) {
      std::int64_t forward = (static_cast<std::int64_t>(t[c]) - cur[c] + n) % n;
      const std::int64_t backward = n - forward;
      // Shorter way round; forward on ties.
      const bool go_forward = forward <= backward;
      const auto steps = go_forward ? forward : backward;
      for (std::int64_t k = 0; k < steps && forward != 0; ++k) {
        cur[c] = static_cast<std::uint32_t>((cur[c] + (go_forward ? 1 : n - 1)) % n);
        hops.push_back(node_of(spec, cur));
      }
    }
    return hops;
  }

  if (std::holds_alternative<dhtcost::PlaxtonTree>(spec)) {
    Digits cur = s;
    for (std::size_t p = 0; p < len; ++p) {
      if (cur[p] != t[p]) {
        cur[p] = t[p];
        hops.push_back(node_of(spec, cur));
      }
    }
    return hops;
  }

  // Chord: take the largest finger that does not overshoot.
  const auto& chord = std::get<dhtcost::ChordRing>(spec);
  const std::uint64_t n = std::uint64_t{1} << chord.d;
  std::uint64_t cur = src.value;
  std::uint64_t remaining = (dst.value + n - src.value) % n;
  while (remaining > 0) {
    for (std::int64_t m = chord.d - 1; m >= 0; --m) {
      const std::uint64_t finger = std::uint64_t{1} << m;
      if (finger <= remaining) {
        cur = (cur + finger) % n;
        remaining -= finger;
        hops.push_back(NodeId{static_cast<std::uint32_t>(cur)});
        break;
      }
    }
  }
  return hops;
}

struct Counts {
  std::vector<std::uint64_t> hop_sum;    // BFS distances summed per source
  std::vector<std::uint64_t> loading;    // via oracle routes
  std::vector<std::uint32_t> max_route;  // longest oracle route from each source
};

/// O(N^2 D) brute force; BFS gives the distances, oracle routes the loading.
inline Counts counts(const dhtcost::Topology& topo) {
  const auto& spec = topo.spec();
  const auto n = topo.node_count();
  Counts out{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0),
             std::vector<std::uint32_t>(n, 0)};
  for (std::uint32_t s = 0; s < n; ++s) {
    const auto dist = dhtcost::bfs_distances_from(topo, NodeId{s});
    for (std::uint32_t t = 0; t < n; ++t) {
      out.hop_sum[s] += dist[t];
      if (s == t) continue;
      const auto hops = route(spec, NodeId{s}, NodeId{t});
      for (std::size_t h = 1; h + 1 < hops.size(); ++h) ++out.loading[hops[h].value];
    }
  }
  return out;
}

/// L_{i,D} from the dimension recursion, starting at the ring loading.
inline std::uint64_t torus_loading_recursive(std::uint32_t d, std::uint64_t n) {
  const std::uint64_t ring = (n / 2 - 1) * ((n + 1) / 2 - 1);
  std::uint64_t loading = ring;
  std::uint64_t slab = 1;  // n^(k-1)
  for (std::uint32_t k = 2; k <= d; ++k) {
    slab *= n;
    loading = n * loading + slab * ring + (n - 1) * (slab - 1);
  }
  return loading;
}

/// l_max as the explicit sum of (k-1) delta^k over k = 1..D minus the D-1
/// periodic strings.
inline std::uint64_t debruijn_l_max_sum(std::uint64_t delta, std::uint32_t d) {
  std::uint64_t total = 0;
  std::uint64_t p = 1;
  for (std::uint32_t k = 1; k <= d; ++k) {
    p *= delta;
    total += (k - 1) * p;
  }
  return total - (d - 1);
}

}  // namespace oracle
