#pragma once

// Per-geometry canonical routers. Each router exposes
//   std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const
// which returns the hop count of the canonical route and calls
// on_intermediate(NodeId) for every node strictly between src and dst, in
// route order. Kernels dispatch on the geometry once and then call walk()
// in their inner loop.

#include <bit>
#include <cstdint>
#include <variant>
#include <vector>

#include "dhtcost/geometry.hpp"

namespace dhtcost::routing {

struct StarRouter {
  template <class F>
  std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const {
    if (src == dst) return 0;
    if (src.value == 0 || dst.value == 0) return 1;
    on_intermediate(NodeId{0});
    return 2;
  }
};

struct DeBruijnRouter {
  std::uint32_t base = 2;
  std::uint32_t length = 1;
  std::uint32_t node_count = 2;
  std::vector<std::uint32_t> powers;  // base^k, k = 0..length

  // Largest l < D with suffix_l(src) == prefix_l(dst).
  std::uint32_t overlap(NodeId src, NodeId dst) const {
    for (std::uint32_t l = length - 1; l > 0; --l) {
      if (src.value % powers[l] == dst.value / powers[length - l]) return l;
    }
    return 0;
  }

  template <class F>
  std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const {
    if (src == dst) return 0;
    const auto shared = overlap(src, dst);
    const auto hops = length - shared;
    const auto keep = powers[length - 1];
    std::uint32_t current = src.value;
    // Shift in the symbols of dst after the overlap; the last shift lands on dst.
    for (std::uint32_t h = shared; h + 1 < length; ++h) {
      const auto symbol = dst.value / powers[length - 1 - h] % base;
      current = current % keep * base + symbol;
      on_intermediate(NodeId{current});
    }
    return hops;
  }
};

struct TorusRouter {
  std::uint32_t side = 3;
  std::uint32_t dims = 1;
  std::vector<std::uint32_t> weights;  // weight of coordinate c (MSB first)

  template <class F>
  std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const {
    std::uint32_t current = src.value;
    std::uint32_t hops = 0;
    for (std::uint32_t c = 0; c < dims; ++c) {
      const auto weight = weights[c];
      const auto sc = current / weight % side;
      const auto dc = dst.value / weight % side;
      const auto diff = (dc + side - sc) % side;
      if (diff == 0) continue;
      const bool forward = 2 * diff <= side;
      const auto steps = forward ? diff : side - diff;
      auto coord = sc;
      for (std::uint32_t k = 0; k < steps; ++k) {
        if (hops > 0) on_intermediate(NodeId{current});
        const auto next = forward ? (coord + 1 == side ? 0 : coord + 1)
                                  : (coord == 0 ? side - 1 : coord - 1);
        current = current - coord * weight + next * weight;
        coord = next;
        ++hops;
      }
    }
    return hops;
  }
};

struct PlaxtonRouter {
  std::uint32_t base = 2;
  std::uint32_t length = 1;
  std::vector<std::uint32_t> powers;

  template <class F>
  std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const {
    std::uint32_t current = src.value;
    std::uint32_t hops = 0;
    for (std::uint32_t p = length; p-- > 0;) {
      const auto weight = powers[p];
      const auto sd = current / weight % base;
      const auto dd = dst.value / weight % base;
      if (sd != dd) {
        if (hops > 0) on_intermediate(NodeId{current});
        current = current - sd * weight + dd * weight;
        ++hops;
      }
    }
    return hops;
  }
};

struct ChordRouter {
  std::uint32_t mask = 1;  // N - 1

  template <class F>
  std::uint32_t walk(NodeId src, NodeId dst, F&& on_intermediate) const {
    auto remaining = (dst.value - src.value) & mask;
    std::uint32_t current = src.value;
    std::uint32_t hops = 0;
    while (remaining != 0) {
      if (hops > 0) on_intermediate(NodeId{current});
      const auto jump = std::bit_floor(remaining);
      current = (current + jump) & mask;
      remaining -= jump;
      ++hops;
    }
    return hops;
  }
};

using Router = std::variant<StarRouter, DeBruijnRouter, TorusRouter, PlaxtonRouter, ChordRouter>;

Router make_router(const GeometrySpec& spec);

}  // namespace dhtcost::routing
