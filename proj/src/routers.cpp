#include "dhtcost/routers.hpp"

namespace dhtcost::routing {
namespace {

std::vector<std::uint32_t> powers_of(std::uint32_t base, std::uint32_t length) {
  std::vector<std::uint32_t> powers(length + 1, 1);
  for (std::uint32_t k = 1; k <= length; ++k) powers[k] = powers[k - 1] * base;
  return powers;
}

}  // namespace

Router make_router(const GeometrySpec& spec) {
  const auto n = static_cast<std::uint32_t>(node_count(spec));
  if (std::holds_alternative<Star>(spec)) return StarRouter{};
  if (const auto* g = std::get_if<DeBruijn>(&spec)) {
    return DeBruijnRouter{g->delta, g->d, n, powers_of(g->delta, g->d)};
  }
  if (const auto* g = std::get_if<Torus>(&spec)) {
    auto powers = powers_of(g->n_side, g->d);
    std::vector<std::uint32_t> weights(g->d);
    for (std::uint32_t c = 0; c < g->d; ++c) weights[c] = powers[g->d - 1 - c];
    return TorusRouter{g->n_side, g->d, std::move(weights)};
  }
  if (const auto* g = std::get_if<PlaxtonTree>(&spec)) {
    return PlaxtonRouter{g->delta, g->d, powers_of(g->delta, g->d)};
  }
  return ChordRouter{n - 1};
}

}  // namespace dhtcost::routing
