#include <random>

#include "dhtcost/engine.hpp"

namespace dhtcost::kernels {

RouteCounts count_routes_serial(const Topology& topology) {
  const auto n = topology.node_count();
  RouteCounts counts;
  counts.hop_sum.assign(n, 0);
  counts.loading.assign(n, 0);
  std::vector<NodeId> hops;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint64_t sum = 0;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (s == t) continue;
      topology.route_into(NodeId{s}, NodeId{t}, hops);
      sum += hops.size() - 1;
      for (std::size_t h = 1; h + 1 < hops.size(); ++h) ++counts.loading[hops[h].value];
    }
    counts.hop_sum[s] = sum;
    counts.total_hops += sum;
  }
  for (auto l : counts.loading) counts.total_intermediates += l;
  counts.routed_pairs = static_cast<std::uint64_t>(n) * (n - 1);
  return counts;
}

SimulationTally simulate_tally(const Topology& topology, std::uint64_t requests,
                               std::uint64_t seed) {
  const auto n = topology.node_count();
  SimulationTally tally;
  tally.requests = requests;
  tally.served.assign(n, 0);
  tally.hop_sum.assign(n, 0);
  tally.hop_sq_sum.assign(n, 0);
  tally.forwarded.assign(n, 0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  topology.with_router([&](const auto& router) {
    for (std::uint64_t k = 0; k < requests; ++k) {
      const NodeId source{pick(rng)};
      const NodeId holder{pick(rng)};
      std::uint64_t intermediates = 0;
      const std::uint64_t length = router.walk(source, holder, [&](NodeId via) {
        ++tally.forwarded[via.value];
        ++intermediates;
      });
      ++tally.served[holder.value];
      tally.hop_sum[source.value] += length;
      tally.hop_sq_sum[source.value] += length * length;
      tally.total_hop_sq += length * length;
      tally.total_intermediate_sq += intermediates * intermediates;
    }
  });
  return tally;
}

}  // namespace dhtcost::kernels
