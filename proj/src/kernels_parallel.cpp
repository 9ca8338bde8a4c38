#include <omp.h>

#include "dhtcost/engine.hpp"

namespace dhtcost::kernels {

RouteCounts count_routes_parallel(const Topology& topology) {
  const auto n = topology.node_count();
  RouteCounts counts;
  counts.hop_sum.assign(n, 0);
  counts.loading.assign(n, 0);
  const auto sources = static_cast<std::int64_t>(n);

#pragma omp parallel
  {
    std::vector<std::uint64_t> loading(n, 0);

    topology.with_router([&](const auto& router) {
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t s = 0; s < sources; ++s) {
        const NodeId src{static_cast<std::uint32_t>(s)};
        std::uint64_t sum = 0;
        for (std::uint32_t t = 0; t < n; ++t) {
          sum += router.walk(src, NodeId{t}, [&](NodeId via) { ++loading[via.value]; });
        }
        counts.hop_sum[src.value] = sum;
      }
    });

#pragma omp critical(dhtcost_merge_loading)
    for (std::uint32_t i = 0; i < n; ++i) counts.loading[i] += loading[i];
  }

  for (auto h : counts.hop_sum) counts.total_hops += h;
  for (auto l : counts.loading) counts.total_intermediates += l;
  counts.routed_pairs = static_cast<std::uint64_t>(n) * (n - 1);
  return counts;
}

}  // namespace dhtcost::kernels
