#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhtcost/core.hpp"

// Closed-form costs, bounds and equilibrium results for the five geometries.
// Integer-valued quantities (loadings, route counts) are computed exactly;
// prices are applied in floating point at the end.
namespace dhtcost::analytic {

struct StarCosts {
  double center_cost = 0.0;
  double peripheral_cost = 0.0;
};

/// C_0 and C_i (i > 0) of an n-node star. Requires n >= 2.
StarCosts star_costs(std::uint64_t n, const CostParams& params);

/// Component-wise version of star_costs.
struct StarBreakdown {
  CostBreakdown center;
  CostBreakdown peripheral;
};
StarBreakdown star_breakdown(std::uint64_t n, const CostParams& params);

/// N^2 (C_0 - C_i) = (N - 2)(m N^2 - (a - r) N - r), evaluated directly.
double star_cost_gap_polynomial(std::uint64_t n, const CostParams& params);

/// Node count at which the center and a peripheral node pay the same.
struct EquilibriumSize {
  enum class Kind {
    AllN,            ///< equal for every N (m = r = a = 0)
    NoneBesidesTwo,  ///< only the universal N = 2 solution
    Candidate,       ///< N = 2 or N = n0_real, if n0_real is an integer
  };
  Kind kind = Kind::AllN;
  double n0_real = 0.0;
  bool is_integer = false;

  /// The root rounded to an integer, when is_integer holds.
  std::optional<std::uint64_t> integer_n0() const;
};

const char* to_string(EquilibriumSize::Kind kind);

EquilibriumSize star_equilibrium_size(const CostParams& params);

/// Upper bound on the number of routes through one de Bruijn node.
/// Throws ResourceLimit when the value does not fit in 64 bits.
std::uint64_t debruijn_l_max(std::uint32_t delta, std::uint32_t d);

struct DeBruijnBounds {
  double a_min = 0.0;
  double a_max = 0.0;
  double r_max = 0.0;
  std::uint64_t l_max = 0;
};

DeBruijnBounds debruijn_bounds(std::uint32_t delta, std::uint32_t d, const CostParams& params);

/// Routes through each node of an n-ring: (floor(n/2) - 1)(ceil(n/2) - 1).
std::uint64_t torus_ring_loading(std::uint64_t n);

/// Routes through each node of a d-torus with n_side nodes per ring.
std::uint64_t torus_loading(std::uint32_t d, std::uint32_t n_side);

struct AccessRouting {
  double access = 0.0;
  double routing = 0.0;
};

/// access = a (d/4) N^(1/d) (an approximation of the mean distance),
/// routing = r L / N^2. Throws Unsupported when n_side < 3.
AccessRouting torus_costs(std::uint32_t d, std::uint32_t n_side, const CostParams& params);

/// Number of ordered pairs at distance k divided by N: C(d,k)(delta-1)^k.
std::vector<std::uint64_t> plaxton_distance_counts(std::uint32_t delta, std::uint32_t d);
std::vector<double> plaxton_distance_pmf(std::uint32_t delta, std::uint32_t d);

/// Per-node loading delta^(d-1) (d(delta-1) - delta) + 1.
std::uint64_t plaxton_loading(std::uint32_t delta, std::uint32_t d);

AccessRouting plaxton_costs(std::uint32_t delta, std::uint32_t d, const CostParams& params);
AccessRouting chord_costs(std::uint32_t d, const CostParams& params);

}  // namespace dhtcost::analytic
