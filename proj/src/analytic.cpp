#include "dhtcost/analytic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dhtcost/error.hpp"

namespace dhtcost::analytic {
namespace {

__extension__ typedef __int128 wide;

wide mul(wide x, wide y) {
  wide out;
  if (__builtin_mul_overflow(x, y, &out)) throw ResourceLimit("integer overflow in closed form");
  return out;
}

wide add(wide x, wide y) {
  wide out;
  if (__builtin_add_overflow(x, y, &out)) throw ResourceLimit("integer overflow in closed form");
  return out;
}

wide power(wide base, std::uint32_t exponent) {
  wide result = 1;
  for (std::uint32_t k = 0; k < exponent; ++k) result = mul(result, base);
  return result;
}

std::uint64_t to_u64(wide value) {
  if (value < 0 || value > static_cast<wide>(std::numeric_limits<std::uint64_t>::max())) {
    throw ResourceLimit("closed-form value outside the 64-bit range");
  }
  return static_cast<std::uint64_t>(value);
}

void require_digits(std::uint32_t delta, std::uint32_t d, const char* what) {
  if (delta < 2) throw InvalidParameter(std::string(what) + " needs delta >= 2");
  if (d < 1) throw InvalidParameter(std::string(what) + " needs d >= 1");
}

}  // namespace

StarBreakdown star_breakdown(std::uint64_t n, const CostParams& params) {
  params.validate();
  if (n < 2) throw InvalidParameter("star cost formulas need n >= 2");
  const double nn = static_cast<double>(n);
  StarBreakdown out;
  out.center.service = params.s / nn;
  out.center.access = params.a * (nn - 1.0) / nn;
  out.center.routing = params.r * (nn - 1.0) * (nn - 2.0) / (nn * nn);
  out.center.maintenance = params.m * (nn - 1.0);
  out.peripheral.service = params.s / nn;
  out.peripheral.access = params.a * (2.0 * nn - 3.0) / nn;
  out.peripheral.routing = 0.0;
  out.peripheral.maintenance = params.m;
  return out;
}

StarCosts star_costs(std::uint64_t n, const CostParams& params) {
  const auto b = star_breakdown(n, params);
  return {total_cost(b.center), total_cost(b.peripheral)};
}

double star_cost_gap_polynomial(std::uint64_t n, const CostParams& params) {
  const double nn = static_cast<double>(n);
  return (nn - 2.0) * (params.m * nn * nn - (params.a - params.r) * nn - params.r);
}

std::optional<std::uint64_t> EquilibriumSize::integer_n0() const {
  if (kind != Kind::Candidate || !is_integer) return std::nullopt;
  return static_cast<std::uint64_t>(std::llround(n0_real));
}

const char* to_string(EquilibriumSize::Kind kind) {
  switch (kind) {
    case EquilibriumSize::Kind::AllN:
      return "all_n";
    case EquilibriumSize::Kind::NoneBesidesTwo:
      return "none_besides_two";
    case EquilibriumSize::Kind::Candidate:
      return "candidate";
  }
  return "unknown";
}

EquilibriumSize star_equilibrium_size(const CostParams& params) {
  params.validate();
  const double a = params.a;
  const double r = params.r;
  const double m = params.m;
  using Kind = EquilibriumSize::Kind;

  if (m == 0.0 && r == 0.0 && a == 0.0) return {Kind::AllN, 0.0, false};

  double root = 0.0;
  if (m == 0.0) {
    if (r == a) return {Kind::NoneBesidesTwo, 0.0, false};
    root = r / (r - a);
  } else {
    const double half = (a - r) / (2.0 * m);
    root = half + std::sqrt(half * half + r / m);
  }
  // Non-positive roots are not node counts.
  if (!(root > 0.0)) return {Kind::NoneBesidesTwo, root, false};

  const double nearest = std::round(root);
  const bool integral = std::abs(root - nearest) <= 1e-9 * std::max(1.0, root);
  return {Kind::Candidate, root, integral};
}

std::uint64_t debruijn_l_max(std::uint32_t delta, std::uint32_t d) {
  require_digits(delta, d, "de Bruijn l_max");
  const wide dl = delta;
  const wide dd = d;
  const wide dm1 = dl - 1;
  // ((D-1)(delta^(D+2) - (delta-1)^2) - D delta^(D+1) + delta^2) / (delta-1)^2
  const wide first = mul(dd - 1, add(power(dl, d + 2), -mul(dm1, dm1)));
  const wide numerator = add(add(first, -mul(dd, power(dl, d + 1))), mul(dl, dl));
  const wide denominator = dm1 * dm1;
  if (numerator % denominator != 0) throw Error("l_max numerator is not divisible");
  return to_u64(numerator / denominator);
}

DeBruijnBounds debruijn_bounds(std::uint32_t delta, std::uint32_t d, const CostParams& params) {
  require_digits(delta, d, "de Bruijn bounds");
  params.validate();
  const wide dl = delta;
  const wide dd = d;
  const wide dm1 = dl - 1;
  const wide nodes = power(dl, d);
  const double n = static_cast<double>(nodes);

  DeBruijnBounds out;
  out.l_max = debruijn_l_max(delta, d);

  // D delta^(D+1) - (D+1) delta^D + 1
  const wide amax_num = add(add(mul(dd, power(dl, d + 1)), -mul(dd + 1, nodes)), 1);
  out.a_max = params.a * static_cast<double>(amax_num) / (n * static_cast<double>(dm1));

  // D delta^D + D/(delta-1) - delta(delta^D - 1)/(delta-1)^2, over (delta-1)^2
  const wide amin_num =
      add(add(mul(mul(dd, nodes), dm1 * dm1), mul(dd, dm1)), -mul(dl, nodes - 1));
  out.a_min = params.a / n * (static_cast<double>(amin_num) / static_cast<double>(dm1 * dm1));

  out.r_max = params.r * static_cast<double>(out.l_max) / (n * n);
  return out;
}

std::uint64_t torus_ring_loading(std::uint64_t n) {
  if (n < 2) throw InvalidParameter("ring loading needs n >= 2");
  return (n / 2 - 1) * ((n + 1) / 2 - 1);
}

std::uint64_t torus_loading(std::uint32_t d, std::uint32_t n_side) {
  if (d < 1) throw InvalidParameter("torus needs d >= 1");
  if (n_side < 2) throw InvalidParameter("torus needs n_side >= 2");
  const wide n = n_side;
  const wide ring = static_cast<wide>(torus_ring_loading(n_side));
  // n^(D-1) (D (n - 1 + L_1) - n) + 1
  const wide inner = add(mul(d, add(n - 1, ring)), -n);
  return to_u64(add(mul(power(n, d - 1), inner), 1));
}

AccessRouting torus_costs(std::uint32_t d, std::uint32_t n_side, const CostParams& params) {
  if (d < 1) throw InvalidParameter("torus needs d >= 1");
  if (n_side < 2) throw InvalidParameter("torus needs n_side >= 2");
  if (n_side < 3) {
    throw Unsupported("torus closed forms need n_side >= 3 (parallel edges collapse at 2)");
  }
  params.validate();
  const double n = std::pow(static_cast<double>(n_side), static_cast<double>(d));
  AccessRouting out;
  out.access = params.a * (static_cast<double>(d) / 4.0) * static_cast<double>(n_side);
  out.routing = params.r * static_cast<double>(torus_loading(d, n_side)) / (n * n);
  return out;
}

std::vector<std::uint64_t> plaxton_distance_counts(std::uint32_t delta, std::uint32_t d) {
  require_digits(delta, d, "Plaxton distance distribution");
  std::vector<std::uint64_t> counts(d + 1);
  wide binomial = 1;
  for (std::uint32_t k = 0; k <= d; ++k) {
    counts[k] = to_u64(mul(binomial, power(delta - 1, k)));
    binomial = mul(binomial, d - k) / (k + 1);
  }
  return counts;
}

std::vector<double> plaxton_distance_pmf(std::uint32_t delta, std::uint32_t d) {
  const auto counts = plaxton_distance_counts(delta, d);
  const double n = static_cast<double>(to_u64(power(delta, d)));
  std::vector<double> pmf;
  pmf.reserve(counts.size());
  for (auto c : counts) pmf.push_back(static_cast<double>(c) / n);
  return pmf;
}

std::uint64_t plaxton_loading(std::uint32_t delta, std::uint32_t d) {
  require_digits(delta, d, "Plaxton loading");
  const wide dl = delta;
  const wide factor = static_cast<wide>(d) * (dl - 1) - dl;
  return to_u64(add(mul(power(dl, d - 1), factor), 1));
}

AccessRouting plaxton_costs(std::uint32_t delta, std::uint32_t d, const CostParams& params) {
  require_digits(delta, d, "Plaxton costs");
  params.validate();
  const double n = static_cast<double>(to_u64(power(delta, d)));
  const double dl = static_cast<double>(delta);
  AccessRouting out;
  out.access = params.a * static_cast<double>(d) * (dl - 1.0) / dl;
  out.routing = params.r * static_cast<double>(plaxton_loading(delta, d)) / (n * n);
  return out;
}

AccessRouting chord_costs(std::uint32_t d, const CostParams& params) {
  if (d < 1) throw InvalidParameter("Chord ring needs d >= 1");
  return plaxton_costs(2, d, params);
}

}  // namespace dhtcost::analytic
