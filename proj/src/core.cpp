#include "dhtcost/core.hpp"

#include <cmath>
#include <string>

#include "dhtcost/error.hpp"

namespace dhtcost {

void CostParams::validate() const {
  auto check = [](double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
      throw InvalidParameter(std::string("cost price '") + name +
                             "' must be finite and non-negative");
    }
  };
  check(s, "s");
  check(a, "a");
  check(r, "r");
  check(m, "m");
}

CostBreakdown operator*(double factor, const CostBreakdown& b) {
  return {factor * b.service, factor * b.access, factor * b.routing, factor * b.maintenance};
}

RequestModel::RequestModel(std::uint64_t node_count) : node_count_(node_count) {
  if (node_count == 0) throw InvalidParameter("request model needs at least one node");
}

double service_cost(const CostParams& params, std::uint64_t n) {
  if (n == 0) throw InvalidParameter("service cost undefined for an empty network");
  return params.s / static_cast<double>(n);
}

double maintenance_cost(const CostParams& params, std::uint64_t degree) {
  return params.m * static_cast<double>(degree);
}

double total_cost(const CostBreakdown& b) {
  return b.service + b.access + b.routing + b.maintenance;
}

}  // namespace dhtcost
