#pragma once

#include <cstdint>

namespace dhtcost {

/// Unit prices of the participation cost model. All four are constant across
/// nodes and keys.
struct CostParams {
  double s = 0.0;  ///< service, per request served
  double a = 0.0;  ///< access, per hop per request issued
  double r = 0.0;  ///< routing, per request forwarded
  double m = 0.0;  ///< maintenance, per neighbor table entry

  /// Throws InvalidParameter if any price is negative or not finite.
  void validate() const;

  friend bool operator==(const CostParams&, const CostParams&) = default;
};

/// Per-node cost components S_i, A_i, R_i, M_i.
struct CostBreakdown {
  double service = 0.0;
  double access = 0.0;
  double routing = 0.0;
  double maintenance = 0.0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

CostBreakdown operator*(double factor, const CostBreakdown& b);

/// Uniform request model: every node holds 1/N of the key mass and issues
/// 1/N of the requests. Keys are collapsed onto their holder.
class RequestModel {
 public:
  explicit RequestModel(std::uint64_t node_count);

  std::uint64_t node_count() const { return node_count_; }
  double key_mass(std::uint64_t /*node*/) const { return 1.0 / static_cast<double>(node_count_); }
  double source_probability(std::uint64_t /*node*/) const {
    return 1.0 / static_cast<double>(node_count_);
  }

 private:
  std::uint64_t node_count_;
};

/// S_i = s / N. Throws InvalidParameter when n == 0.
double service_cost(const CostParams& params, std::uint64_t n);

/// M_i = m * deg(i).
double maintenance_cost(const CostParams& params, std::uint64_t degree);

/// C_i = S_i + A_i + R_i + M_i.
double total_cost(const CostBreakdown& breakdown);

}  // namespace dhtcost
