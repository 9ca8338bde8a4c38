#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dhtcost/core.hpp"
#include "dhtcost/engine.hpp"
#include "dhtcost/geometry.hpp"

namespace dhtcost::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInfeasible = 2,
  kResourceGuard = 3,
};

enum class OutputFormat { Csv, Json };

struct SimSettings {
  std::vector<std::uint64_t> seeds;
  std::uint64_t requests = 100'000;
};

inline constexpr std::uint64_t kDefaultMaxExactN = 4096;
inline constexpr const char* kMaxNEnvVar = "DHTCOSTLAB_MAX_N";

/// Enumeration guard: explicit flag, else $DHTCOSTLAB_MAX_N, else 4096.
std::uint64_t resolve_max_exact_n(std::optional<std::uint64_t> flag);

struct RunConfig {
  GeometrySpec geometry;
  CostParams params{0.0, 1.0, 1000.0, 0.0};
  std::vector<Method> methods;
  std::optional<SimSettings> sim;
  OutputFormat format = OutputFormat::Json;
  std::string out_path;  ///< empty: write to the output stream
  std::uint64_t max_exact_n = kDefaultMaxExactN;

  /// Throws InvalidParameter when no method is selected or sim settings
  /// do not match the method selection.
  void validate() const;
};

struct SweepConfig {
  std::vector<std::string> geometries;  ///< star, chord, plaxton, debruijn, torus<D>
  std::uint32_t delta = 2;              ///< base for plaxton / debruijn
  std::uint64_t n_min = 10;
  std::uint64_t n_max = 1000;
  std::vector<std::uint64_t> n_values;  ///< when set, snap each to the nearest feasible N
  CostParams params{0.0, 1.0, 1000.0, 0.0};
  std::vector<Method> methods;
  std::optional<SimSettings> sim;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;
  std::uint64_t max_exact_n = kDefaultMaxExactN;
};

/// One sweep output row (mean over nodes).
struct SweepRow {
  std::string geometry;
  std::uint64_t requested_n = 0;
  std::uint64_t actual_n = 0;
  Method method = Method::Exact;
  double mean_access = 0.0;
  double mean_routing = 0.0;
};

/// Feasible node counts of a sweep geometry token within [lo, hi].
std::vector<std::uint64_t> feasible_sizes(const std::string& geometry, std::uint32_t delta,
                                          std::uint64_t lo, std::uint64_t hi);

/// Geometry spec of a sweep token at feasible node count n.
GeometrySpec sweep_geometry(const std::string& geometry, std::uint32_t delta, std::uint64_t n);

std::vector<SweepRow> run_sweep(const SweepConfig& config, std::ostream& err);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pernode_dump(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_star_equilibrium(const CostParams& params, OutputFormat format, const std::string& out_path,
                         std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; never throws.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dhtcost::cli
