#include "dhtcost/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dhtcost/analytic.hpp"
#include "dhtcost/error.hpp"
#include "dhtcost/report_io.hpp"
#include "dhtcost/topology.hpp"

namespace dhtcost::cli {
namespace {

using json = nlohmann::ordered_json;

// Node count beyond the build cap: the geometry itself is infeasible.
class InfeasibleSize : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr std::uint64_t kDefaultBuildCap = 1'000'000;

Topology build_checked(const GeometrySpec& spec, std::uint64_t max_exact_n) {
  try {
    return build(spec, BuildOptions{std::max(kDefaultBuildCap, max_exact_n)});
  } catch (const ResourceLimit& e) {
    throw InfeasibleSize(e.what());
  }
}

bool has_method(const std::vector<Method>& methods, Method m) {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

std::vector<std::uint64_t> default_seeds() {
  std::vector<std::uint64_t> seeds(10);
  for (std::size_t k = 0; k < seeds.size(); ++k) seeds[k] = k + 1;
  return seeds;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidParameter("cannot open output file '" + path + "'");
  file << content;
  if (!file) throw InvalidParameter("failed writing output file '" + path + "'");
}

Tolerance tolerance_for(Method reference, Method candidate) {
  if (reference == Method::Simulated || candidate == Method::Simulated) {
    return Tolerance{0.0, 0.01, false};
  }
  return Tolerance{1e-12, 1e-12, true};
}

bool is_torus_side_two(const GeometrySpec& spec) {
  const auto* torus = std::get_if<Torus>(&spec);
  return torus != nullptr && torus->n_side == 2;
}

// Runs the selected methods in the fixed order analytic, exact, simulated.
std::vector<CostReport> evaluate(const GeometrySpec& spec, const CostParams& params,
                                 const std::vector<Method>& methods,
                                 const std::optional<SimSettings>& sim, std::uint64_t max_exact_n,
                                 std::vector<std::string>& warnings) {
  const auto topology = build_checked(spec, max_exact_n);
  if (is_torus_side_two(spec)) {
    warnings.push_back("torus with n_side = 2: ring edges collapse; closed forms not claimed");
  }
  std::vector<CostReport> reports;
  if (has_method(methods, Method::Analytic)) {
    if (std::holds_alternative<DeBruijn>(spec)) {
      warnings.push_back("de Bruijn graphs have closed-form bounds only; see \"bounds\"");
    } else if (is_torus_side_two(spec)) {
      warnings.push_back("analytic method skipped for torus with n_side = 2");
    } else {
      reports.push_back(analytic_report(topology, params));
    }
  }
  if (has_method(methods, Method::Exact)) {
    reports.push_back(enumerate_exact(topology, params, EnumerationOptions{max_exact_n}));
  }
  if (has_method(methods, Method::Simulated)) {
    reports.push_back(simulate(topology, params, sim->requests, sim->seeds));
  }
  return reports;
}

std::string two_decimals(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

void print_summary(std::ostream& out, const GeometrySpec& spec, const CostParams& params,
                   const std::vector<CostReport>& reports) {
  out << describe(spec) << "  N=" << node_count(spec) << "  s=" << params.s << " a=" << params.a
      << " r=" << params.r << " m=" << params.m << '\n';
  out << std::left << std::setw(11) << "method" << std::right;
  for (const char* h : {"A_min", "A_max", "A_mean", "R'_min", "R_max", "R_mean", "C_mean"}) {
    out << std::setw(10) << h;
  }
  out << '\n';
  for (const auto& r : reports) {
    const auto& g = r.aggregates;
    out << std::left << std::setw(11) << to_string(r.method) << std::right;
    for (double v : {g[Component::Access].min, g[Component::Access].max,
                     g[Component::Access].mean, g.second_min_routing, g[Component::Routing].max,
                     g[Component::Routing].mean, g[Component::Total].mean}) {
      out << std::setw(10) << two_decimals(v);
    }
    out << '\n';
  }
}

json comparisons_json(const std::vector<CostReport>& reports) {
  json rows = json::array();
  if (reports.size() < 2) return rows;
  // Exact enumeration is the reference when present.
  std::size_t ref = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (reports[k].method == Method::Exact) ref = k;
  }
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k == ref) continue;
    const CostReport pair[] = {reports[ref], reports[k]};
    const auto table = compare(pair, tolerance_for(reports[ref].method, reports[k].method));
    for (auto& row : io::to_json(table)) rows.push_back(row);
  }
  return rows;
}

std::string summary_csv(const std::vector<CostReport>& reports) {
  std::ostringstream out;
  out << "method,component,mean,min,max,second_min\n";
  for (const auto& r : reports) {
    for (auto c : kComponents) {
      const auto& s = r.aggregates[c];
      out << to_string(r.method) << ',' << to_string(c) << ',' << io::format_double(s.mean) << ','
          << io::format_double(s.min) << ',' << io::format_double(s.max) << ',';
      if (c == Component::Routing) out << io::format_double(r.aggregates.second_min_routing);
      out << '\n';
    }
  }
  return out.str();
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InfeasibleSize& e) {
    err << "error: infeasible geometry: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ResourceLimit& e) {
    err << "error: resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const InvalidParameter& e) {
    err << "error: invalid parameter: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
}

std::uint64_t integer_root(std::uint64_t n, std::uint32_t k) {
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
  for (std::uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
    std::uint64_t p = 1;
    for (std::uint32_t i = 0; i < k; ++i) p *= c;
    if (p == n) return c;
  }
  throw InvalidParameter(std::to_string(n) + " is not a perfect power");
}

std::uint32_t integer_log(std::uint64_t n, std::uint32_t base) {
  std::uint32_t d = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p *= base;
    ++d;
  }
  if (p != n) throw InvalidParameter(std::to_string(n) + " is not a power of " + std::to_string(base));
  return d;
}

std::uint32_t torus_dims(const std::string& token) {
  if (token.size() <= 5 || token.rfind("torus", 0) != 0) return 0;
  const auto d = std::stoul(token.substr(5));
  if (d < 1) throw InvalidParameter("torus dimension must be >= 1");
  return static_cast<std::uint32_t>(d);
}

void check_token(const std::string& token) {
  if (token == "star" || token == "chord" || token == "plaxton" || token == "debruijn") return;
  try {
    if (torus_dims(token) > 0) return;
  } catch (const std::logic_error&) {
  }
  throw UsageError("unknown sweep geometry '" + token + "' (star, chord, plaxton, debruijn, torus<D>)");
}

}  // namespace

std::uint64_t resolve_max_exact_n(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kMaxNEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return value;
  }
  return kDefaultMaxExactN;
}

void RunConfig::validate() const {
  if (methods.empty()) throw InvalidParameter("at least one method must be selected");
  if (has_method(methods, Method::Simulated) != sim.has_value()) {
    throw InvalidParameter("simulation settings must be given exactly when sim is selected");
  }
  if (sim && (sim->seeds.empty() || sim->requests == 0)) {
    throw InvalidParameter("simulation needs at least one seed and one request");
  }
  params.validate();
  dhtcost::validate(geometry);
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::vector<std::string> warnings;
    const auto reports = evaluate(config.geometry, config.params, config.methods, config.sim,
                                  config.max_exact_n, warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';

    std::optional<analytic::DeBruijnBounds> bounds;
    if (const auto* g = std::get_if<DeBruijn>(&config.geometry)) {
      bounds = analytic::debruijn_bounds(g->delta, g->d, config.params);
    }
    if (reports.empty() && !bounds) throw Unsupported("no selected method applies to this geometry");

    std::string content;
    if (config.format == OutputFormat::Json) {
      json doc;
      doc["command"] = "analyze";
      doc["geometry"] = io::to_json(config.geometry);
      doc["params"] = io::to_json(config.params);
      json list = json::array();
      for (const auto& r : reports) list.push_back(io::to_json(r));
      doc["reports"] = std::move(list);
      doc["bounds"] = bounds ? io::to_json(*bounds) : json(nullptr);
      doc["comparisons"] = comparisons_json(reports);
      doc["warnings"] = warnings;
      content = doc.dump(2) + "\n";
    } else {
      content = summary_csv(reports);
    }
    write_output(config.out_path, content, out);
    if (!config.out_path.empty()) {
      print_summary(out, config.geometry, config.params, reports);
      if (bounds) {
        out << "bounds: A_min=" << two_decimals(bounds->a_min)
            << " A_max=" << two_decimals(bounds->a_max) << " R_max=" << two_decimals(bounds->r_max)
            << " L_max=" << bounds->l_max << '\n';
      }
    }
    return static_cast<int>(kSuccess);
  });
}

int cmd_pernode_dump(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    if (config.methods.size() != 1) throw UsageError("pernode takes exactly one method");
    std::vector<std::string> warnings;
    const auto reports = evaluate(config.geometry, config.params, config.methods, config.sim,
                                  config.max_exact_n, warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    if (reports.empty()) throw Unsupported("selected method yields no per-node costs here");

    std::string content;
    if (config.format == OutputFormat::Csv) {
      std::ostringstream s;
      io::write_pernode_csv(s, reports.front());
      content = s.str();
    } else {
      content = io::to_json(reports.front()).dump(2) + "\n";
    }
    write_output(config.out_path, content, out);
    if (!config.out_path.empty()) print_summary(out, config.geometry, config.params, reports);
    return static_cast<int>(kSuccess);
  });
}

int cmd_star_equilibrium(const CostParams& params, OutputFormat format, const std::string& out_path,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto size = analytic::star_equilibrium_size(params);
    std::string content;
    if (format == OutputFormat::Json) {
      json doc;
      doc["command"] = "star-equilibrium";
      doc["params"] = io::to_json(params);
      doc["equilibrium"] = io::to_json(size);
      content = doc.dump(2) + "\n";
    } else {
      std::ostringstream s;
      s << "kind,n0,is_integer\n" << analytic::to_string(size.kind) << ',';
      if (size.kind == analytic::EquilibriumSize::Kind::Candidate) {
        s << io::format_double(size.n0_real) << ',' << (size.is_integer ? "true" : "false");
      } else {
        s << ',';
      }
      s << '\n';
      content = s.str();
    }
    write_output(out_path, content, out);
    if (!out_path.empty()) {
      out << "classification: " << analytic::to_string(size.kind);
      if (size.kind == analytic::EquilibriumSize::Kind::Candidate) {
        out << "  N0=" << io::format_double(size.n0_real)
            << (size.is_integer ? " (integer)" : " (not an integer)");
      }
      out << '\n';
    }
    return static_cast<int>(kSuccess);
  });
}

std::vector<std::uint64_t> feasible_sizes(const std::string& geometry, std::uint32_t delta,
                                          std::uint64_t lo, std::uint64_t hi) {
  check_token(geometry);
  std::vector<std::uint64_t> sizes;
  auto powers_of = [&](std::uint64_t base) {
    for (std::uint64_t p = base; p <= hi; p *= base) {
      if (p >= lo) sizes.push_back(p);
      if (p > hi / base) break;
    }
  };
  if (geometry == "star") {
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) sizes.push_back(n);
  } else if (geometry == "chord") {
    powers_of(2);
  } else if (geometry == "plaxton" || geometry == "debruijn") {
    if (delta < 2) throw InvalidParameter("sweep delta must be >= 2");
    powers_of(delta);
  } else {
    const auto d = torus_dims(geometry);
    for (std::uint64_t side = 2;; ++side) {
      std::uint64_t p = 1;
      bool over = false;
      for (std::uint32_t k = 0; k < d; ++k) {
        if (p > hi / side) {
          over = true;
          break;
        }
        p *= side;
      }
      if (over || p > hi) break;
      if (p >= lo) sizes.push_back(p);
    }
  }
  return sizes;
}

GeometrySpec sweep_geometry(const std::string& geometry, std::uint32_t delta, std::uint64_t n) {
  check_token(geometry);
  if (geometry == "star") return Star{n};
  if (geometry == "chord") return ChordRing{integer_log(n, 2)};
  if (geometry == "plaxton") return PlaxtonTree{delta, integer_log(n, delta)};
  if (geometry == "debruijn") return DeBruijn{delta, integer_log(n, delta)};
  const auto d = torus_dims(geometry);
  return Torus{d, static_cast<std::uint32_t>(integer_root(n, d))};
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, std::ostream& err) {
  if (config.methods.empty()) throw InvalidParameter("at least one method must be selected");
  if (has_method(config.methods, Method::Simulated) != config.sim.has_value()) {
    throw InvalidParameter("simulation settings must be given exactly when sim is selected");
  }
  config.params.validate();
  std::vector<SweepRow> rows;
  for (const auto& token : config.geometries) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> targets;  // requested, actual
    if (config.n_values.empty()) {
      if (config.n_min > config.n_max) throw InvalidParameter("n-min exceeds n-max");
      for (auto n : feasible_sizes(token, config.delta, config.n_min, config.n_max)) {
        targets.emplace_back(n, n);
      }
    } else {
      const auto top = *std::max_element(config.n_values.begin(), config.n_values.end());
      const auto candidates = feasible_sizes(token, config.delta, 1, 4 * top + 4);
      if (candidates.empty()) continue;
      for (auto requested : config.n_values) {
        auto best = candidates.front();
        for (auto c : candidates) {
          const auto dc = c > requested ? c - requested : requested - c;
          const auto db = best > requested ? best - requested : requested - best;
          if (dc < db) best = c;
        }
        targets.emplace_back(requested, best);
      }
    }
    for (const auto& [requested, actual] : targets) {
      const auto spec = sweep_geometry(token, config.delta, actual);
      std::vector<std::string> warnings;
      const auto reports = evaluate(spec, config.params, config.methods, config.sim,
                                    config.max_exact_n, warnings);
      for (const auto& w : warnings) err << "warning: " << describe(spec) << ": " << w << '\n';
      for (const auto& r : reports) {
        rows.push_back({token, requested, actual, r.method, r.aggregates[Component::Access].mean,
                        r.aggregates[Component::Routing].mean});
      }
    }
  }
  if (rows.empty()) throw InvalidParameter("no feasible node count in the requested range");
  return rows;
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_sweep(config, err);
    std::string content;
    if (config.format == OutputFormat::Csv) {
      std::ostringstream s;
      s << "geometry,requested_n,actual_n,method,mean_access,mean_routing\n";
      for (const auto& r : rows) {
        s << r.geometry << ',' << r.requested_n << ',' << r.actual_n << ',' << to_string(r.method)
          << ',' << io::format_double(r.mean_access) << ',' << io::format_double(r.mean_routing)
          << '\n';
      }
      content = s.str();
    } else {
      json list = json::array();
      for (const auto& r : rows) {
        list.push_back(json{{"geometry", r.geometry},
                            {"requested_n", r.requested_n},
                            {"actual_n", r.actual_n},
                            {"method", std::string(to_string(r.method))},
                            {"mean_access", r.mean_access},
                            {"mean_routing", r.mean_routing}});
      }
      json doc;
      doc["command"] = "sweep";
      doc["params"] = io::to_json(config.params);
      doc["rows"] = std::move(list);
      content = doc.dump(2) + "\n";
    }
    write_output(config.out_path, content, out);
    if (!config.out_path.empty()) out << "wrote " << rows.size() << " rows to " << config.out_path << '\n';
    return static_cast<int>(kSuccess);
  });
}

namespace {

struct Flags {
  std::string geometry;
  std::optional<std::uint64_t> n;
  std::optional<std::uint32_t> delta;
  std::optional<std::uint32_t> d;
  std::optional<std::uint32_t> n_side;
  double s = 0.0, a = 1.0, r = 1000.0, m = 0.0;
  std::vector<std::string> methods;
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint64_t> requests;
  std::string format;
  std::string out;
  std::optional<std::uint64_t> max_exact_n;
  std::vector<std::string> geometries;
  std::uint64_t n_min = 10, n_max = 1000;
  std::vector<std::uint64_t> n_values;
};

void add_cost_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--s", f.s, "service price per request served")->capture_default_str();
  cmd->add_option("--a", f.a, "access price per hop")->capture_default_str();
  cmd->add_option("--r", f.r, "routing price per forwarded request")->capture_default_str();
  cmd->add_option("--m", f.m, "maintenance price per table entry")->capture_default_str();
}

void add_output_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out, "output file (default: stdout)");
}

void add_method_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--methods", f.methods, "comma list of analytic,exact,sim")->delimiter(',');
  cmd->add_option("--seeds", f.seeds, "comma list of simulation seeds (default 1..10)")
      ->delimiter(',');
  cmd->add_option("--requests", f.requests, "simulated requests per seed (default 100000)");
  cmd->add_option("--max-exact-n", f.max_exact_n,
                  "exact enumeration node cap (default $DHTCOSTLAB_MAX_N or 4096)");
}

void add_geometry_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--geometry", f.geometry, "star|debruijn|torus|plaxton|chord")
      ->required()
      ->check(CLI::IsMember({"star", "debruijn", "torus", "plaxton", "chord"}));
  cmd->add_option("--n", f.n, "star node count");
  cmd->add_option("--delta", f.delta, "alphabet / digit base");
  cmd->add_option("--d", f.d, "identifier length, dimensions or bits");
  cmd->add_option("--n-side", f.n_side, "torus nodes per dimension");
}

template <class T>
T need(const std::optional<T>& value, const char* flag, const std::string& geometry) {
  if (!value) throw UsageError(std::string(flag) + " is required for --geometry " + geometry);
  return *value;
}

GeometrySpec geometry_from_flags(const Flags& f) {
  if (f.geometry == "star") return Star{need(f.n, "--n", f.geometry)};
  if (f.geometry == "debruijn") {
    return DeBruijn{need(f.delta, "--delta", f.geometry), need(f.d, "--d", f.geometry)};
  }
  if (f.geometry == "torus") {
    return Torus{need(f.d, "--d", f.geometry), need(f.n_side, "--n-side", f.geometry)};
  }
  if (f.geometry == "plaxton") {
    return PlaxtonTree{need(f.delta, "--delta", f.geometry), need(f.d, "--d", f.geometry)};
  }
  return ChordRing{need(f.d, "--d", f.geometry)};
}

std::vector<Method> methods_from_flags(const Flags& f, std::vector<std::string> fallback) {
  const auto& names = f.methods.empty() ? fallback : f.methods;
  std::vector<Method> methods;
  for (const auto& name : names) {
    Method m;
    try {
      m = parse_method(name);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    if (!has_method(methods, m)) methods.push_back(m);
  }
  std::sort(methods.begin(), methods.end());
  return methods;
}

std::optional<SimSettings> sim_from_flags(const Flags& f, const std::vector<Method>& methods) {
  const bool wants_sim = has_method(methods, Method::Simulated);
  if (!wants_sim) {
    if (!f.seeds.empty() || f.requests) {
      throw UsageError("--seeds/--requests given but sim is not among --methods");
    }
    return std::nullopt;
  }
  SimSettings sim;
  sim.seeds = f.seeds.empty() ? default_seeds() : f.seeds;
  if (f.requests) sim.requests = *f.requests;
  return sim;
}

OutputFormat format_from_flags(const Flags& f, OutputFormat fallback) {
  if (f.format.empty()) return fallback;
  return f.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

RunConfig run_config(const Flags& f, std::vector<std::string> default_methods, OutputFormat fmt) {
  RunConfig config;
  config.geometry = geometry_from_flags(f);
  config.params = CostParams{f.s, f.a, f.r, f.m};
  config.methods = methods_from_flags(f, std::move(default_methods));
  config.sim = sim_from_flags(f, config.methods);
  config.format = format_from_flags(f, fmt);
  config.out_path = f.out;
  config.max_exact_n = resolve_max_exact_n(f.max_exact_n);
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dhtcostlab: per-node participation costs of DHT routing geometries"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "evaluate one geometry with selected methods");
  add_geometry_options(analyze, f);
  add_cost_options(analyze, f);
  add_method_options(analyze, f);
  add_output_options(analyze, f);

  auto* pernode = app.add_subcommand("pernode", "dump per-node costs of one geometry");
  add_geometry_options(pernode, f);
  add_cost_options(pernode, f);
  add_method_options(pernode, f);
  add_output_options(pernode, f);

  auto* equilibrium =
      app.add_subcommand("star-equilibrium", "classify star sizes where center and periphery pay equally");
  add_cost_options(equilibrium, f);
  add_output_options(equilibrium, f);

  auto* sweep = app.add_subcommand("sweep", "mean costs over a range of node counts");
  sweep->add_option("--geometries", f.geometries, "comma list: star,chord,plaxton,debruijn,torus<D>")
      ->delimiter(',');
  sweep->add_option("--delta", f.delta, "base for plaxton/debruijn (default 2)");
  sweep->add_option("--n-min", f.n_min, "smallest node count")->capture_default_str();
  sweep->add_option("--n-max", f.n_max, "largest node count")->capture_default_str();
  sweep->add_option("--n-values", f.n_values, "explicit requested node counts (snapped)")
      ->delimiter(',');
  add_cost_options(sweep, f);
  add_method_options(sweep, f);
  add_output_options(sweep, f);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? static_cast<int>(kSuccess) : static_cast<int>(kUsageError);
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(run_config(f, {"exact"}, OutputFormat::Json), out, err);
    }
    if (pernode->parsed()) {
      return cmd_pernode_dump(run_config(f, {"exact"}, OutputFormat::Csv), out, err);
    }
    if (equilibrium->parsed()) {
      return cmd_star_equilibrium(CostParams{f.s, f.a, f.r, f.m},
                                  format_from_flags(f, OutputFormat::Json), f.out, out, err);
    }
    SweepConfig config;
    config.geometries = f.geometries.empty()
                            ? std::vector<std::string>{"star", "chord", "plaxton", "debruijn",
                                                       "torus2", "torus6"}
                            : f.geometries;
    for (const auto& token : config.geometries) check_token(token);
    config.delta = f.delta.value_or(2);
    config.n_min = f.n_min;
    config.n_max = f.n_max;
    config.n_values = f.n_values;
    config.params = CostParams{f.s, f.a, f.r, f.m};
    config.methods = methods_from_flags(f, {"analytic", "exact"});
    config.sim = sim_from_flags(f, config.methods);
    config.format = format_from_flags(f, OutputFormat::Csv);
    config.out_path = f.out;
    config.max_exact_n = resolve_max_exact_n(f.max_exact_n);
    return cmd_sweep(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace dhtcost::cli
