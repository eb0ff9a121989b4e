// Copyright 2026 The paritysynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paritysynth/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>
#include <tuple>

#include "paritysynth/errors.hpp"
#include "paritysynth/io.hpp"
#include "paritysynth/random.hpp"
#include "paritysynth/routing.hpp"
#include "paritysynth/semantics.hpp"
#include "paritysynth/synth_constrained.hpp"
#include "paritysynth/universal.hpp"

namespace paritysynth {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    parts.push_back(s.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

Strategy strategy_or_throw(const std::string& name) {
  const auto s = parse_strategy(name);
  if (!s) throw UsageError("unknown strategy '" + name + "' (naive, recursive, steiner, dfs)");
  return *s;
}

bool has_hadamard(const Circuit& c) {
  return std::any_of(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.kind == GateKind::H; });
}

std::size_t rz_count(const Circuit& c) {
  return static_cast<std::size_t>(
      std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.kind == GateKind::RZ; }));
}

bool is_polynomial_path(const std::string& path) {
  return std::filesystem::path(path).extension() == ".poly";
}

// Parse errors are reported with the file they came from.
template <typename T, typename F>
T load(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

Circuit load_circuit(const std::string& path) {
  return load<Circuit>(path, [](std::string_view t) { return parse_qasm(t); });
}

PhasePolynomial load_polynomial(const std::string& path) {
  return load<PhasePolynomial>(path, [](std::string_view t) { return parse_phase_poly(t); });
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// Sweep families; a bare sized spec also fixes n when --n is absent.
std::vector<std::string> sweep_families(const RunConfig& config) {
  return split(config.graph.empty() ? std::string("line") : config.graph, ',');
}

std::vector<std::size_t> sweep_sizes(const RunConfig& config, const std::vector<std::string>& families) {
  if (!config.n_values.empty()) return config.n_values;
  if (families.size() == 1 && families[0].find(':') != std::string::npos) {
    return {graph_family(families[0]).num_vertices()};
  }
  throw UsageError(config.command + " needs --n");
}

struct Report {
  std::vector<Record> records;
  std::vector<json> summaries;
};

std::string records_text(const RunConfig& config, const Report& report) {
  std::string text = json{{"config", to_json(config)}}.dump() + "\n";
  for (const Record& r : report.records) text += emit_record(r) + "\n";
  for (const json& s : report.summaries) text += s.dump() + "\n";
  return text;
}

void emit(const RunConfig& config, const Report& report, std::ostream& out) {
  if (config.format == OutputFormat::Records) {
    out << records_text(config, report);
    return;
  }
  out << format_table(report.records);
  if (!report.summaries.empty()) out << "\n";
  for (const json& s : report.summaries) {
    bool first = true;
    for (const auto& [key, value] : s.items()) {
      if (!first) out << "  ";
      first = false;
      out << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << "\n";
  }
}

// Appends SWAPs that bring every logical qubit back from its final physical
// position to its initial one.
Circuit restore_layout(const RoutingReport& r) {
  Circuit c = r.routed_circuit;
  Mapping where = r.final_mapping;
  const std::size_t n = where.size();
  std::vector<Qubit> who(r.routed_circuit.num_qubits(), 0);
  for (Qubit l = 0; l < n; ++l) who[where[l]] = l;
  for (Qubit l = 0; l < n; ++l) {
    const Qubit home = r.initial_mapping[l];
    if (where[l] == home) continue;
    const Qubit other = who[home];
    c.swap(where[l], home);
    where[other] = where[l];
    who[where[other]] = other;
    where[l] = home;
    who[home] = l;
  }
  return c;
}

bool verify_routing(const Circuit& original, const RoutingReport& r) {
  if (!has_hadamard(original)) return routing_equivalent(original, r);
  return unitary_equivalent(original, restore_layout(r));
}

bool verify_resynthesis(const Circuit& original, const Circuit& result) {
  if (!has_hadamard(original)) return equivalent(original, result);
  return unitary_equivalent(original, result);
}

}  // namespace

json to_json(const RunConfig& config) {
  return json{{"command", config.command},
              {"inputs", config.inputs},
              {"graph", config.graph},
              {"strategy", config.strategy},
              {"seed", config.seed},
              {"n", config.n_values},
              {"g", config.g_values},
              {"seeds", config.seeds},
              {"out", config.out},
              {"verify", config.verify},
              {"format", config.format == OutputFormat::Table ? "table" : "records"}};
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t n, std::size_t g, std::size_t index) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ g);
  return splitmix64(h ^ index);
}

CouplingGraph resolve_graph(const std::string& spec, std::size_t n) {
  if (spec.empty()) throw UsageError("a coupling graph is required (--graph)");
  CouplingGraph g;
  if (spec.find(':') != std::string::npos) {
    g = graph_family(spec);
  } else if (std::filesystem::exists(spec)) {
    g = load<CouplingGraph>(spec, [&](std::string_view t) { return parse_graph(t, spec); });
  } else {
    return graph_of_size(spec, n);
  }
  if (g.num_vertices() != n) {
    throw DimensionError("graph " + spec + " has " + std::to_string(g.num_vertices()) + " vertices, instance has " +
                         std::to_string(n) + " qubits");
  }
  return g;
}

std::size_t worker_count(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("PARITYSYNTH_THREADS"); env != nullptr && *env != '\0') {
    std::size_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw UsageError(std::string("PARITYSYNTH_THREADS must be a positive integer, got '") + env + "'");
    }
    return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

PipelineComparison compare_pipelines(const PhasePolynomial& p, const CouplingGraph& g, Strategy constrained,
                                     bool verify) {
  if (!is_constrained(constrained)) throw UsageError("compare needs a constrained strategy (steiner or dfs)");
  PipelineComparison out;
  const SynthesisReport free = synth_recursive(p);
  const RoutingReport routed = route_swaps(free.circuit, g, identity_mapping(p.num_qubits()));
  out.baseline_cnots = free.cnots;
  out.routed_cnots = routed.c_routed;
  out.swaps = routed.swaps_inserted;
  out.routed_depth = cnot_depth(expand_swaps(routed.routed_circuit));
  const ConstrainedReport direct = synthesize(p, constrained, &g);
  out.constrained_cnots = direct.cnots;
  out.constrained_depth = direct.depth;
  out.constrained_violations = direct.violations;
  if (out.baseline_cnots > 0) {
    out.routed_alpha = overhead_factor(out.routed_cnots, out.baseline_cnots);
    out.constrained_alpha = overhead_factor(out.constrained_cnots, out.baseline_cnots);
  }
  if (verify) {
    out.verified = routing_equivalent(free.circuit, routed) && implements(direct.circuit, p) &&
                   direct.violations == 0 && check_connectivity(routed.routed_circuit, g).empty();
  }
  return out;
}

ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  ScalingFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] <= 0 || y[i] <= 0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++fit.points;
  }
  if (fit.points == 0) return fit;
  const auto k = static_cast<double>(fit.points);
  const double denom = k * sxx - sx * sx;
  fit.exponent = denom == 0 ? 0.0 : (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / k;
  return fit;
}

int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.size() > 1) throw UsageError("synth takes at most one input file");
  const Strategy strategy = strategy_or_throw(config.strategy);
  const auto start = Clock::now();

  Record r;
  r.seed = config.seed;
  r.strategy = std::string(to_string(strategy));
  Circuit result;
  bool ok = true;

  std::optional<PhasePolynomial> poly;
  std::optional<Circuit> source;
  if (config.inputs.empty()) {
    if (config.n_values.empty() || config.g_values.empty()) {
      throw UsageError("synth needs an input file or --n and --g for a random instance");
    }
    const std::size_t n = config.n_values[0];
    const std::size_t g = config.g_values[0];
    Rng rng(instance_seed(config.seed, n, g, 0));
    poly = random_polynomial(n, g, rng);
    r.instance = "random:n" + std::to_string(n) + ":g" + std::to_string(g);
  } else if (is_polynomial_path(config.inputs[0])) {
    poly = load_polynomial(config.inputs[0]);
    r.instance = config.inputs[0];
  } else {
    source = expand_swaps(load_circuit(config.inputs[0]));
    r.instance = config.inputs[0];
  }
  const std::size_t n = poly ? poly->num_qubits() : source->num_qubits();
  std::optional<CouplingGraph> graph;
  if (!config.graph.empty()) graph = resolve_graph(config.graph, n);
  const CouplingGraph* gp = graph ? &*graph : nullptr;
  r.n = n;
  r.graph = graph ? graph->name() : "none";

  if (poly) {
    const ConstrainedReport rep = synthesize(*poly, strategy, gp);
    result = rep.circuit;
    r.g = poly->size();
    r.cnots = rep.cnots;
    r.depth = rep.depth;
    r.violations = rep.violations;
    r.extra["cleanup"] = std::string(to_string(rep.cleanup));
    r.extra["cleanup_cnots"] = rep.cleanup_cnots;
    if (is_constrained(strategy)) r.extra["splits"] = rep.splits;
    if (config.verify) ok = implements(result, *poly) && rep.violations == 0;
  } else {
    const UniversalReport rep = resynthesize(*source, gp, strategy);
    result = rep.circuit;
    r.g = std::accumulate(rep.segment_term_counts.begin(), rep.segment_term_counts.end(), std::size_t{0});
    r.cnots = rep.cnots;
    r.depth = rep.depth;
    r.violations = rep.violations;
    r.extra["input_cnots"] = cnot_count(*source);
    r.extra["segments"] = rep.segment_term_counts.size();
    r.extra["hadamard_layers"] = rep.hadamard_layers;
    if (config.verify) ok = verify_resynthesis(*source, result) && rep.violations == 0;
  }
  if (config.verify) r.extra["verified"] = ok;
  r.wall_time_ms = elapsed_ms(start);

  if (!config.out.empty()) write_file(config.out, emit_qasm(result));
  emit(config, Report{{r}, {}}, out);
  if (!ok) {
    err << "verification failed for " << r.instance << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_route(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.size() != 1) throw UsageError("route takes exactly one QASM input");
  const auto start = Clock::now();
  const Circuit c = expand_swaps(load_circuit(config.inputs[0]));
  const CouplingGraph g = resolve_graph(config.graph, c.num_qubits());
  const RoutingReport rep = route_swaps(c, g, identity_mapping(c.num_qubits()));

  Record r;
  r.instance = config.inputs[0];
  r.seed = config.seed;
  r.n = c.num_qubits();
  r.g = rz_count(c);
  r.graph = g.name();
  r.strategy = "swap";
  r.cnots = rep.c_routed;
  r.depth = cnot_depth(expand_swaps(rep.routed_circuit));
  r.alpha = rep.alpha;
  r.violations = check_connectivity(rep.routed_circuit, g).size();
  r.extra["baseline_cnots"] = rep.c_baseline;
  r.extra["swaps"] = rep.swaps_inserted;
  r.extra["final_mapping"] = rep.final_mapping;
  bool ok = true;
  if (config.verify) {
    ok = verify_routing(c, rep) && r.violations == 0;
    r.extra["verified"] = ok;
  }
  r.wall_time_ms = elapsed_ms(start);

  if (!config.out.empty()) write_file(config.out, emit_qasm(rep.routed_circuit));
  emit(config, Report{{r}, {}}, out);
  if (!ok) {
    err << "verification failed for " << r.instance << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Strategy strategy = strategy_or_throw(config.strategy);
  if (!is_constrained(strategy)) throw UsageError("compare needs a constrained strategy (steiner or dfs)");
  const std::vector<std::string> families = sweep_families(config);
  const std::vector<std::size_t> sizes = sweep_sizes(config, families);
  if (config.g_values.empty()) throw UsageError("compare needs --g");

  struct Job {
    std::string family;
    std::size_t n, g, index;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& family : families) {
    for (std::size_t n : sizes) {
      for (std::size_t g : config.g_values) {
        for (std::size_t i = 0; i < config.seeds; ++i) jobs.push_back({family, n, g, i, instance_seed(config.seed, n, g, i)});
      }
    }
  }

  std::vector<std::pair<Record, Record>> results(jobs.size());
  std::vector<PipelineComparison> comparisons(jobs.size());
  parallel_for(jobs.size(), worker_count(config), [&](std::size_t k) {
    const Job& job = jobs[k];
    const auto start = Clock::now();
    const CouplingGraph graph = resolve_graph(job.family, job.n);
    Rng rng(job.seed);
    const PhasePolynomial p = random_polynomial(job.n, job.g, rng);
    const PipelineComparison cmp = compare_pipelines(p, graph, strategy, config.verify);
    const double ms = elapsed_ms(start);

    Record base;
    base.instance = job.family + ":n" + std::to_string(job.n) + ":g" + std::to_string(job.g) + ":" + std::to_string(job.index);
    base.seed = job.seed;
    base.n = job.n;
    base.g = job.g;
    base.graph = graph.name();
    base.wall_time_ms = ms;

    Record routed = base;
    routed.strategy = "recursive+swap";
    routed.cnots = cmp.routed_cnots;
    routed.depth = cmp.routed_depth;
    routed.alpha = cmp.routed_alpha;
    routed.extra["pipeline"] = "routed";
    routed.extra["baseline_cnots"] = cmp.baseline_cnots;
    routed.extra["swaps"] = cmp.swaps;

    Record direct = base;
    direct.strategy = std::string(to_string(strategy));
    direct.cnots = cmp.constrained_cnots;
    direct.depth = cmp.constrained_depth;
    direct.alpha = cmp.constrained_alpha;
    direct.violations = cmp.constrained_violations;
    direct.extra["pipeline"] = "constrained";
    direct.extra["baseline_cnots"] = cmp.baseline_cnots;
    if (cmp.verified) {
      routed.extra["verified"] = *cmp.verified;
      direct.extra["verified"] = *cmp.verified;
    }
    results[k] = {routed, direct};
    comparisons[k] = cmp;
  });

  Report report;
  bool ok = true;
  for (const auto& [routed, direct] : results) {
    report.records.push_back(routed);
    report.records.push_back(direct);
  }
  for (const auto& c : comparisons) ok = ok && c.verified.value_or(true);

  auto summarize = [&](const std::string& graph, std::optional<std::size_t> n, std::optional<std::size_t> g) {
    std::vector<double> routed_alpha;
    std::vector<double> constrained_alpha;
    std::size_t count = 0;
    std::size_t wins = 0;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (graph != "all" && jobs[k].family != graph) continue;
      if ((n && jobs[k].n != *n) || (g && jobs[k].g != *g)) continue;
      const PipelineComparison& c = comparisons[k];
      ++count;
      if (c.constrained_cnots < c.routed_cnots) ++wins;
      if (c.routed_alpha) routed_alpha.push_back(*c.routed_alpha);
      if (c.constrained_alpha) constrained_alpha.push_back(*c.constrained_alpha);
    }
    json s{{"summary", "compare"}, {"graph", graph}};
    s["n"] = n ? json(*n) : json("all");
    s["g"] = g ? json(*g) : json("all");
    s["instances"] = count;
    s["constrained_wins"] = wins;
    s["win_rate"] = count == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(count);
    s["median_alpha_routed"] = median(routed_alpha);
    s["median_alpha_constrained"] = median(constrained_alpha);
    s["max_alpha_routed"] = routed_alpha.empty() ? 0.0 : *std::max_element(routed_alpha.begin(), routed_alpha.end());
    s["max_alpha_constrained"] =
        constrained_alpha.empty() ? 0.0 : *std::max_element(constrained_alpha.begin(), constrained_alpha.end());
    return s;
  };
  for (const auto& family : families) {
    for (std::size_t n : sizes) {
      for (std::size_t g : config.g_values) report.summaries.push_back(summarize(family, n, g));
    }
  }
  report.summaries.push_back(summarize("all", std::nullopt, std::nullopt));

  if (!config.out.empty()) write_file(config.out, records_text(config, report));
  emit(config, report, out);
  if (!ok) {
    err << "verification failed in compare sweep\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.empty() || config.inputs.size() > 2) throw UsageError("verify takes one or two inputs");
  if (config.inputs.size() == 1 && config.graph.empty()) {
    throw UsageError("verify with a single circuit needs --graph");
  }
  const auto start = Clock::now();
  const Circuit c = load_circuit(config.inputs[0]);

  Record r;
  r.instance = config.inputs[0];
  r.seed = config.seed;
  r.n = c.num_qubits();
  r.g = rz_count(c);
  r.strategy = "verify";
  r.cnots = cnot_count(c);
  r.depth = cnot_depth(expand_swaps(c));
  bool ok = true;

  if (config.inputs.size() == 2) {
    const std::string& other = config.inputs[1];
    r.instance += "," + other;
    bool same = false;
    if (is_polynomial_path(other)) {
      const PhasePolynomial p = load_polynomial(other);
      if (p.num_qubits() != c.num_qubits()) throw DimensionError("qubit counts differ");
      same = implements(expand_swaps(c), p);
    } else {
      const Circuit d = load_circuit(other);
      if (d.num_qubits() != c.num_qubits()) throw DimensionError("qubit counts differ");
      if (has_hadamard(c) || has_hadamard(d)) {
        same = unitary_equivalent(c, d);
      } else {
        same = equivalent(expand_swaps(c), expand_swaps(d));
      }
    }
    r.extra["equivalent"] = same;
    ok = same;
  }
  if (!config.graph.empty()) {
    const CouplingGraph g = resolve_graph(config.graph, c.num_qubits());
    r.graph = g.name();
    r.violations = check_connectivity(c, g).size();
    ok = ok && r.violations == 0;
  } else {
    r.graph = "none";
  }
  r.extra["verified"] = ok;
  r.wall_time_ms = elapsed_ms(start);

  emit(config, Report{{r}, {}}, out);
  if (!ok) {
    err << "verification failed for " << r.instance << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Strategy> strategies;
  if (config.strategy == "all") {
    strategies = {Strategy::Naive, Strategy::Recursive, Strategy::Steiner, Strategy::Dfs};
  } else {
    for (const auto& name : split(config.strategy, ',')) strategies.push_back(strategy_or_throw(name));
  }
  const std::vector<std::string> families = sweep_families(config);
  const std::vector<std::size_t> sizes = sweep_sizes(config, families);
  if (config.g_values.empty()) throw UsageError("bench needs --g");

  struct Job {
    std::string family;
    Strategy strategy;
    std::size_t n, g, index;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& family : families) {
    for (Strategy s : strategies) {
      for (std::size_t n : sizes) {
        for (std::size_t g : config.g_values) {
          for (std::size_t i = 0; i < config.seeds; ++i) {
            jobs.push_back({family, s, n, g, i, instance_seed(config.seed, n, g, i)});
          }
        }
      }
    }
  }

  std::vector<Record> records(jobs.size());
  std::vector<char> verified(jobs.size(), 1);
  parallel_for(jobs.size(), worker_count(config), [&](std::size_t k) {
    const Job& job = jobs[k];
    Rng rng(job.seed);
    const PhasePolynomial p = random_polynomial(job.n, job.g, rng);
    std::optional<CouplingGraph> graph;
    if (is_constrained(job.strategy)) graph = resolve_graph(job.family, job.n);
    const auto start = Clock::now();
    const ConstrainedReport rep = synthesize(p, job.strategy, graph ? &*graph : nullptr);
    Record& r = records[k];
    r.wall_time_ms = elapsed_ms(start);
    r.instance = job.family + ":n" + std::to_string(job.n) + ":g" + std::to_string(job.g) + ":" + std::to_string(job.index);
    r.seed = job.seed;
    r.n = job.n;
    r.g = job.g;
    r.graph = graph ? graph->name() : "none";
    r.strategy = std::string(to_string(job.strategy));
    r.cnots = rep.cnots;
    r.depth = rep.depth;
    r.violations = rep.violations;
    r.extra["cleanup_cnots"] = rep.cleanup_cnots;
    if (config.verify) {
      const bool ok = implements(rep.circuit, p) && rep.violations == 0;
      verified[k] = ok ? 1 : 0;
      r.extra["verified"] = ok;
    }
  });

  Report report;
  report.records = records;

  // Mean cnots and time per (family, strategy, n, g) cell.
  using Cell = std::tuple<std::string, std::string, std::size_t, std::size_t>;
  std::map<Cell, std::pair<double, double>> sums;
  std::map<Cell, std::size_t> counts;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Cell cell{jobs[k].family, records[k].strategy, jobs[k].n, jobs[k].g};
    sums[cell].first += static_cast<double>(records[k].cnots);
    sums[cell].second += records[k].wall_time_ms;
    ++counts[cell];
  }
  auto mean_cnots = [&](const Cell& c) { return sums[c].first / static_cast<double>(counts[c]); };
  for (const auto& [cell, total] : sums) {
    const auto k = static_cast<double>(counts[cell]);
    report.summaries.push_back(json{{"summary", "cell"},
                                    {"graph", std::get<0>(cell)},
                                    {"strategy", std::get<1>(cell)},
                                    {"n", std::get<2>(cell)},
                                    {"g", std::get<3>(cell)},
                                    {"mean_cnots", total.first / k},
                                    {"mean_wall_time_ms", total.second / k}});
  }

  auto fit_record = [](const std::string& family, Strategy s, const char* fixed, std::size_t value,
                       const char* variable, const ScalingFit& fit) {
    return json{{"summary", "scaling"},  {"graph", family},          {"strategy", std::string(to_string(s))},
                {"fixed", fixed},        {"value", value},           {"variable", variable},
                {"exponent", fit.exponent}, {"intercept", fit.intercept}, {"points", fit.points}};
  };
  for (const auto& family : families) {
    for (Strategy s : strategies) {
      const std::string name(to_string(s));
      if (config.g_values.size() >= 2) {
        for (std::size_t n : sizes) {
          std::vector<double> x, y;
          for (std::size_t g : config.g_values) {
            x.push_back(static_cast<double>(g));
            y.push_back(mean_cnots({family, name, n, g}));
          }
          report.summaries.push_back(fit_record(family, s, "n", n, "g", fit_power_law(x, y)));
        }
      }
      if (sizes.size() >= 2) {
        for (std::size_t g : config.g_values) {
          std::vector<double> x, y;
          for (std::size_t n : sizes) {
            x.push_back(static_cast<double>(n));
            y.push_back(mean_cnots({family, name, n, g}));
          }
          report.summaries.push_back(fit_record(family, s, "g", g, "n", fit_power_law(x, y)));
        }
      }
    }
  }

  if (!config.out.empty()) write_file(config.out, records_text(config, report));
  emit(config, report, out);
  if (std::find(verified.begin(), verified.end(), 0) != verified.end()) {
    err << "verification failed in bench sweep\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "synth") return cmd_synth(config, out, err);
    if (config.command == "route") return cmd_route(config, out, err);
    if (config.command == "compare") return cmd_compare(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "bench") return cmd_bench(config, out, err);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace paritysynth
