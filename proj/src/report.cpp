#include "hcm/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "hcm/cebaseline.hpp"
#include "hcm/errors.hpp"
#include "hcm/io.hpp"
#include "hcm/oracle.hpp"
#include "hcm/reduction.hpp"

namespace hcm {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

struct LoadedInstance {
  PreparedHypergraph prepared;
  NodeWeights pi;          // input scale, restricted to the kept component
  std::string objective;
};

LoadedInstance load_instance(const CommonOptions& options, std::ostream& diagnostics) {
  RawHypergraph raw = read_hmetis(options.input_path);
  PreparedHypergraph prepared = prepare(raw, options.splitting);
  for (const auto& warning : prepared.warnings) {
    diagnostics << "warning: " << warning << "\n";
  }
  if (prepared.h.num_nodes() < 2 || prepared.h.num_edges() == 0) {
    throw_error(ErrorKind::InvalidInput,
                "hypergraph has no usable structure after preparation");
  }
  NodeWeights pi = NodeWeights::uniform(prepared.h.num_nodes());
  std::string objective = "unit";
  switch (options.weights) {
    case WeightChoice::Unit:
      break;
    case WeightChoice::Degree:
      pi = generalized_degrees(prepared.h);
      objective = "degree";
      break;
    case WeightChoice::File: {
      const auto all = read_node_weights(options.weights_path, prepared.input_nodes);
      std::vector<double> kept;
      kept.reserve(prepared.original_ids.size());
      for (int orig : prepared.original_ids) kept.push_back(all[orig]);
      pi = NodeWeights(std::move(kept));
      objective = "file:" + options.weights_path;
      break;
    }
  }
  return LoadedInstance{std::move(prepared), std::move(pi), std::move(objective)};
}

Json input_stats(const CommonOptions& options, const PreparedHypergraph& prepared) {
  Json stats;
  stats["path"] = options.input_path;
  stats["input_nodes"] = prepared.input_nodes;
  stats["input_edges"] = prepared.input_edges;
  stats["nodes"] = prepared.h.num_nodes();
  stats["edges"] = prepared.h.num_edges();
  stats["pin_count"] = prepared.h.pin_count();
  stats["avg_edge_size"] = prepared.h.num_edges() > 0
                               ? static_cast<double>(prepared.h.pin_count()) /
                                     prepared.h.num_edges()
                               : 0.0;
  return stats;
}

Json set_to_original_ids(const NodeSet& set, const std::vector<int>& original_ids) {
  Json out = Json::array();
  std::vector<int> ids;
  ids.reserve(set.size());
  for (int v : set) ids.push_back(original_ids[v] + 1);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) out.push_back(id);
  return out;
}

void dump_reduced_graph(const ReducedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw_error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  }
  for (const auto& arc : g.arcs) {
    out << arc.from << ' ' << arc.to << ' ' << arc.weight << '\n';
  }
}

}  // namespace

SplittingSpec resolve_splitting(const std::string& text) {
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    SplittingSpec spec;
    spec.kind = SplittingSpec::Kind::Custom;
    spec.custom = read_penalty_file(text.substr(prefix.size()));
    // Validation happens on instantiation against each hyperedge size; fail
    // fast on the full vector here.
    SplittingFunction::custom(2 * static_cast<int>(spec.custom.size()), spec.custom);
    return spec;
  }
  return SplittingSpec::parse(text);
}

Json solve_report(const SolveOptions& options, std::ostream& diagnostics) {
  const auto started = clock_type::now();
  if (options.iterations == 0 || options.iterations < -1) {
    throw_error(ErrorKind::InvalidInput, "--iters must be positive or 'auto'");
  }
  LoadedInstance instance = load_instance(options, diagnostics);
  NormalizedInstance normalized = normalize(instance.prepared.h, instance.pi);

  CutMatchOptions cm;
  cm.t_max = options.iterations;
  cm.seed = options.seed;
  cm.player = options.player;
  cm.keep_certificates = options.verify_embeddings;

  CutMatchState state = run_cut_match(normalized.h, normalized.pi, cm);

  if (!options.dump_reduced_path.empty()) {
    dump_reduced_graph(build_preserver(normalized.h), options.dump_reduced_path);
  }

  Json report;
  report["command"] = "solve";
  report["input"] = input_stats(options, instance.prepared);
  report["objective"] = instance.objective;
  report["splitting"] = options.splitting.describe();
  report["iterations"] = state.iterations;
  report["seed"] = options.seed;
  report["cut_player"] = options.player == CutPlayer::Spectral      ? "spectral"
                         : options.player == CutPlayer::HeatKernel ? "heatkernel"
                                                                   : "random";
  report["best_set"] = set_to_original_ids(state.best_set, instance.prepared.original_ids);
  report["phi"] = normalized.scale.expansion_to_input(state.best_phi);
  report["lower_bound"] = normalized.scale.expansion_to_input(state.lower_bound);
  const double rho = approx_ratio(state);
  if (std::isfinite(rho)) {
    report["rho"] = rho;
  } else {
    report["rho"] = nullptr;
  }

  if (options.verify_embeddings) {
    const ReducedGraph reduced = build_preserver(normalized.h);
    double worst_ratio = 0.0;
    std::uint64_t probe_seed = options.seed * 1000003ULL + 17;
    for (const auto& cert : state.certificates) {
      for (int probe = 0; probe < 5; ++probe) {
        const NodeSet s = initial_bisection(normalized.pi, probe_seed++);
        const double congestion = verify_embedding(reduced, cert, s);
        worst_ratio = std::max(worst_ratio, congestion * cert.alpha);
      }
      if (!state.best_set.empty() &&
          static_cast<int>(state.best_set.size()) < normalized.h.num_nodes()) {
        const double congestion = verify_embedding(reduced, cert, state.best_set);
        worst_ratio = std::max(worst_ratio, congestion * cert.alpha);
      }
    }
    report["embedding_check"] = Json{{"certificates", state.certificates.size()},
                                     {"max_congestion_ratio", worst_ratio},
                                     {"pass", worst_ratio <= 1.0 + 1e-9}};
  }

  if (!options.trace_path.empty()) {
    std::ofstream trace(options.trace_path);
    if (!trace) {
      throw_error(ErrorKind::InvalidInput, "cannot write '" + options.trace_path + "'");
    }
    for (size_t i = 0; i < state.trace.size(); ++i) {
      const IterationRecord& rec = state.trace[i];
      Json line;
      line["iteration"] = rec.iteration;
      line["alpha"] = rec.alpha;
      line["phi"] = rec.phi;
      line["lambda2"] = rec.lambda2;
      line["gamma"] = rec.gamma;
      line["lower_bound"] = rec.lower_bound;
      line["rho"] = std::isfinite(rec.rho) ? Json(rec.rho) : Json(nullptr);
      line["wall_ms"] = rec.wall_ms;
      if (options.verify_embeddings && i < state.certificates.size() &&
          state.certificates[i].paths.has_value()) {
        Json paths = Json::array();
        for (const auto& path : state.certificates[i].paths->paths) {
          paths.push_back(Json{{"amount", path.amount}, {"nodes", path.nodes}});
        }
        line["paths"] = std::move(paths);
      }
      trace << line.dump() << '\n';
    }
  }

  report["wall_ms"] = elapsed_ms(started);
  diagnostics << "phi " << report["phi"].dump() << ", lower bound "
              << report["lower_bound"].dump() << ", rho " << report["rho"].dump()
              << " after " << state.iterations << " iteration(s)\n";
  return report;
}

Json oracle_report(const OracleOptions& options, std::ostream& diagnostics) {
  const auto started = clock_type::now();
  LoadedInstance instance = load_instance(options, diagnostics);
  BruteForceResult result =
      brute_min_expansion(instance.prepared.h, instance.pi, options.node_cap);

  Json report;
  report["command"] = "oracle";
  report["input"] = input_stats(options, instance.prepared);
  report["objective"] = instance.objective;
  report["splitting"] = options.splitting.describe();
  report["opt"] = result.value;
  report["set"] = set_to_original_ids(result.set, instance.prepared.original_ids);
  report["wall_ms"] = elapsed_ms(started);
  return report;
}

Json ce_report(const CeOptions& options, std::ostream& diagnostics) {
  const auto started = clock_type::now();
  LoadedInstance instance = load_instance(options, diagnostics);
  CliqueExpansion ce = expand(instance.prepared.h);
  SweepResult sweep = sweep_cut(ce, instance.prepared.h, instance.pi,
                                options.normalize_by_pi);

  double max_distortion = 1.0;
  for (double c : ce.distortion) max_distortion = std::max(max_distortion, c);

  Json report;
  report["command"] = "ce";
  report["input"] = input_stats(options, instance.prepared);
  report["objective"] = instance.objective;
  report["splitting"] = options.splitting.describe();
  report["normalization"] = options.normalize_by_pi ? "hypergraph-degree" : "graph-degree";
  report["best_set"] = set_to_original_ids(sweep.set, instance.prepared.original_ids);
  report["phi"] = sweep.phi;
  report["max_distortion"] = max_distortion;
  report["wall_ms"] = elapsed_ms(started);
  return report;
}

Json reduce_report(const ReduceOptions& options, std::ostream& diagnostics) {
  const auto started = clock_type::now();
  LoadedInstance instance = load_instance(options, diagnostics);
  const ReducedGraph reduced = build_preserver(instance.prepared.h);
  if (!options.dump_reduced_path.empty()) {
    dump_reduced_graph(reduced, options.dump_reduced_path);
  }

  Json report;
  report["command"] = "reduce";
  report["input"] = input_stats(options, instance.prepared);
  report["splitting"] = options.splitting.describe();
  report["nodes"] = reduced.total_nodes;
  report["arcs"] = reduced.arcs.size();
  report["gadgets"] = reduced.gadgets.size();
  if (!options.dump_reduced_path.empty()) {
    report["dump"] = options.dump_reduced_path;
  }
  report["wall_ms"] = elapsed_ms(started);
  return report;
}

Json verify_report(const VerifyOptions& options, std::ostream& diagnostics) {
  const auto started = clock_type::now();
  LoadedInstance instance = load_instance(options, diagnostics);
  NormalizedInstance normalized = normalize(instance.prepared.h, instance.pi);
  const ReducedGraph reduced = build_preserver(normalized.h);

  std::ifstream trace(options.trace_path);
  if (!trace) {
    throw_error(ErrorKind::InvalidInput, "cannot open '" + options.trace_path + "'");
  }

  int checked = 0;
  double worst_ratio = 0.0;
  std::uint64_t probe_seed = options.seed * 2654435761ULL + 99;
  std::string line;
  while (std::getline(trace, line)) {
    if (line.empty()) continue;
    Json record = Json::parse(line);
    if (!record.contains("paths")) continue;
    BipartiteCertificate cert;
    cert.alpha = record["alpha"].get<double>();
    PathDecomposition paths;
    for (const auto& p : record["paths"]) {
      FlowPath path;
      path.amount = p["amount"].get<double>();
      path.nodes = p["nodes"].get<std::vector<int>>();
      paths.paths.push_back(std::move(path));
    }
    cert.in_r.assign(normalized.h.num_nodes(), 0);
    for (const auto& path : paths.paths) {
      cert.in_r[path.nodes[1]] = 1;
    }
    cert.paths = std::move(paths);
    for (int probe = 0; probe < options.samples; ++probe) {
      const NodeSet s = initial_bisection(normalized.pi, probe_seed++);
      const double congestion = verify_embedding(reduced, cert, s);
      worst_ratio = std::max(worst_ratio, congestion * cert.alpha);
    }
    ++checked;
  }
  if (checked == 0) {
    throw_error(ErrorKind::MissingDecomposition,
                "trace has no retained path decompositions; rerun solve with "
                "--verify-embeddings and --trace");
  }

  Json report;
  report["command"] = "verify";
  report["trace"] = options.trace_path;
  report["certificates"] = checked;
  report["samples"] = options.samples;
  report["max_congestion_ratio"] = worst_ratio;
  report["pass"] = worst_ratio <= 1.0 + 1e-9;
  report["wall_ms"] = elapsed_ms(started);
  diagnostics << "checked " << checked << " certificate(s), worst congestion ratio "
              << worst_ratio << "\n";
  return report;
}

}  // namespace hcm
