#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hcm/errors.hpp"
#include "hcm/report.hpp"

namespace {

int exit_code_for(hcm::ErrorKind kind) {
  switch (kind) {
    case hcm::ErrorKind::InternalBoundExceeded:
      return 3;
    case hcm::ErrorKind::EigenNoConvergence:
      return 4;
    default:
      return 2;
  }
}

void parse_weights(const std::string& text, hcm::CommonOptions& options) {
  if (text == "unit") {
    options.weights = hcm::WeightChoice::Unit;
  } else if (text == "degree") {
    options.weights = hcm::WeightChoice::Degree;
  } else if (text.rfind("file:", 0) == 0) {
    options.weights = hcm::WeightChoice::File;
    options.weights_path = text.substr(5);
  } else {
    hcm::throw_error(hcm::ErrorKind::InvalidInput,
                     "--weights expects unit, degree, or file:PATH");
  }
}

void emit(const hcm::Json& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report.dump(2) << std::endl;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      hcm::throw_error(hcm::ErrorKind::InvalidInput,
                       "cannot write '" + output_path + "'");
    }
    out << report.dump(2) << '\n';
  }
}

struct CliState {
  std::string input;
  std::string splitting = "aon";
  std::string weights = "unit";
  std::string output;
};

void add_common(CLI::App* cmd, CliState& state) {
  cmd->add_option("--input", state.input, "hypergraph file (hMETIS format)")
      ->required();
  cmd->add_option("--splitting", state.splitting,
                  "aon | delta-linear:D | limi:A | custom:PATH");
  cmd->add_option("--weights", state.weights, "unit | degree | file:PATH");
  cmd->add_option("--output", state.output, "write the JSON report here");
}

void fill_common(const CliState& state, hcm::CommonOptions& options) {
  options.input_path = state.input;
  options.splitting_text = state.splitting;
  options.splitting = hcm::resolve_splitting(state.splitting);
  parse_weights(state.weights, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ratio-cut solver for hypergraphs with generalized splitting functions"};
  app.require_subcommand(1);

  CliState solve_state;
  std::string solve_iters = "auto";
  std::string solve_player = "spectral";
  hcm::SolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "run the cut-matching solver");
  add_common(solve, solve_state);
  solve->add_option("--iters", solve_iters, "iteration count or 'auto'");
  solve->add_option("--seed", solve_options.seed, "random seed");
  solve->add_option("--cut-player", solve_player, "spectral | heatkernel | random");
  solve->add_flag("--verify-embeddings", solve_options.verify_embeddings,
                  "retain and check certificate embeddings");
  solve->add_option("--trace", solve_options.trace_path,
                    "write per-iteration JSON lines here");
  solve->add_option("--dump-reduced", solve_options.dump_reduced_path,
                    "write the reduced graph edge list here");

  CliState oracle_state;
  hcm::OracleOptions oracle_options;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum for small inputs");
  add_common(oracle, oracle_state);
  oracle->add_option("--cap", oracle_options.node_cap, "node-count cap");

  CliState ce_state;
  hcm::CeOptions ce_options;
  auto* ce = app.add_subcommand("ce", "clique-expansion baseline with a sweep cut");
  add_common(ce, ce_state);
  ce->add_flag("--pi-normalization", ce_options.normalize_by_pi,
               "normalize the Laplacian by the node weights instead of graph degrees");

  CliState reduce_state;
  hcm::ReduceOptions reduce_options;
  auto* reduce = app.add_subcommand("reduce", "build and dump the reduced graph");
  add_common(reduce, reduce_state);
  reduce->add_option("--dump-reduced", reduce_options.dump_reduced_path,
                     "write the directed edge list here");

  CliState verify_state;
  hcm::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "replay certificates from a trace");
  add_common(verify, verify_state);
  verify->add_option("--trace", verify_options.trace_path, "trace file from solve")
      ->required();
  verify->add_option("--samples", verify_options.samples, "random bisections per certificate");
  verify->add_option("--seed", verify_options.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      fill_common(solve_state, solve_options);
      if (solve_iters != "auto") solve_options.iterations = std::stoi(solve_iters);
      if (solve_player == "spectral") {
        solve_options.player = hcm::CutPlayer::Spectral;
      } else if (solve_player == "heatkernel") {
        solve_options.player = hcm::CutPlayer::HeatKernel;
      } else if (solve_player == "random") {
        solve_options.player = hcm::CutPlayer::Random;
      } else {
        hcm::throw_error(hcm::ErrorKind::InvalidInput,
                         "--cut-player expects spectral, heatkernel, or random");
      }
      emit(hcm::solve_report(solve_options, std::cerr), solve_state.output);
    } else if (oracle->parsed()) {
      fill_common(oracle_state, oracle_options);
      emit(hcm::oracle_report(oracle_options, std::cerr), oracle_state.output);
    } else if (ce->parsed()) {
      fill_common(ce_state, ce_options);
      emit(hcm::ce_report(ce_options, std::cerr), ce_state.output);
    } else if (reduce->parsed()) {
      fill_common(reduce_state, reduce_options);
      emit(hcm::reduce_report(reduce_options, std::cerr), reduce_state.output);
    } else if (verify->parsed()) {
      fill_common(verify_state, verify_options);
      emit(hcm::verify_report(verify_options, std::cerr), verify_state.output);
    }
  } catch (const hcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
