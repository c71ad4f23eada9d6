#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hcm/cutmatch.hpp"
#include "hcm/splitting.hpp"

namespace hcm {

using Json = nlohmann::ordered_json;

enum class WeightChoice { Unit, Degree, File };

struct CommonOptions {
  std::string input_path;
  SplittingSpec splitting;
  std::string splitting_text = "aon";
  WeightChoice weights = WeightChoice::Unit;
  std::string weights_path;
};

struct SolveOptions : CommonOptions {
  int iterations = -1;  // -1 selects ceil(5 log2 n)
  std::uint64_t seed = 0;
  CutPlayer player = CutPlayer::Spectral;
  bool verify_embeddings = false;
  std::string trace_path;
  std::string dump_reduced_path;
};

struct OracleOptions : CommonOptions {
  int node_cap = 22;
};

struct CeOptions : CommonOptions {
  bool normalize_by_pi = false;
};

struct ReduceOptions : CommonOptions {
  std::string dump_reduced_path;
};

struct VerifyOptions : CommonOptions {
  std::string trace_path;
  int samples = 20;
  std::uint64_t seed = 0;
};

// Each builder runs the underlying pipeline and returns the machine report;
// human-readable remarks go to `diagnostics`.
Json solve_report(const SolveOptions& options, std::ostream& diagnostics);
Json oracle_report(const OracleOptions& options, std::ostream& diagnostics);
Json ce_report(const CeOptions& options, std::ostream& diagnostics);
Json reduce_report(const ReduceOptions& options, std::ostream& diagnostics);
Json verify_report(const VerifyOptions& options, std::ostream& diagnostics);

// Resolves "--splitting" text, reading custom penalty files when needed.
SplittingSpec resolve_splitting(const std::string& text);

}  // namespace hcm
