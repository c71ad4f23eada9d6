#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcm/hypergraph.hpp"

namespace hcm {

struct RawHypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;  // 0-based, sorted, may contain junk sizes
  std::vector<double> weights;
};

// hMETIS-style text format: first data line is "m n [fmt]"; fmt 1 prefixes
// each hyperedge line with a weight, fmt 0 or absent means unit weights.
// Node ids in the file are 1-based; '%' starts a comment line.
RawHypergraph parse_hmetis(std::istream& in);
RawHypergraph read_hmetis(const std::string& path);

// One positive weight per line, n lines.
std::vector<double> parse_node_weights(std::istream& in, int n);
std::vector<double> read_node_weights(const std::string& path, int n);

// Whitespace-separated penalty values for a custom splitting spec.
std::vector<double> read_penalty_file(const std::string& path);

struct PreparedHypergraph {
  Hypergraph h;
  std::vector<int> original_ids;  // internal id -> 0-based input id
  int input_nodes = 0;
  int input_edges = 0;
  int dropped_small = 0;   // hyperedges with fewer than two nodes
  int dropped_zero = 0;    // hyperedges whose splitting function is all zero
  int merged_duplicates = 0;
  bool restricted_to_component = false;
  std::vector<std::string> warnings;
};

// Ingestion pipeline: drops degenerate hyperedges, merges duplicates,
// instantiates the splitting spec, and restricts to the largest connected
// component.
PreparedHypergraph prepare(const RawHypergraph& raw, const SplittingSpec& spec);

}  // namespace hcm
