#include "hcm/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hcm/errors.hpp"

namespace hcm {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

RawHypergraph parse_hmetis(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) {
    throw_error(ErrorKind::InvalidInput, "empty hypergraph file");
  }
  std::istringstream header(line);
  long long m = 0, n = 0;
  int fmt = 0;
  if (!(header >> m >> n)) {
    throw_error(ErrorKind::InvalidInput, "header must be 'm n [fmt]'");
  }
  if (!(header >> fmt)) fmt = 0;
  if (fmt != 0 && fmt != 1) {
    throw_error(ErrorKind::InvalidInput,
                "unsupported fmt " + std::to_string(fmt) + " (only 0 and 1)");
  }
  if (m < 0 || n < 1) {
    throw_error(ErrorKind::InvalidInput, "header counts out of range");
  }

  RawHypergraph raw;
  raw.n = static_cast<int>(n);
  raw.edges.reserve(m);
  raw.weights.reserve(m);
  for (long long e = 0; e < m; ++e) {
    if (!next_data_line(in, line)) {
      throw_error(ErrorKind::InvalidInput,
                  "expected " + std::to_string(m) + " hyperedge lines, got " +
                      std::to_string(e));
    }
    std::istringstream ls(line);
    double weight = 1.0;
    if (fmt == 1) {
      if (!(ls >> weight)) {
        throw_error(ErrorKind::InvalidInput,
                    "hyperedge " + std::to_string(e + 1) + " is missing its weight");
      }
      if (!(weight > 0.0)) {
        throw_error(ErrorKind::InvalidInput,
                    "hyperedge " + std::to_string(e + 1) + " needs a positive weight");
      }
    }
    std::vector<int> nodes;
    long long id;
    while (ls >> id) {
      if (id < 1 || id > n) {
        throw_error(ErrorKind::InvalidInput,
                    "node id " + std::to_string(id) + " out of range on hyperedge " +
                        std::to_string(e + 1));
      }
      nodes.push_back(static_cast<int>(id - 1));
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    raw.edges.push_back(std::move(nodes));
    raw.weights.push_back(weight);
  }
  return raw;
}

RawHypergraph read_hmetis(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  }
  return parse_hmetis(in);
}

std::vector<double> parse_node_weights(std::istream& in, int n) {
  std::vector<double> weights;
  weights.reserve(n);
  std::string line;
  while (static_cast<int>(weights.size()) < n && next_data_line(in, line)) {
    std::istringstream ls(line);
    double w;
    while (ls >> w) {
      if (!(w > 0.0)) {
        throw_error(ErrorKind::InvalidInput, "positive node weight required");
      }
      weights.push_back(w);
    }
  }
  if (static_cast<int>(weights.size()) != n) {
    throw_error(ErrorKind::InvalidInput,
                "expected " + std::to_string(n) + " node weights, got " +
                    std::to_string(weights.size()));
  }
  return weights;
}

std::vector<double> read_node_weights(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  }
  return parse_node_weights(in, n);
}

std::vector<double> read_penalty_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  }
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (values.empty()) {
    throw_error(ErrorKind::InvalidInput, "penalty file '" + path + "' is empty");
  }
  return values;
}

PreparedHypergraph prepare(const RawHypergraph& raw, const SplittingSpec& spec) {
  int dropped_small = 0;
  std::map<std::vector<int>, double> merged;
  for (size_t e = 0; e < raw.edges.size(); ++e) {
    if (raw.edges[e].size() < 2) {
      ++dropped_small;
      continue;
    }
    merged[raw.edges[e]] += raw.weights[e];
  }
  const int merged_duplicates =
      static_cast<int>(raw.edges.size()) - dropped_small - static_cast<int>(merged.size());

  std::vector<std::vector<int>> edges;
  std::vector<double> weights;
  std::vector<SplittingFunction> splitting;
  int dropped_zero = 0;
  for (const auto& [nodes, weight] : merged) {
    SplittingFunction sf = spec.instantiate(static_cast<int>(nodes.size()));
    if (sf.is_zero()) {
      ++dropped_zero;
      continue;
    }
    edges.push_back(nodes);
    weights.push_back(weight);
    splitting.push_back(std::move(sf));
  }

  Hypergraph full(raw.n, std::move(edges), std::move(weights), std::move(splitting));
  ComponentRestriction restriction = largest_component(full);

  PreparedHypergraph prepared{std::move(restriction.h),
                              std::move(restriction.kept_nodes),
                              raw.n,
                              static_cast<int>(raw.edges.size()),
                              dropped_small,
                              dropped_zero,
                              merged_duplicates,
                              restriction.reduced,
                              {}};
  if (dropped_small > 0) {
    prepared.warnings.push_back("dropped " + std::to_string(dropped_small) +
                                " hyperedge(s) with fewer than two nodes");
  }
  if (dropped_zero > 0) {
    prepared.warnings.push_back("dropped " + std::to_string(dropped_zero) +
                                " hyperedge(s) with an all-zero splitting function");
  }
  if (merged_duplicates > 0) {
    prepared.warnings.push_back("merged " + std::to_string(merged_duplicates) +
                                " duplicate hyperedge(s)");
  }
  if (restriction.reduced) {
    prepared.warnings.push_back(
        "input is disconnected; restricted to the largest connected component (" +
        std::to_string(prepared.h.num_nodes()) + " of " + std::to_string(raw.n) +
        " nodes)");
  }
  return prepared;
}

}  // namespace hcm
