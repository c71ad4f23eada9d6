#pragma once

#include <span>
#include <vector>

#include "hcm/splitting.hpp"

namespace hcm {

// Node sets are sorted, duplicate-free lists of 0-based node ids.
using NodeSet = std::vector<int>;

NodeSet complement_set(const NodeSet& s, int n);

// Positive node weight function pi. Immutable after construction.
class NodeWeights {
 public:
  explicit NodeWeights(std::vector<double> pi);
  static NodeWeights uniform(int n);

  int size() const { return static_cast<int>(pi_.size()); }
  double operator[](int v) const { return pi_[v]; }
  double total() const { return total_; }
  double sum(std::span<const int> nodes) const;
  const std::vector<double>& values() const { return pi_; }

  NodeWeights scaled(double factor) const;
  double min_value() const;

 private:
  std::vector<double> pi_;
  double total_;
};

// Hypergraph with one splitting function per hyperedge. Edge weights
// multiply the splitting penalties. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<std::vector<int>> edges, std::vector<double> weights,
             std::vector<SplittingFunction> splitting);

  // Instantiates one shared spec per hyperedge size.
  static Hypergraph with_spec(int n, std::vector<std::vector<int>> edges,
                              std::vector<double> weights, const SplittingSpec& spec);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edge(int e) const { return edges_[e]; }
  double edge_weight(int e) const { return weights_[e]; }
  const SplittingFunction& splitting(int e) const { return splitting_[e]; }

  long long pin_count() const;  // sum of |e|

  // Maximum cut penalty over hyperedges and split sizes (symbolically, the
  // largest value edge_weight * w_i can take).
  double max_cut_penalty() const;

  // Smallest positive penalty for cutting any hyperedge (edge_weight * w_1).
  double min_cut_penalty() const;

  double cut_value(const NodeSet& s) const;
  double cut_value(const std::vector<char>& in_s) const;

  Hypergraph scaled(double weight_factor) const;

  const std::vector<std::vector<int>>& node_to_edges() const { return node_edges_; }

 private:
  int n_;
  std::vector<std::vector<int>> edges_;
  std::vector<double> weights_;
  std::vector<SplittingFunction> splitting_;
  std::vector<std::vector<int>> node_edges_;
};

// cut(S) / min(pi(S), pi(complement)). Throws EmptySide on trivial sides.
double pi_expansion(const Hypergraph& h, const NodeWeights& pi, const NodeSet& s);

// Generalized degree pi(v) = sum over e containing v of edge_weight(e) * w_e({v}).
// Throws IsolatedNode if some node appears in no hyperedge.
NodeWeights generalized_degrees(const Hypergraph& h);

struct ScaleInfo {
  double weight_factor = 1.0;  // normalized weight = input weight * weight_factor
  double pi_factor = 1.0;      // normalized pi = input pi * pi_factor

  // Converts an expansion value computed on the normalized instance back to
  // the input scale.
  double expansion_to_input(double phi_normalized) const {
    return phi_normalized * pi_factor / weight_factor;
  }
};

struct NormalizedInstance {
  Hypergraph h;
  NodeWeights pi;
  ScaleInfo scale;
};

// Scales edge weights so the smallest hyperedge cut penalty is 1 and node
// weights so the smallest weight is 1.
NormalizedInstance normalize(const Hypergraph& h, const NodeWeights& pi);

// Connected components induced by hyperedges (singleton components for
// nodes in no hyperedge).
std::vector<std::vector<int>> connected_components(const Hypergraph& h);

struct ComponentRestriction {
  Hypergraph h;
  std::vector<int> kept_nodes;  // new id -> old id
  bool reduced = false;
};

ComponentRestriction largest_component(const Hypergraph& h);

}  // namespace hcm
