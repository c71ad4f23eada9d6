#pragma once

#include <vector>

namespace hcm {

// Directed flow network with nonnegative real capacities and designated
// source/sink. Arcs into the source and out of the sink are permitted.
class FlowNetwork {
 public:
  struct Arc {
    int from = 0;
    int to = 0;
    double capacity = 0.0;
  };

  FlowNetwork(int num_nodes, int source, int sink);

  int add_arc(int from, int to, double capacity);

  int num_nodes() const { return n_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int n_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct FlowResult {
  double value = 0.0;
  std::vector<double> arc_flow;  // aligned with FlowNetwork::arcs()
  std::vector<int> min_cut;      // nodes reachable from the source in the
                                 // residual graph, source included
};

// Highest-label push-relabel with gap heuristic and periodic global
// relabeling; the preflow is converted to a flow before returning.
FlowResult max_flow(const FlowNetwork& net);

struct FlowPath {
  std::vector<int> nodes;  // source ... sink
  double amount = 0.0;
};

struct PathDecomposition {
  std::vector<FlowPath> paths;

  double total() const {
    double s = 0.0;
    for (const auto& p : paths) s += p.amount;
    return s;
  }
};

// Splits a source-sink flow into simple paths after peeling residual
// cycles off. Ties are broken toward the smallest head id, so identical
// inputs decompose identically.
PathDecomposition decompose(const FlowNetwork& net, const FlowResult& flow);

}  // namespace hcm
