#pragma once

#include <vector>

#include "hcm/hypergraph.hpp"

namespace hcm {

// One directed two-auxiliary-node gadget. For a hyperedge of size k, placing
// the auxiliary pair optimally yields a cut contribution of
// a * min(i, k - i, b) when i nodes of the hyperedge sit on the cut side.
struct Gadget {
  double weight = 0.0;  // a
  int cap = 0;          // b
};

// Decomposes edge_weight * w into gadgets whose minima sum back to the
// penalty vector exactly. With d_i = w_i - w_{i-1}, gadget j < r gets
// a_j = edge_weight * (d_j - d_{j+1}) and gadget r gets a_r = edge_weight * d_r;
// zero-weight gadgets are dropped.
std::vector<Gadget> decompose_gadgets(const SplittingFunction& sf, double edge_weight);

// Optimal auxiliary placement value for one gadget: a * min(i, k - i, b).
double gadget_mincut(double a, int b, int k, int i);

struct ReducedArc {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

// The directed graph on original + auxiliary nodes whose minimum cut over
// auxiliary placements reproduces the hypergraph cut for every node set.
// Built by build_preserver; passive afterwards.
struct ReducedGraph {
  struct GadgetInstance {
    int edge_index = 0;  // owning hyperedge
    int aux_in = 0;      // node receiving (v, aux_in) arcs
    int aux_out = 0;     // node emitting (aux_out, v) arcs
    double weight = 0.0;
    int cap = 0;
    int first_arc = 0;   // arcs [first_arc, first_arc + 2|e| + 1) belong here
  };

  int total_nodes = 0;
  int original_nodes = 0;
  std::vector<ReducedArc> arcs;
  std::vector<GadgetInstance> gadgets;
};

// Instantiates every hyperedge's gadgets. Auxiliary ids follow the original
// ids contiguously, gadgets ordered by hyperedge index, so layouts are
// deterministic.
ReducedGraph build_preserver(const Hypergraph& h);

}  // namespace hcm
