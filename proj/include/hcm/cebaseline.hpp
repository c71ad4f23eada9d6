#pragma once

#include <tuple>
#include <vector>

#include "hcm/hypergraph.hpp"
#include "hcm/spectral.hpp"

namespace hcm {

// Clique expansion with one uniform edge weight per hyperedge, chosen so the
// clique cut sandwiches the splitting penalties with the smallest possible
// distortion factor.
struct CliqueExpansion {
  SparseAdjacency graph;
  std::vector<double> clique_weight;  // p per hyperedge, including edge weight
  std::vector<double> distortion;     // C per hyperedge
};

// Throws ZeroPenalty if any hyperedge has a zero penalty at some split size.
CliqueExpansion expand(const Hypergraph& h);

struct SweepResult {
  NodeSet set;
  double phi = 0.0;
};

// Second eigenvector of the normalized Laplacian of the expansion graph
// (graph-degree normalization by default, hypergraph weights behind the
// flag), swept over distinct thresholds; every candidate is scored with the
// hypergraph expansion and the best one is returned.
SweepResult sweep_cut(const CliqueExpansion& ce, const Hypergraph& h,
                      const NodeWeights& pi, bool normalize_by_pi = false);

}  // namespace hcm
