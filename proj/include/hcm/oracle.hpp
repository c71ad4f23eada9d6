#pragma once

#include "hcm/hypergraph.hpp"
#include "hcm/maxflow.hpp"
#include "hcm/reduction.hpp"

namespace hcm {

struct BruteForceResult {
  double value = 0.0;
  NodeSet set;
};

// Exact minimum expansion over all bipartitions. Candidate sets are
// normalized to the side excluding node 0; ties break toward the
// lexicographically smallest such set. Throws TooLarge above the node cap.
BruteForceResult brute_min_expansion(const Hypergraph& h, const NodeWeights& pi,
                                     int node_cap = 22);

// Checks for every node set that the hypergraph cut equals both the sum of
// per-gadget placement minima and the directed cut under the per-gadget
// optimal auxiliary placement.
bool brute_preserver_check(const Hypergraph& h, const ReducedGraph& g, int node_cap = 8);

// Minimum directed cut capacity over all source-side subsets.
double brute_min_st_cut(const FlowNetwork& net, int node_cap = 12);

}  // namespace hcm
