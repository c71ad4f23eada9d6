#pragma once

#include <optional>
#include <vector>

#include "hcm/hypergraph.hpp"
#include "hcm/maxflow.hpp"
#include "hcm/reduction.hpp"

namespace hcm {

// Flow network over {source, sink} + original + auxiliary nodes: cut
// preserver arcs scaled by 1/alpha, source arcs of capacity pi(r) into R,
// sink arcs of capacity eta * pi(v) out of the complement.
struct AuxiliaryGraph {
  FlowNetwork net;
  double alpha = 0.0;
  double eta = 0.0;
  double pi_r = 0.0;
  int original_nodes = 0;
  std::vector<char> in_r;  // over original nodes
};

AuxiliaryGraph build_auxiliary(const ReducedGraph& g, const NodeWeights& pi,
                               const NodeSet& r, double alpha);

// Restricts a source-side min cut of the auxiliary graph to original nodes.
NodeSet cut_to_set(const AuxiliaryGraph& aux, const std::vector<int>& cut_side);

// Bipartite demand graph extracted from a saturating flow. Entries live on
// R x complement(R); the certified congestion of the embedding is 1/alpha.
struct BipartiteCertificate {
  struct Demand {
    int r = 0;
    int v = 0;
    double amount = 0.0;
  };
  std::vector<Demand> demands;
  double alpha = 0.0;
  double eta = 0.0;
  std::vector<char> in_r;
  std::optional<PathDecomposition> paths;  // retained only on request

  double congestion_bound() const { return 1.0 / alpha; }
};

// Accumulates per-path demands; requires |f| >= pi(R) (1 - 1e-9).
BipartiteCertificate flow_embed(const ReducedGraph& g, const AuxiliaryGraph& aux,
                                const FlowResult& flow, bool keep_paths);

struct CutOrEmbedResult {
  BipartiteCertificate certificate;
  NodeSet cut_set;
  double alpha = 0.0;
  int flow_solves = 0;
};

// Doubling variant: alpha starts at 2/pi(V) and doubles until the min cut
// drops below pi(R); returns the last saturating certificate, the final cut
// set (its expansion is below twice the returned alpha), and the pre-doubled
// alpha.
CutOrEmbedResult hyper_cut_or_embed(const Hypergraph& h, const ReducedGraph& g,
                                    const NodeWeights& pi, const NodeSet& r,
                                    bool keep_paths = false);

// Refinement variant: alpha starts at the expansion of R and is lowered to
// the expansion of each improved set until the flow saturates. The returned
// set has expansion exactly equal to the returned alpha.
CutOrEmbedResult refine_cut_or_embed(const Hypergraph& h, const ReducedGraph& g,
                                     const NodeWeights& pi, const NodeSet& r,
                                     bool keep_paths = false);

// Routes the certificate's demand pairs that cross {S, complement} through
// the unscaled reduced graph, reversing paths that run against the
// orientation by swapping onto the mirrored gadget arcs. Returns the maximum
// arc congestion; the contract is <= 1/alpha up to rounding.
double verify_embedding(const ReducedGraph& g, const BipartiteCertificate& cert,
                        const NodeSet& s);

}  // namespace hcm
