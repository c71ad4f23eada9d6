#pragma once

#include <cstdint>
#include <limits>
#include <tuple>
#include <vector>

#include "hcm/embed.hpp"
#include "hcm/hypergraph.hpp"
#include "hcm/spectral.hpp"

namespace hcm {

enum class CutPlayer { Spectral, HeatKernel, Random };

struct CutMatchOptions {
  int t_max = -1;  // -1 selects ceil(5 log2 n)
  std::uint64_t seed = 0;
  CutPlayer player = CutPlayer::Spectral;
  bool keep_certificates = false;
  double heat_tau = 1.0;
  int heat_order = 16;
};

struct IterationRecord {
  int iteration = 0;
  double alpha = 0.0;
  double phi = 0.0;      // expansion of this iteration's set
  double lambda2 = 0.0;
  double gamma = 0.0;
  double lower_bound = 0.0;  // best bound so far
  double rho = std::numeric_limits<double>::infinity();
  double wall_ms = 0.0;
};

struct CutMatchState {
  int iterations = 0;
  double gamma = 0.0;
  std::vector<double> alphas;
  NodeSet best_set;
  double best_phi = std::numeric_limits<double>::infinity();
  double lambda2 = 0.0;       // of the final union graph
  double lower_bound = 0.0;   // max over iterations of lambda2 / (2 gamma)
  std::vector<IterationRecord> trace;
  std::vector<std::tuple<int, int, double>> union_edges;  // merged, sorted
  std::vector<BipartiteCertificate> certificates;         // kept on request
  std::vector<double> eigenvector;  // final spectral embedding, if computed
};

double lower_bound(const CutMatchState& state);
double approx_ratio(const CutMatchState& state);

// Greedy prefix of a random node permutation up to the weighted median;
// returns the lighter side.
NodeSet initial_bisection(const NodeWeights& pi, std::uint64_t seed);

// Threshold split of the second eigenvector of the normalized union-graph
// Laplacian at the weighted median; falls back to a whole-component
// bipartition while the union graph is disconnected. Works well in practice,
// though there are known adversarial graphs where greedily splitting on this
// eigenvector makes slow progress round over round.
NodeSet spectral_partition(const SparseAdjacency& union_graph, const NodeWeights& pi,
                           const std::vector<double>* warm_start,
                           double* lambda2_out = nullptr,
                           std::vector<double>* eigenvector_out = nullptr);

// Random direction smoothed by a truncated series for exp(-tau Lnorm),
// then split at the weighted median. No approximation guarantee is claimed
// for this strategy.
NodeSet heat_kernel_partition(const SparseAdjacency& union_graph, const NodeWeights& pi,
                              std::uint64_t seed, double tau, int order);

// The cut-matching driver: alternates a cut player with the flow-based
// matching player, accumulates the union graph, and tracks the certified
// lower bound and the best set found.
CutMatchState run_cut_match(const Hypergraph& h, const NodeWeights& pi,
                            const CutMatchOptions& options);

}  // namespace hcm
