#include "hcm/cebaseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcm/errors.hpp"

namespace hcm {

CliqueExpansion expand(const Hypergraph& h) {
  CliqueExpansion ce;
  ce.clique_weight.resize(h.num_edges());
  ce.distortion.resize(h.num_edges());
  std::vector<std::tuple<int, int, double>> edges;
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto& members = h.edge(e);
    const int k = static_cast<int>(members.size());
    const auto& w = h.splitting(e).penalties();
    double p = 0.0;
    for (int i = 1; i <= k / 2; ++i) {
      if (!(w[i - 1] > 0.0)) {
        throw_error(ErrorKind::ZeroPenalty,
                    "hyperedge " + std::to_string(e) +
                        " has a zero penalty; clique distortion is unbounded");
      }
      p = std::max(p, w[i - 1] / (static_cast<double>(i) * (k - i)));
    }
    double c = 1.0;
    for (int i = 1; i <= k / 2; ++i) {
      c = std::max(c, p * static_cast<double>(i) * (k - i) / w[i - 1]);
    }
    ce.clique_weight[e] = p * h.edge_weight(e);
    ce.distortion[e] = c;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        edges.emplace_back(members[a], members[b], ce.clique_weight[e]);
      }
    }
  }
  ce.graph = SparseAdjacency::from_edges(h.num_nodes(), edges);
  return ce;
}

SweepResult sweep_cut(const CliqueExpansion& ce, const Hypergraph& h,
                      const NodeWeights& pi, bool normalize_by_pi) {
  const int n = h.num_nodes();
  const std::vector<double>& norm_weights =
      normalize_by_pi ? pi.values() : ce.graph.degree;
  for (int v = 0; v < n; ++v) {
    if (!(norm_weights[v] > 0.0)) {
      throw_error(ErrorKind::IsolatedNode,
                  "node " + std::to_string(v) + " is isolated in the expansion");
    }
  }
  EigenPair eig =
      second_smallest_normalized_laplacian(ce.graph, norm_weights, nullptr);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return eig.vector[a] != eig.vector[b] ? eig.vector[a] < eig.vector[b] : a < b;
  });

  // Walk the sweep prefixes, maintaining per-edge counts so each step costs
  // only the flipped node's incident pins.
  std::vector<int> inside_count(h.num_edges(), 0);
  double cut = 0.0;
  double pi_s = 0.0;
  SweepResult best;
  best.phi = std::numeric_limits<double>::infinity();
  int best_prefix = 0;
  for (int j = 0; j + 1 < n; ++j) {
    const int v = order[j];
    for (int e : h.node_to_edges()[v]) {
      const int k = static_cast<int>(h.edge(e).size());
      const int before = inside_count[e];
      if (before > 0 && before < k) cut -= h.edge_weight(e) * h.splitting(e).penalty(before);
      inside_count[e] = before + 1;
      if (before + 1 < k) cut += h.edge_weight(e) * h.splitting(e).penalty(before + 1);
    }
    pi_s += pi[v];
    if (j + 1 < n && eig.vector[order[j + 1]] == eig.vector[v]) {
      continue;  // not a distinct threshold
    }
    const double phi = cut / std::min(pi_s, pi.total() - pi_s);
    if (phi < best.phi) {
      best.phi = phi;
      best_prefix = j + 1;
    }
  }
  if (best_prefix == 0) {
    // Constant eigenvector; fall back to the first node.
    best_prefix = 1;
  }
  best.set.assign(order.begin(), order.begin() + best_prefix);
  std::sort(best.set.begin(), best.set.end());
  best.phi = pi_expansion(h, pi, best.set);
  return best;
}

}  // namespace hcm
