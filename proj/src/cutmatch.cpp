#include "hcm/cutmatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include "hcm/errors.hpp"
#include "hcm/reduction.hpp"

namespace hcm {

namespace {

// Small deterministic generator so splits do not depend on the standard
// library's distribution implementations.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }
};

// Sorts nodes by (key, id), walks to the weighted median, and returns the
// lighter of prefix and suffix (the prefix on ties).
NodeSet weighted_median_split(const std::vector<double>& keys, const NodeWeights& pi) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
  });
  const double half = pi.total() / 2.0;
  double cum = 0.0;
  int split = 0;
  for (int j = 0; j < n; ++j) {
    cum += pi[order[j]];
    if (cum >= half) {
      split = j + 1;
      break;
    }
  }
  if (split >= n) split = n - 1;
  if (split <= 0) split = 1;
  NodeSet prefix(order.begin(), order.begin() + split);
  const double prefix_pi = pi.sum(prefix);
  if (prefix_pi <= pi.total() - prefix_pi) {
    std::sort(prefix.begin(), prefix.end());
    return prefix;
  }
  NodeSet suffix(order.begin() + split, order.end());
  std::sort(suffix.begin(), suffix.end());
  return suffix;
}

NodeSet component_bipartition(const std::vector<std::vector<int>>& components,
                              const NodeWeights& pi) {
  std::vector<int> order(components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pi.sum(components[a]) > pi.sum(components[b]);
  });
  NodeSet side_a, side_b;
  double pi_a = 0.0, pi_b = 0.0;
  for (int c : order) {
    const double w = pi.sum(components[c]);
    if (pi_a <= pi_b) {
      side_a.insert(side_a.end(), components[c].begin(), components[c].end());
      pi_a += w;
    } else {
      side_b.insert(side_b.end(), components[c].begin(), components[c].end());
      pi_b += w;
    }
  }
  NodeSet lighter = pi_a <= pi_b ? side_a : side_b;
  std::sort(lighter.begin(), lighter.end());
  return lighter;
}

}  // namespace

double lower_bound(const CutMatchState& state) { return state.lower_bound; }

double approx_ratio(const CutMatchState& state) {
  if (state.lower_bound <= 0.0) return std::numeric_limits<double>::infinity();
  return state.best_phi / state.lower_bound;
}

NodeSet initial_bisection(const NodeWeights& pi, std::uint64_t seed) {
  const int n = pi.size();
  if (n < 2) {
    throw_error(ErrorKind::InvalidInput, "bisection needs at least two nodes");
  }
  SplitMix rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<double> keys(n);
  for (int pos = 0; pos < n; ++pos) keys[perm[pos]] = pos;
  return weighted_median_split(keys, pi);
}

NodeSet spectral_partition(const SparseAdjacency& union_graph, const NodeWeights& pi,
                           const std::vector<double>* warm_start, double* lambda2_out,
                           std::vector<double>* eigenvector_out) {
  const auto components = union_graph.components();
  if (components.size() > 1) {
    if (lambda2_out) *lambda2_out = 0.0;
    if (eigenvector_out) eigenvector_out->clear();
    return component_bipartition(components, pi);
  }
  EigenPair eig = second_smallest_normalized_laplacian(union_graph, pi.values(),
                                                       warm_start);
  if (lambda2_out) *lambda2_out = eig.value;
  if (eigenvector_out) *eigenvector_out = eig.vector;
  return weighted_median_split(eig.vector, pi);
}

NodeSet heat_kernel_partition(const SparseAdjacency& union_graph, const NodeWeights& pi,
                              std::uint64_t seed, double tau, int order) {
  const int n = union_graph.n;
  SplitMix rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = 2.0 * rng.uniform() - 1.0;

  std::vector<double> null_dir(n);
  for (int i = 0; i < n; ++i) null_dir[i] = std::sqrt(pi[i]);
  double null_norm = 0.0;
  for (double v : null_dir) null_norm += v * v;
  null_norm = std::sqrt(null_norm);
  for (double& v : null_dir) v /= null_norm;
  auto deflate = [&](std::vector<double>& vec) {
    double proj = 0.0;
    for (int i = 0; i < n; ++i) proj += vec[i] * null_dir[i];
    for (int i = 0; i < n; ++i) vec[i] -= proj * null_dir[i];
  };
  deflate(x);

  std::vector<double> inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(pi[i]);
  std::vector<double> term(x), scratch(n), az(n), result(x);
  for (int j = 1; j <= order; ++j) {
    for (int i = 0; i < n; ++i) scratch[i] = term[i] * inv_sqrt[i];
    union_graph.multiply(scratch, az);
    for (int i = 0; i < n; ++i) {
      const double lap = (union_graph.degree[i] * scratch[i] - az[i]) * inv_sqrt[i];
      term[i] = -tau / j * lap;
    }
    for (int i = 0; i < n; ++i) result[i] += term[i];
  }
  deflate(result);
  return weighted_median_split(result, pi);
}

CutMatchState run_cut_match(const Hypergraph& h, const NodeWeights& pi,
                            const CutMatchOptions& options) {
  using clock = std::chrono::steady_clock;
  const int n = h.num_nodes();
  if (n < 2) {
    throw_error(ErrorKind::InvalidInput, "cut-matching needs at least two nodes");
  }
  const int t_max = options.t_max > 0
                        ? options.t_max
                        : static_cast<int>(std::ceil(5.0 * std::log2(std::max(2, n))));

  const ReducedGraph reduced = build_preserver(h);
  CutMatchState state;
  std::map<std::pair<int, int>, double> union_map;
  std::vector<double> warm;
  SplitMix reseeder(options.seed ^ 0x5bf0363546e42a35ULL);

  NodeSet r = initial_bisection(pi, options.seed);
  for (int t = 1; t <= t_max; ++t) {
    const auto started = clock::now();
    CutOrEmbedResult round =
        refine_cut_or_embed(h, reduced, pi, r, options.keep_certificates);

    state.alphas.push_back(round.alpha);
    state.gamma += 1.0 / round.alpha;
    if (round.alpha < state.best_phi) {
      state.best_phi = round.alpha;
      state.best_set = round.cut_set;
    }
    for (const auto& demand : round.certificate.demands) {
      const auto key = std::minmax(demand.r, demand.v);
      union_map[{key.first, key.second}] += demand.amount;
    }
    if (options.keep_certificates) {
      state.certificates.push_back(round.certificate);
    }

    std::vector<std::tuple<int, int, double>> edges;
    edges.reserve(union_map.size());
    for (const auto& [key, w] : union_map) {
      edges.emplace_back(key.first, key.second, w);
    }
    SparseAdjacency union_graph = SparseAdjacency::from_edges(n, edges);

    // The spectral pair feeds the lower bound every iteration; the spectral
    // player reuses the resulting split as its proposal.
    double lambda2 = 0.0;
    NodeSet spectral_r = spectral_partition(
        union_graph, pi, warm.empty() ? nullptr : &warm, &lambda2, &state.eigenvector);
    warm = state.eigenvector;
    NodeSet next_r;
    switch (options.player) {
      case CutPlayer::Spectral:
        next_r = std::move(spectral_r);
        break;
      case CutPlayer::HeatKernel:
        next_r = heat_kernel_partition(union_graph, pi, reseeder.next(),
                                       options.heat_tau, options.heat_order);
        break;
      case CutPlayer::Random:
        next_r = initial_bisection(pi, reseeder.next());
        break;
    }
    state.lambda2 = lambda2;
    state.lower_bound = std::max(state.lower_bound, lambda2 / (2.0 * state.gamma));
    state.iterations = t;

    IterationRecord record;
    record.iteration = t;
    record.alpha = round.alpha;
    record.phi = round.alpha;
    record.lambda2 = lambda2;
    record.gamma = state.gamma;
    record.lower_bound = state.lower_bound;
    record.rho = approx_ratio(state);
    record.wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - started).count();
    state.trace.push_back(record);

    r = std::move(next_r);
  }

  state.union_edges.reserve(union_map.size());
  for (const auto& [key, w] : union_map) {
    state.union_edges.emplace_back(key.first, key.second, w);
  }
  return state;
}

}  // namespace hcm
