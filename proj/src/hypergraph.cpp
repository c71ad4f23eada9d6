#include "hcm/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcm/errors.hpp"

namespace hcm {

NodeSet complement_set(const NodeSet& s, int n) {
  std::vector<char> in_s(n, 0);
  for (int v : s) in_s[v] = 1;
  NodeSet out;
  out.reserve(n - s.size());
  for (int v = 0; v < n; ++v) {
    if (!in_s[v]) out.push_back(v);
  }
  return out;
}

NodeWeights::NodeWeights(std::vector<double> pi) : pi_(std::move(pi)) {
  total_ = 0.0;
  for (size_t v = 0; v < pi_.size(); ++v) {
    if (!(pi_[v] > 0.0)) {
      throw_error(ErrorKind::InvalidInput,
                  "node weight at node " + std::to_string(v) + " must be positive");
    }
    total_ += pi_[v];
  }
}

NodeWeights NodeWeights::uniform(int n) {
  return NodeWeights(std::vector<double>(n, 1.0));
}

double NodeWeights::sum(std::span<const int> nodes) const {
  double s = 0.0;
  for (int v : nodes) s += pi_[v];
  return s;
}

NodeWeights NodeWeights::scaled(double factor) const {
  std::vector<double> scaled(pi_);
  for (double& v : scaled) v *= factor;
  return NodeWeights(std::move(scaled));
}

double NodeWeights::min_value() const {
  return *std::min_element(pi_.begin(), pi_.end());
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges,
                       std::vector<double> weights,
                       std::vector<SplittingFunction> splitting)
    : n_(n),
      edges_(std::move(edges)),
      weights_(std::move(weights)),
      splitting_(std::move(splitting)) {
  if (weights_.size() != edges_.size() || splitting_.size() != edges_.size()) {
    throw_error(ErrorKind::InvalidInput, "edge, weight and splitting counts differ");
  }
  for (size_t e = 0; e < edges_.size(); ++e) {
    auto& nodes = edges_[e];
    if (static_cast<int>(nodes.size()) < 2 || static_cast<int>(nodes.size()) > n_) {
      throw_error(ErrorKind::InvalidInput,
                  "hyperedge " + std::to_string(e) + " has invalid size " +
                      std::to_string(nodes.size()));
    }
    if (!std::is_sorted(nodes.begin(), nodes.end())) {
      std::sort(nodes.begin(), nodes.end());
    }
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      throw_error(ErrorKind::InvalidInput,
                  "hyperedge " + std::to_string(e) + " repeats a node");
    }
    if (nodes.front() < 0 || nodes.back() >= n_) {
      throw_error(ErrorKind::InvalidInput,
                  "hyperedge " + std::to_string(e) + " has a node id out of range");
    }
    if (splitting_[e].edge_size() != static_cast<int>(nodes.size())) {
      throw_error(ErrorKind::InvalidInput,
                  "splitting function size mismatch on hyperedge " + std::to_string(e));
    }
    if (!(weights_[e] > 0.0)) {
      throw_error(ErrorKind::InvalidInput,
                  "hyperedge " + std::to_string(e) + " must have positive weight");
    }
  }
  node_edges_.assign(n_, {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    for (int v : edges_[e]) node_edges_[v].push_back(static_cast<int>(e));
  }
}

Hypergraph Hypergraph::with_spec(int n, std::vector<std::vector<int>> edges,
                                 std::vector<double> weights,
                                 const SplittingSpec& spec) {
  std::vector<SplittingFunction> splitting;
  splitting.reserve(edges.size());
  for (const auto& e : edges) {
    splitting.push_back(spec.instantiate(static_cast<int>(e.size())));
  }
  return Hypergraph(n, std::move(edges), std::move(weights), std::move(splitting));
}

long long Hypergraph::pin_count() const {
  long long mu = 0;
  for (const auto& e : edges_) mu += static_cast<long long>(e.size());
  return mu;
}

double Hypergraph::max_cut_penalty() const {
  double u = 0.0;
  for (size_t e = 0; e < edges_.size(); ++e) {
    u = std::max(u, weights_[e] * splitting_[e].max_penalty());
  }
  return u;
}

double Hypergraph::min_cut_penalty() const {
  double m = std::numeric_limits<double>::infinity();
  for (size_t e = 0; e < edges_.size(); ++e) {
    const double first = weights_[e] * splitting_[e].penalty(1);
    if (first > 0.0) m = std::min(m, first);
  }
  return m;
}

double Hypergraph::cut_value(const NodeSet& s) const {
  std::vector<char> in_s(n_, 0);
  for (int v : s) in_s[v] = 1;
  return cut_value(in_s);
}

double Hypergraph::cut_value(const std::vector<char>& in_s) const {
  double total = 0.0;
  for (size_t e = 0; e < edges_.size(); ++e) {
    int inside = 0;
    for (int v : edges_[e]) inside += in_s[v] ? 1 : 0;
    if (inside > 0 && inside < static_cast<int>(edges_[e].size())) {
      total += weights_[e] * splitting_[e].penalty(inside);
    }
  }
  return total;
}

Hypergraph Hypergraph::scaled(double weight_factor) const {
  std::vector<double> w(weights_);
  for (double& x : w) x *= weight_factor;
  return Hypergraph(n_, edges_, std::move(w), splitting_);
}

double pi_expansion(const Hypergraph& h, const NodeWeights& pi, const NodeSet& s) {
  if (s.empty() || static_cast<int>(s.size()) >= h.num_nodes()) {
    throw_error(ErrorKind::EmptySide, "pi-expansion needs a nontrivial bipartition");
  }
  const double side = pi.sum(s);
  const double denom = std::min(side, pi.total() - side);
  return h.cut_value(s) / denom;
}

NodeWeights generalized_degrees(const Hypergraph& h) {
  std::vector<double> deg(h.num_nodes(), 0.0);
  for (int e = 0; e < h.num_edges(); ++e) {
    const double unit = h.edge_weight(e) * h.splitting(e).penalty(1);
    for (int v : h.edge(e)) deg[v] += unit;
  }
  for (int v = 0; v < h.num_nodes(); ++v) {
    if (!(deg[v] > 0.0)) {
      throw_error(ErrorKind::IsolatedNode,
                  "node " + std::to_string(v) + " has zero generalized degree");
    }
  }
  return NodeWeights(std::move(deg));
}

NormalizedInstance normalize(const Hypergraph& h, const NodeWeights& pi) {
  ScaleInfo scale;
  const double min_penalty = h.min_cut_penalty();
  if (std::isfinite(min_penalty) && min_penalty > 0.0) {
    scale.weight_factor = 1.0 / min_penalty;
  }
  scale.pi_factor = 1.0 / pi.min_value();
  return NormalizedInstance{h.scaled(scale.weight_factor), pi.scaled(scale.pi_factor),
                            scale};
}

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
  const int n = h.num_nodes();
  std::vector<int> comp(n, -1);
  std::vector<char> edge_seen(h.num_edges(), 0);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    stack.push_back(start);
    comp[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      components[id].push_back(v);
      for (int e : h.node_to_edges()[v]) {
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        for (int u : h.edge(e)) {
          if (comp[u] < 0) {
            comp[u] = id;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

ComponentRestriction largest_component(const Hypergraph& h) {
  auto components = connected_components(h);
  if (components.size() <= 1) {
    return ComponentRestriction{h, [&] {
                                  std::vector<int> ids(h.num_nodes());
                                  std::iota(ids.begin(), ids.end(), 0);
                                  return ids;
                                }(),
                                false};
  }
  auto best = std::max_element(
      components.begin(), components.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<int> old_to_new(h.num_nodes(), -1);
  for (size_t i = 0; i < best->size(); ++i) old_to_new[(*best)[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> edges;
  std::vector<double> weights;
  std::vector<SplittingFunction> splitting;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (old_to_new[h.edge(e).front()] < 0) continue;
    std::vector<int> mapped;
    mapped.reserve(h.edge(e).size());
    for (int v : h.edge(e)) mapped.push_back(old_to_new[v]);
    edges.push_back(std::move(mapped));
    weights.push_back(h.edge_weight(e));
    splitting.push_back(h.splitting(e));
  }
  Hypergraph sub(static_cast<int>(best->size()), std::move(edges), std::move(weights),
                 std::move(splitting));
  return ComponentRestriction{std::move(sub), *best, true};
}

}  // namespace hcm
