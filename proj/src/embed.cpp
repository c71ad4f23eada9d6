#include "hcm/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "hcm/errors.hpp"

namespace hcm {

namespace {
constexpr double kSaturationSlack = 1e-9;

int iteration_cap(const Hypergraph& h, const NodeWeights& pi) {
  const double product =
      std::max(2.0, h.max_cut_penalty() * std::max(1, h.num_edges()) * pi.total());
  return static_cast<int>(std::ceil(std::log2(product))) + 4;
}
}  // namespace

AuxiliaryGraph build_auxiliary(const ReducedGraph& g, const NodeWeights& pi,
                               const NodeSet& r, double alpha) {
  const int n = g.original_nodes;
  if (r.empty()) {
    throw_error(ErrorKind::EmptySide, "bisection side must be nonempty");
  }
  const double pi_r = pi.sum(r);
  const double pi_rbar = pi.total() - pi_r;
  if (pi_r > pi_rbar * (1.0 + 1e-9) + 1e-12) {
    throw_error(ErrorKind::UnbalancedSides,
                "side weight " + std::to_string(pi_r) + " exceeds complement weight " +
                    std::to_string(pi_rbar));
  }
  // Exact ties can land an ulp on either side depending on summation order.
  const double eta = std::min(pi_r / pi_rbar, 1.0);
  const int source = g.total_nodes;
  const int sink = g.total_nodes + 1;
  AuxiliaryGraph aux{FlowNetwork(g.total_nodes + 2, source, sink), alpha, eta, pi_r,
                     n, std::vector<char>(n, 0)};
  for (int v : r) aux.in_r[v] = 1;
  for (const ReducedArc& arc : g.arcs) {
    aux.net.add_arc(arc.from, arc.to, arc.weight / alpha);
  }
  for (int v = 0; v < n; ++v) {
    if (aux.in_r[v]) {
      aux.net.add_arc(source, v, pi[v]);
    } else {
      aux.net.add_arc(v, sink, eta * pi[v]);
    }
  }
  return aux;
}

NodeSet cut_to_set(const AuxiliaryGraph& aux, const std::vector<int>& cut_side) {
  NodeSet s;
  for (int v : cut_side) {
    if (v < aux.original_nodes) s.push_back(v);
  }
  return s;
}

BipartiteCertificate flow_embed(const ReducedGraph& g, const AuxiliaryGraph& aux,
                                const FlowResult& flow, bool keep_paths) {
  if (aux.net.num_nodes() != g.total_nodes + 2) {
    throw_error(ErrorKind::InvalidInput, "auxiliary graph does not match the reduction");
  }
  if (flow.value < aux.pi_r * (1.0 - kSaturationSlack)) {
    throw_error(ErrorKind::NotSaturating,
                "flow value " + std::to_string(flow.value) + " below side weight " +
                    std::to_string(aux.pi_r));
  }
  PathDecomposition paths = decompose(aux.net, flow);
  std::map<std::pair<int, int>, double> merged;
  for (const FlowPath& path : paths.paths) {
    const int r = path.nodes[1];
    const int v = path.nodes[path.nodes.size() - 2];
    merged[{r, v}] += path.amount;
  }
  BipartiteCertificate cert;
  cert.alpha = aux.alpha;
  cert.eta = aux.eta;
  cert.in_r = aux.in_r;
  for (const auto& [key, amount] : merged) {
    cert.demands.push_back(BipartiteCertificate::Demand{key.first, key.second, amount});
  }
  if (keep_paths) cert.paths = std::move(paths);
  return cert;
}

CutOrEmbedResult hyper_cut_or_embed(const Hypergraph& h, const ReducedGraph& g,
                                    const NodeWeights& pi, const NodeSet& r,
                                    bool keep_paths) {
  const int cap = iteration_cap(h, pi);
  const double pi_r = pi.sum(r);
  double alpha = 2.0 / pi.total();
  CutOrEmbedResult result;
  bool have_certificate = false;
  for (int iter = 0; iter < cap; ++iter) {
    AuxiliaryGraph aux = build_auxiliary(g, pi, r, alpha);
    FlowResult flow = max_flow(aux.net);
    ++result.flow_solves;
    if (flow.value >= pi_r * (1.0 - kSaturationSlack)) {
      result.certificate = flow_embed(g, aux, flow, keep_paths);
      result.alpha = alpha;
      have_certificate = true;
      alpha *= 2.0;
    } else {
      if (!have_certificate) {
        throw_error(ErrorKind::InternalBoundExceeded,
                    "first iteration failed to saturate");
      }
      result.cut_set = cut_to_set(aux, flow.min_cut);
      return result;
    }
  }
  throw_error(ErrorKind::InternalBoundExceeded,
              "no cut found after " + std::to_string(cap) + " doublings");
}

CutOrEmbedResult refine_cut_or_embed(const Hypergraph& h, const ReducedGraph& g,
                                     const NodeWeights& pi, const NodeSet& r,
                                     bool keep_paths) {
  const int cap = iteration_cap(h, pi);
  const double pi_r = pi.sum(r);
  CutOrEmbedResult result;
  result.cut_set = r;
  double alpha = pi_expansion(h, pi, r);
  for (int iter = 0; iter < cap; ++iter) {
    AuxiliaryGraph aux = build_auxiliary(g, pi, r, alpha);
    FlowResult flow = max_flow(aux.net);
    ++result.flow_solves;
    if (flow.value < pi_r * (1.0 - kSaturationSlack)) {
      NodeSet improved = cut_to_set(aux, flow.min_cut);
      const double improved_phi = pi_expansion(h, pi, improved);
      result.cut_set = std::move(improved);
      alpha = improved_phi;
    } else {
      result.certificate = flow_embed(g, aux, flow, keep_paths);
      result.alpha = alpha;
      return result;
    }
  }
  throw_error(ErrorKind::InternalBoundExceeded,
              "no saturating round after " + std::to_string(cap) + " refinements");
}

double verify_embedding(const ReducedGraph& g, const BipartiteCertificate& cert,
                        const NodeSet& s) {
  if (!cert.paths.has_value()) {
    throw_error(ErrorKind::MissingDecomposition,
                "certificate was built without retained paths");
  }
  const int n_total = g.total_nodes;
  std::unordered_map<std::int64_t, int> arc_of;
  arc_of.reserve(g.arcs.size() * 2);
  for (size_t a = 0; a < g.arcs.size(); ++a) {
    const auto& arc = g.arcs[a];
    arc_of[static_cast<std::int64_t>(arc.from) * n_total + arc.to] =
        static_cast<int>(a);
  }
  auto arc_index = [&](int u, int v) {
    const auto it = arc_of.find(static_cast<std::int64_t>(u) * n_total + v);
    if (it == arc_of.end()) {
      throw_error(ErrorKind::InvalidInput, "missing reduced arc on a routed path");
    }
    return it->second;
  };

  std::vector<char> in_s(g.original_nodes, 0);
  for (int v : s) in_s[v] = 1;

  std::vector<double> load(g.arcs.size(), 0.0);
  for (const FlowPath& path : cert.paths->paths) {
    // Stored paths traverse source ... sink; the interior alternates between
    // original nodes and auxiliary pairs.
    const auto& nodes = path.nodes;
    const size_t len = nodes.size() - 2;
    if (len < 4 || len % 3 != 1) {
      throw_error(ErrorKind::InvalidInput, "malformed certificate path");
    }
    const int r = nodes[1];
    const int v = nodes[nodes.size() - 2];
    if (in_s[r] == in_s[v]) continue;  // pair does not cross {S, complement}
    if (in_s[r]) {
      for (size_t i = 1; i + 2 < nodes.size(); ++i) {
        load[arc_index(nodes[i], nodes[i + 1])] += path.amount;
      }
    } else {
      // Reverse through the mirrored gadget arcs.
      const size_t hops = len / 3;
      for (size_t j = hops; j >= 1; --j) {
        const int p_prev = nodes[1 + 3 * (j - 1)];
        const int aux_in = nodes[1 + 3 * j - 2];
        const int aux_out = nodes[1 + 3 * j - 1];
        const int p_cur = nodes[1 + 3 * j];
        load[arc_index(p_cur, aux_in)] += path.amount;
        load[arc_index(aux_in, aux_out)] += path.amount;
        load[arc_index(aux_out, p_prev)] += path.amount;
      }
    }
  }
  double congestion = 0.0;
  for (size_t a = 0; a < load.size(); ++a) {
    if (load[a] > 0.0) {
      congestion = std::max(congestion, load[a] / g.arcs[a].weight);
    }
  }
  return congestion;
}

}  // namespace hcm
