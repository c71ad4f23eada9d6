#include "hcm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "hcm/errors.hpp"

namespace hcm {

BruteForceResult brute_min_expansion(const Hypergraph& h, const NodeWeights& pi,
                                     int node_cap) {
  const int n = h.num_nodes();
  if (n > node_cap) {
    throw_error(ErrorKind::TooLarge, "brute-force expansion capped at " +
                                         std::to_string(node_cap) + " nodes");
  }
  if (n < 2) {
    throw_error(ErrorKind::EmptySide, "expansion needs at least two nodes");
  }

  // Enumerate the side excluding node 0 in gray-code order, maintaining the
  // per-edge intersection counts and the cut value incrementally.
  const int bits = n - 1;
  std::vector<int> inside_count(h.num_edges(), 0);
  std::vector<char> in_s(n, 0);
  double cut = 0.0;
  double pi_s = 0.0;

  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;

  auto flip = [&](int v) {
    for (int e : h.node_to_edges()[v]) {
      const int k = static_cast<int>(h.edge(e).size());
      const int before = inside_count[e];
      if (before > 0 && before < k) cut -= h.edge_weight(e) * h.splitting(e).penalty(before);
      const int after = in_s[v] ? before - 1 : before + 1;
      inside_count[e] = after;
      if (after > 0 && after < k) cut += h.edge_weight(e) * h.splitting(e).penalty(after);
    }
    pi_s += in_s[v] ? -pi[v] : pi[v];
    in_s[v] = !in_s[v];
  };

  std::uint64_t gray_prev = 0;
  const std::uint64_t limit = 1ULL << bits;
  for (std::uint64_t counter = 1; counter < limit; ++counter) {
    const std::uint64_t gray = counter ^ (counter >> 1);
    const std::uint64_t changed = gray ^ gray_prev;
    gray_prev = gray;
    flip(static_cast<int>(std::countr_zero(changed)) + 1);

    const double denom = std::min(pi_s, pi.total() - pi_s);
    const double phi = cut / denom;
    if (phi < best) {
      best = phi;
      best_mask = gray;
    } else if (phi == best) {
      auto members = [n](std::uint64_t m) {
        NodeSet s;
        for (int v = 1; v < n; ++v) {
          if (m & (1ULL << (v - 1))) s.push_back(v);
        }
        return s;
      };
      if (members(gray) < members(best_mask)) best_mask = gray;
    }
  }

  BruteForceResult result;
  result.value = best;
  for (int v = 1; v < n; ++v) {
    if (best_mask & (1ULL << (v - 1))) result.set.push_back(v);
  }
  // Recompute directly so the reported value matches a plain evaluation.
  result.value = pi_expansion(h, pi, result.set);
  return result;
}

bool brute_preserver_check(const Hypergraph& h, const ReducedGraph& g, int node_cap) {
  const int n = h.num_nodes();
  if (n > node_cap) {
    throw_error(ErrorKind::TooLarge, "preserver check capped at " +
                                         std::to_string(node_cap) + " nodes");
  }
  const double tol_scale = std::max(1.0, h.max_cut_penalty() * h.num_edges());

  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<char> in_s(g.total_nodes, 0);
    for (int v = 0; v < n; ++v) in_s[v] = (mask >> v) & 1;

    const double hypergraph_cut = h.cut_value(std::vector<char>(in_s.begin(), in_s.begin() + n));

    // Optimal auxiliary placement, gadget by gadget.
    double placement_sum = 0.0;
    for (const auto& gadget : g.gadgets) {
      const auto& members = h.edge(gadget.edge_index);
      int inside = 0;
      for (int v : members) inside += in_s[v] ? 1 : 0;
      const int k = static_cast<int>(members.size());

      // Enumerate the four placements of the auxiliary pair against the
      // gadget's own arcs.
      double local_best = std::numeric_limits<double>::infinity();
      int best_placement = 0;
      for (int placement = 0; placement < 4; ++placement) {
        in_s[gadget.aux_in] = placement & 1;
        in_s[gadget.aux_out] = (placement >> 1) & 1;
        double local = 0.0;
        const int arc_count = 2 * k + 1;
        for (int a = gadget.first_arc; a < gadget.first_arc + arc_count; ++a) {
          const auto& arc = g.arcs[a];
          if (in_s[arc.from] && !in_s[arc.to]) local += arc.weight;
        }
        if (local < local_best) {
          local_best = local;
          best_placement = placement;
        }
      }
      in_s[gadget.aux_in] = best_placement & 1;
      in_s[gadget.aux_out] = (best_placement >> 1) & 1;

      placement_sum += local_best;
      const double closed_form =
          gadget_mincut(gadget.weight, gadget.cap, k, inside);
      if (std::abs(local_best - closed_form) > 1e-9 * tol_scale) return false;
    }

    // Full directed cut with every gadget at its optimal placement.
    double directed_cut = 0.0;
    for (const auto& arc : g.arcs) {
      if (in_s[arc.from] && !in_s[arc.to]) directed_cut += arc.weight;
    }

    if (std::abs(hypergraph_cut - placement_sum) > 1e-9 * tol_scale) return false;
    if (std::abs(hypergraph_cut - directed_cut) > 1e-9 * tol_scale) return false;
  }
  return true;
}

double brute_min_st_cut(const FlowNetwork& net, int node_cap) {
  const int n = net.num_nodes();
  if (n > node_cap) {
    throw_error(ErrorKind::TooLarge, "brute-force min cut capped at " +
                                         std::to_string(node_cap) + " nodes");
  }
  std::vector<int> free_nodes;
  for (int v = 0; v < n; ++v) {
    if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
  }
  const int bits = static_cast<int>(free_nodes.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<char> in_s(n, 0);
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    std::fill(in_s.begin(), in_s.end(), 0);
    in_s[net.source()] = 1;
    for (int b = 0; b < bits; ++b) {
      if (mask & (1ULL << b)) in_s[free_nodes[b]] = 1;
    }
    double cut = 0.0;
    for (const auto& arc : net.arcs()) {
      if (in_s[arc.from] && !in_s[arc.to]) cut += arc.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace hcm
