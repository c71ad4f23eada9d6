#include "hcm/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "hcm/errors.hpp"

namespace hcm {

std::vector<Gadget> decompose_gadgets(const SplittingFunction& sf, double edge_weight) {
  const auto& w = sf.penalties();
  const int r = static_cast<int>(w.size());
  std::vector<double> coeff(r, 0.0);
  double max_coeff = 0.0;
  for (int j = 1; j <= r; ++j) {
    const double delta_j = w[j - 1] - (j >= 2 ? w[j - 2] : 0.0);
    const double delta_next = j < r ? w[j] - w[j - 1] : 0.0;
    coeff[j - 1] = edge_weight * (delta_j - delta_next);
    max_coeff = std::max(max_coeff, std::abs(coeff[j - 1]));
  }
  const double drop_tol = 1e-12 * std::max(1.0, max_coeff);
  std::vector<Gadget> gadgets;
  for (int j = 1; j <= r; ++j) {
    if (coeff[j - 1] < -drop_tol) {
      throw_error(ErrorKind::SubmodularityViolation,
                  "gadget coefficient " + std::to_string(j) + " is negative");
    }
    if (coeff[j - 1] > drop_tol) {
      gadgets.push_back(Gadget{coeff[j - 1], j});
    }
  }
  return gadgets;
}

double gadget_mincut(double a, int b, int k, int i) {
  return a * std::min({i, k - i, b});
}

ReducedGraph build_preserver(const Hypergraph& h) {
  ReducedGraph g;
  g.original_nodes = h.num_nodes();
  int next_node = h.num_nodes();
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto gadgets = decompose_gadgets(h.splitting(e), h.edge_weight(e));
    const auto& nodes = h.edge(e);
    for (const Gadget& gadget : gadgets) {
      ReducedGraph::GadgetInstance inst;
      inst.edge_index = e;
      inst.aux_in = next_node++;
      inst.aux_out = next_node++;
      inst.weight = gadget.weight;
      inst.cap = gadget.cap;
      inst.first_arc = static_cast<int>(g.arcs.size());
      for (int v : nodes) {
        g.arcs.push_back(ReducedArc{v, inst.aux_in, gadget.weight});
      }
      for (int v : nodes) {
        g.arcs.push_back(ReducedArc{inst.aux_out, v, gadget.weight});
      }
      g.arcs.push_back(ReducedArc{inst.aux_in, inst.aux_out, gadget.weight * gadget.cap});
      g.gadgets.push_back(inst);
    }
  }
  g.total_nodes = next_node;
  return g;
}

}  // namespace hcm
