#include "hcm/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hcm/errors.hpp"

namespace hcm {

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : n_(num_nodes), source_(source), sink_(sink) {
  if (num_nodes < 2 || source == sink || source < 0 || sink < 0 ||
      source >= num_nodes || sink >= num_nodes) {
    throw_error(ErrorKind::InvalidInput, "flow network needs distinct source and sink");
  }
}

int FlowNetwork::add_arc(int from, int to, double capacity) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) {
    throw_error(ErrorKind::InvalidInput, "arc endpoint out of range");
  }
  if (capacity < 0.0) {
    throw_error(ErrorKind::InvalidInput, "arc capacity must be nonnegative");
  }
  arcs_.push_back(Arc{from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

// Removes all flow cycles in place. Sorting the positive-flow adjacency by
// head id keeps the peel order deterministic.
void cancel_cycles(int n, const std::vector<FlowNetwork::Arc>& arcs,
                   std::vector<double>& flow, double eps) {
  std::vector<std::vector<int>> out(n);
  for (size_t a = 0; a < arcs.size(); ++a) {
    if (flow[a] > eps) out[arcs[a].from].push_back(static_cast<int>(a));
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return arcs[a].to != arcs[b].to ? arcs[a].to < arcs[b].to : a < b;
    });
  }
  std::vector<size_t> next(n, 0);
  std::vector<int> state(n, 0);  // 0 fresh, 1 on walk, 2 exhausted
  std::vector<int> walk_nodes;
  std::vector<int> walk_arcs;
  std::vector<int> pos_on_walk(n, -1);

  for (int start = 0; start < n; ++start) {
    if (state[start] == 2) continue;
    walk_nodes.assign(1, start);
    walk_arcs.clear();
    state[start] = 1;
    pos_on_walk[start] = 0;
    while (!walk_nodes.empty()) {
      const int u = walk_nodes.back();
      bool advanced = false;
      while (next[u] < out[u].size()) {
        const int a = out[u][next[u]];
        if (flow[a] <= eps) {
          ++next[u];
          continue;
        }
        const int v = arcs[a].to;
        if (state[v] == 1) {
          // Found a cycle: subtract its bottleneck.
          const int cycle_from = pos_on_walk[v];
          double delta = flow[a];
          for (size_t j = cycle_from; j < walk_arcs.size(); ++j) {
            delta = std::min(delta, flow[walk_arcs[j]]);
          }
          flow[a] = (delta == flow[a]) ? 0.0 : flow[a] - delta;
          for (size_t j = cycle_from; j < walk_arcs.size(); ++j) {
            const int c = walk_arcs[j];
            flow[c] = (delta == flow[c]) ? 0.0 : flow[c] - delta;
          }
          // Unwind back to the cycle entry and resume from there.
          while (static_cast<int>(walk_nodes.size()) > cycle_from + 1) {
            state[walk_nodes.back()] = 0;
            pos_on_walk[walk_nodes.back()] = -1;
            walk_nodes.pop_back();
            walk_arcs.pop_back();
          }
          advanced = true;
          break;
        }
        if (state[v] == 2) {
          ++next[u];
          continue;
        }
        walk_nodes.push_back(v);
        walk_arcs.push_back(a);
        state[v] = 1;
        pos_on_walk[v] = static_cast<int>(walk_nodes.size()) - 1;
        advanced = true;
        break;
      }
      if (!advanced) {
        state[u] = 2;
        pos_on_walk[u] = -1;
        walk_nodes.pop_back();
        if (!walk_arcs.empty()) walk_arcs.pop_back();
      }
    }
  }
}

class PushRelabel {
 public:
  explicit PushRelabel(const FlowNetwork& net) : net_(net), n_(net.num_nodes()) {
    const auto& input = net.arcs();
    res_.resize(2 * input.size());
    head_.resize(2 * input.size());
    adj_.assign(n_, {});
    double max_cap = 0.0;
    for (size_t i = 0; i < input.size(); ++i) {
      res_[2 * i] = input[i].capacity;
      res_[2 * i + 1] = 0.0;
      head_[2 * i] = input[i].to;
      head_[2 * i + 1] = input[i].from;
      adj_[input[i].from].push_back(static_cast<int>(2 * i));
      adj_[input[i].to].push_back(static_cast<int>(2 * i + 1));
      max_cap = std::max(max_cap, input[i].capacity);
    }
    eps_ = 1e-12 * std::max(1.0, max_cap);
    excess_.assign(n_, 0.0);
    height_.assign(n_, 0);
    current_.assign(n_, 0);
  }

  FlowResult solve() {
    run_phase_one();
    FlowResult result;
    result.value = excess_[net_.sink()];
    result.arc_flow = extract_flow();
    settle_excess(result.arc_flow);
    result.min_cut = residual_reachable(result.arc_flow);
    return result;
  }

 private:
  static constexpr double kGlobalUpdateFrequency = 0.5;

  void run_phase_one() {
    const int s = net_.source();
    const int t = net_.sink();
    buckets_.assign(n_ + 1, {});
    count_.assign(n_ + 1, 0);
    global_relabel();

    // Saturate every source arc.
    for (int a : adj_[s]) {
      if ((a & 1) != 0 || res_[a] <= 0.0) continue;
      const int v = head_[a];
      const double delta = res_[a];
      res_[a] = 0.0;
      res_[a ^ 1] += delta;
      const bool was_inactive = excess_[v] <= eps_;
      excess_[v] += delta;
      if (was_inactive && v != s && v != t && height_[v] < n_) activate(v);
    }

    const double work_limit =
        (6.0 * n_ + static_cast<double>(net_.arcs().size())) / kGlobalUpdateFrequency;
    double work = 0.0;
    while (max_active_ >= 0) {
      if (buckets_[max_active_].empty()) {
        --max_active_;
        continue;
      }
      const int u = buckets_[max_active_].back();
      buckets_[max_active_].pop_back();
      if (u == s || u == t) continue;
      if (height_[u] != max_active_ || height_[u] >= n_ || excess_[u] <= eps_) continue;
      work += discharge(u);
      if (work > work_limit) {
        global_relabel();
        work = 0.0;
      }
    }
  }

  void push(int u, int a) {
    const int v = head_[a];
    const double delta = std::min(excess_[u], res_[a]);
    res_[a] = (delta == res_[a]) ? 0.0 : res_[a] - delta;
    res_[a ^ 1] += delta;
    excess_[u] = (delta == excess_[u]) ? 0.0 : excess_[u] - delta;
    const bool was_inactive = excess_[v] <= eps_;
    excess_[v] += delta;
    if (was_inactive && v != net_.source() && v != net_.sink() && height_[v] < n_) {
      activate(v);
    }
  }

  void activate(int v) {
    buckets_[height_[v]].push_back(v);
    max_active_ = std::max(max_active_, height_[v]);
  }

  // Discharges u until its excess is gone or it is lifted out of reach of
  // the sink. Heights only grow, so u stays the highest active node and can
  // keep the processor. Returns the relabel work done.
  double discharge(int u) {
    double work = 0.0;
    while (excess_[u] > eps_ && height_[u] < n_) {
      if (current_[u] >= adj_[u].size()) {
        work += relabel(u);
        continue;
      }
      const int a = adj_[u][current_[u]];
      if (res_[a] > 0.0 && height_[u] == height_[head_[a]] + 1) {
        push(u, a);
      } else {
        ++current_[u];
      }
    }
    return work;
  }

  double relabel(int u) {
    const int old_height = height_[u];
    --count_[old_height];
    int min_height = 2 * n_;
    size_t min_arc = 0;
    for (size_t idx = 0; idx < adj_[u].size(); ++idx) {
      const int a = adj_[u][idx];
      if (res_[a] > 0.0 && height_[head_[a]] < min_height) {
        min_height = height_[head_[a]];
        min_arc = idx;
      }
    }
    height_[u] = std::min(min_height + 1, n_);
    current_[u] = min_arc;
    if (height_[u] < n_) ++count_[height_[u]];
    if (count_[old_height] == 0 && old_height < n_) gap(old_height);
    return 12.0 + static_cast<double>(adj_[u].size());
  }

  // A height with no nodes separates everything above it from the sink.
  void gap(int empty_height) {
    for (int v = 0; v < n_; ++v) {
      if (v == net_.source() || v == net_.sink()) continue;
      if (height_[v] > empty_height && height_[v] < n_) {
        --count_[height_[v]];
        height_[v] = n_;
      }
    }
  }

  // BFS from the sink through reverse residual arcs; unreachable nodes are
  // lifted out of the active range.
  void global_relabel() {
    const int t = net_.sink();
    std::fill(count_.begin(), count_.end(), 0);
    for (auto& b : buckets_) b.clear();
    max_active_ = -1;
    std::vector<int> dist(n_, n_);
    dist[t] = 0;
    std::queue<int> q;
    q.push(t);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int b : adj_[v]) {
        const int u = head_[b];
        if (dist[u] < n_) continue;
        // The partner arc runs u -> v; it must have residual capacity.
        if (res_[b ^ 1] > 0.0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      height_[v] = dist[v];
      current_[v] = 0;
      if (v == net_.source() || v == net_.sink()) continue;
      if (height_[v] < n_) {
        ++count_[height_[v]];
        if (excess_[v] > eps_) activate(v);
      }
    }
    height_[net_.source()] = n_;
  }

  std::vector<double> extract_flow() const {
    const auto& input = net_.arcs();
    std::vector<double> flow(input.size());
    for (size_t i = 0; i < input.size(); ++i) {
      flow[i] = std::max(0.0, input[i].capacity - res_[2 * i]);
    }
    return flow;
  }

  // Converts the max preflow into a max flow: peels cycles, then walks each
  // stranded excess back to the source along positive-flow arcs.
  void settle_excess(std::vector<double>& flow) {
    const auto& input = net_.arcs();
    cancel_cycles(n_, input, flow, eps_);
    std::vector<std::vector<int>> in(n_);
    for (size_t a = 0; a < input.size(); ++a) {
      if (flow[a] > eps_) in[input[a].to].push_back(static_cast<int>(a));
    }
    for (auto& list : in) {
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return input[a].from != input[b].from ? input[a].from < input[b].from : a < b;
      });
    }
    const int s = net_.source();
    const int t = net_.sink();
    std::vector<size_t> cursor(n_, 0);
    std::vector<int> path;
    for (int v = 0; v < n_; ++v) {
      if (v == s || v == t) continue;
      while (excess_[v] > eps_) {
        path.clear();
        int u = v;
        while (u != s) {
          bool found = false;
          while (cursor[u] < in[u].size()) {
            const int a = in[u][cursor[u]];
            if (flow[a] > eps_) {
              path.push_back(a);
              u = input[a].from;
              found = true;
              break;
            }
            ++cursor[u];
          }
          if (!found) break;
        }
        if (u != s) break;  // imbalance below tolerance, nothing to return
        double delta = excess_[v];
        for (int a : path) delta = std::min(delta, flow[a]);
        for (int a : path) flow[a] = (delta == flow[a]) ? 0.0 : flow[a] - delta;
        excess_[v] = (delta == excess_[v]) ? 0.0 : excess_[v] - delta;
      }
    }
  }

  std::vector<int> residual_reachable(const std::vector<double>& flow) const {
    const auto& input = net_.arcs();
    std::vector<std::vector<int>> out(n_);
    for (size_t a = 0; a < input.size(); ++a) {
      if (input[a].capacity - flow[a] > eps_) {
        out[input[a].from].push_back(input[a].to);
      }
      if (flow[a] > eps_) {
        out[input[a].to].push_back(input[a].from);
      }
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{net_.source()};
    seen[net_.source()] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : out[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; v < n_; ++v) {
      if (seen[v]) cut.push_back(v);
    }
    return cut;
  }

  const FlowNetwork& net_;
  int n_;
  double eps_ = 0.0;
  std::vector<double> res_;
  std::vector<int> head_;
  std::vector<std::vector<int>> adj_;
  std::vector<double> excess_;
  std::vector<int> height_;
  std::vector<size_t> current_;
  std::vector<std::vector<int>> buckets_;
  std::vector<int> count_;
  int max_active_ = -1;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  PushRelabel solver(net);
  return solver.solve();
}

PathDecomposition decompose(const FlowNetwork& net, const FlowResult& result) {
  const auto& arcs = net.arcs();
  const int n = net.num_nodes();
  const int s = net.source();
  const int t = net.sink();

  std::vector<double> balance(n, 0.0);
  double scale = 0.0;
  for (size_t a = 0; a < arcs.size(); ++a) {
    balance[arcs[a].from] -= result.arc_flow[a];
    balance[arcs[a].to] += result.arc_flow[a];
    scale = std::max(scale, result.arc_flow[a]);
  }
  const double conservation_tol = 1e-9 * std::abs(result.value) + 1e-12;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    if (std::abs(balance[v]) > conservation_tol) {
      throw_error(ErrorKind::ConservationViolation,
                  "node " + std::to_string(v) + " has imbalance " +
                      std::to_string(balance[v]));
    }
  }

  std::vector<double> flow(result.arc_flow);
  const double eps = 1e-12 * std::max(1.0, scale);
  cancel_cycles(n, arcs, flow, eps);

  std::vector<std::vector<int>> out(n);
  for (size_t a = 0; a < arcs.size(); ++a) {
    if (flow[a] > eps) out[arcs[a].from].push_back(static_cast<int>(a));
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return arcs[a].to != arcs[b].to ? arcs[a].to < arcs[b].to : a < b;
    });
  }
  std::vector<size_t> cursor(n, 0);

  auto next_arc = [&](int u) -> int {
    while (cursor[u] < out[u].size()) {
      const int a = out[u][cursor[u]];
      if (flow[a] > eps) return a;
      ++cursor[u];
    }
    return -1;
  };

  PathDecomposition decomposition;
  while (true) {
    if (next_arc(s) < 0) break;
    std::vector<int> path_arcs;
    std::vector<int> path_nodes{s};
    int u = s;
    while (u != t) {
      const int a = next_arc(u);
      if (a < 0) break;  // dust-level dead end; drop the partial walk
      path_arcs.push_back(a);
      u = arcs[a].to;
      path_nodes.push_back(u);
    }
    double delta = std::numeric_limits<double>::infinity();
    for (int a : path_arcs) delta = std::min(delta, flow[a]);
    for (int a : path_arcs) flow[a] = (delta == flow[a]) ? 0.0 : flow[a] - delta;
    if (u == t && delta > 0.0 && std::isfinite(delta)) {
      decomposition.paths.push_back(FlowPath{std::move(path_nodes), delta});
    }
  }
  return decomposition;
}

}  // namespace hcm
