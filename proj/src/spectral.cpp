#include "hcm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

#include "hcm/errors.hpp"

namespace hcm {

SparseAdjacency SparseAdjacency::from_edges(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::map<std::pair<int, int>, double> merged;
  for (const auto& [u, v, w] : edges) {
    if (u == v || w == 0.0) continue;
    merged[{std::min(u, v), std::max(u, v)}] += w;
  }
  SparseAdjacency adj;
  adj.n = n;
  adj.row_ptr.assign(n + 1, 0);
  for (const auto& [key, w] : merged) {
    ++adj.row_ptr[key.first + 1];
    ++adj.row_ptr[key.second + 1];
  }
  for (int i = 0; i < n; ++i) adj.row_ptr[i + 1] += adj.row_ptr[i];
  adj.col.resize(adj.row_ptr.back());
  adj.val.resize(adj.row_ptr.back());
  std::vector<int> cursor(adj.row_ptr.begin(), adj.row_ptr.end() - 1);
  for (const auto& [key, w] : merged) {
    adj.col[cursor[key.first]] = key.second;
    adj.val[cursor[key.first]++] = w;
    adj.col[cursor[key.second]] = key.first;
    adj.val[cursor[key.second]++] = w;
  }
  adj.degree.assign(n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int k = adj.row_ptr[u]; k < adj.row_ptr[u + 1]; ++k) {
      adj.degree[u] += adj.val[k];
    }
  }
  return adj;
}

void SparseAdjacency::multiply(const std::vector<double>& x, std::vector<double>& y) const {
  y.assign(n, 0.0);
  for (int u = 0; u < n; ++u) {
    double acc = 0.0;
    for (int k = row_ptr[u]; k < row_ptr[u + 1]; ++k) {
      acc += val[k] * x[col[k]];
    }
    y[u] = acc;
  }
}

std::vector<std::vector<int>> SparseAdjacency::components() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int k = row_ptr[u]; k < row_ptr[u + 1]; ++k) {
        if (comp[col[k]] < 0) {
          comp[col[k]] = id;
          stack.push_back(col[k]);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

TridiagonalEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> off) {
  const int m = static_cast<int>(d.size());
  std::vector<double> e(m, 0.0);
  for (int i = 0; i + 1 < m; ++i) e[i] = off[i];
  std::vector<std::vector<double>> z(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) z[i][i] = 1.0;

  for (int l = 0; l < m; ++l) {
    int iter = 0;
    int split;
    do {
      for (split = l; split < m - 1; ++split) {
        const double dd = std::abs(d[split]) + std::abs(d[split + 1]);
        if (std::abs(e[split]) <= 1e-15 * dd) break;
      }
      if (split != l) {
        if (iter++ == 60) {
          throw_error(ErrorKind::EigenNoConvergence, "tridiagonal QL stalled");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = split - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[split] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < m; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[split] = 0.0;
      }
    } while (split != l);
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.resize(m);
  out.vectors.assign(m, std::vector<double>(m));
  for (int j = 0; j < m; ++j) {
    out.values[j] = d[order[j]];
    for (int k = 0; k < m; ++k) out.vectors[j][k] = z[k][order[j]];
  }
  return out;
}

namespace {

// Deterministic start vector, independent of any global RNG.
std::vector<double> pseudo_random_vector(int n, std::uint64_t salt = 0) {
  std::vector<double> x(n);
  std::uint64_t state =
      0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n) + salt * 0x2545f4914f6cdd1dULL;
  for (int i = 0; i < n; ++i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    x[i] = static_cast<double>(state % 2000001) / 1000000.0 - 1.0;
  }
  return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace

EigenPair second_smallest_normalized_laplacian(const SparseAdjacency& adj,
                                               const std::vector<double>& weights,
                                               const std::vector<double>* warm_start,
                                               double tol, int max_matvecs) {
  const int n = adj.n;
  if (n < 2) {
    throw_error(ErrorKind::InvalidInput, "eigensolver needs at least two nodes");
  }
  std::vector<double> inv_sqrt_w(n);
  std::vector<double> null_dir(n);
  for (int i = 0; i < n; ++i) {
    inv_sqrt_w[i] = 1.0 / std::sqrt(weights[i]);
    null_dir[i] = std::sqrt(weights[i]);
  }
  const double null_norm = norm(null_dir);
  for (double& v : null_dir) v /= null_norm;

  double sigma = 1.0;
  for (int i = 0; i < n; ++i) {
    sigma = std::max(sigma, 2.0 * adj.degree[i] / weights[i]);
  }
  sigma += 1.0;

  int matvecs = 0;
  std::vector<double> scratch(n), az(n);
  // y = (sigma I - Lnorm) x
  auto apply_shifted = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < n; ++i) scratch[i] = x[i] * inv_sqrt_w[i];
    adj.multiply(scratch, az);
    for (int i = 0; i < n; ++i) {
      const double lap = (adj.degree[i] * scratch[i] - az[i]) * inv_sqrt_w[i];
      y[i] = sigma * x[i] - lap;
    }
    ++matvecs;
  };
  auto apply_laplacian = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < n; ++i) scratch[i] = x[i] * inv_sqrt_w[i];
    adj.multiply(scratch, az);
    for (int i = 0; i < n; ++i) {
      y[i] = (adj.degree[i] * scratch[i] - az[i]) * inv_sqrt_w[i];
    }
    ++matvecs;
  };
  auto deflate = [&](std::vector<double>& x) { axpy(-dot(null_dir, x), null_dir, x); };

  std::vector<double> start;
  if (warm_start && static_cast<int>(warm_start->size()) == n) {
    // A warm start that happens to be an exact eigenvector of the updated
    // operator would trap the Krylov space; blend in a generic direction.
    start = *warm_start;
    const double scale = 0.05 * std::max(norm(start), 1e-30);
    const auto noise = pseudo_random_vector(n, 1);
    for (int i = 0; i < n; ++i) start[i] += scale * noise[i];
  } else {
    start = pseudo_random_vector(n);
  }
  const int deflated_dim = n - 1;
  const int max_basis = std::min(deflated_dim, 200);
  std::uint64_t salt = 2;

  while (true) {
    deflate(start);
    double start_norm = norm(start);
    if (start_norm < 1e-300) {
      start = pseudo_random_vector(n, salt++);
      deflate(start);
      start_norm = norm(start);
    }
    for (double& v : start) v /= start_norm;

    std::vector<std::vector<double>> basis{start};
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> w(n);
    while (static_cast<int>(alpha.size()) < max_basis && matvecs < max_matvecs) {
      const auto& v = basis.back();
      apply_shifted(v, w);
      alpha.push_back(dot(v, w));
      axpy(-alpha.back(), v, w);
      if (basis.size() >= 2) axpy(-beta.back(), basis[basis.size() - 2], w);
      deflate(w);
      for (const auto& b : basis) axpy(-dot(b, w), b, w);
      double b_norm = norm(w);
      if (b_norm < 1e-10 * sigma) {
        // Invariant subspace. Keep growing the basis in a fresh direction so
        // small problems always span the whole deflated space; a zero
        // off-diagonal keeps the tridiagonal matrix consistent.
        if (static_cast<int>(basis.size()) >= deflated_dim) break;
        bool replaced = false;
        for (int attempt = 0; attempt < 8 && !replaced; ++attempt) {
          w = pseudo_random_vector(n, salt++);
          deflate(w);
          for (const auto& b : basis) axpy(-dot(b, w), b, w);
          for (const auto& b : basis) axpy(-dot(b, w), b, w);
          b_norm = norm(w);
          replaced = b_norm > 1e-8;
        }
        if (!replaced) break;
        beta.push_back(0.0);
      } else {
        beta.push_back(b_norm);
      }
      std::vector<double> next(w);
      for (double& x : next) x /= b_norm;
      basis.push_back(std::move(next));
    }
    if (beta.size() >= alpha.size() && !beta.empty()) beta.resize(alpha.size() - 1);

    auto tri = tridiagonal_eigen(alpha, beta);
    const int top = static_cast<int>(tri.values.size()) - 1;
    std::vector<double> ritz(n, 0.0);
    for (size_t j = 0; j < alpha.size(); ++j) {
      axpy(tri.vectors[top][j], basis[j], ritz);
    }
    deflate(ritz);
    const double ritz_norm = norm(ritz);
    for (double& v : ritz) v /= ritz_norm;

    std::vector<double> ly(n);
    apply_laplacian(ritz, ly);
    const double lambda = dot(ritz, ly);
    axpy(-lambda, ritz, ly);
    const double residual = norm(ly);
    if (residual <= tol) {
      return EigenPair{lambda, ritz, matvecs};
    }
    if (matvecs >= max_matvecs) {
      throw_error(ErrorKind::EigenNoConvergence,
                  "residual " + std::to_string(residual) + " after " +
                      std::to_string(matvecs) + " operator applications");
    }
    start = ritz;
  }
}

}  // namespace hcm
