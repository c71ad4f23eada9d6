#pragma once

#include <tuple>
#include <vector>

namespace hcm {

// Symmetric weighted adjacency in CSR form with cached weighted degrees.
struct SparseAdjacency {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<double> val;
  std::vector<double> degree;

  // Undirected input edges (u, v, w); parallel entries are summed.
  static SparseAdjacency from_edges(int n,
                                    const std::vector<std::tuple<int, int, double>>& edges);

  void multiply(const std::vector<double>& x, std::vector<double>& y) const;

  std::vector<std::vector<int>> components() const;
};

// Eigenvalues and eigenvectors of a symmetric tridiagonal matrix
// (diag has size m, offdiag size m-1). QL with implicit shifts.
struct TridiagonalEigen {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[j] is the eigenvector of values[j]
};
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  int matvecs = 0;
};

// Second-smallest eigenpair of Dw^{-1/2} (Ddeg - A) Dw^{-1/2}, where Dw is
// the diagonal of `weights` and Ddeg the weighted-degree diagonal of `adj`.
// Lanczos with full reorthogonalization, deflated against the known null
// direction sqrt(weights); `warm_start` seeds the first Lanczos vector.
// Throws EigenNoConvergence if the residual stays above `tol` after
// `max_matvecs` operator applications.
EigenPair second_smallest_normalized_laplacian(const SparseAdjacency& adj,
                                               const std::vector<double>& weights,
                                               const std::vector<double>* warm_start,
                                               double tol = 1e-8,
                                               int max_matvecs = 5000);

}  // namespace hcm
