#pragma once

#include <vector>

namespace cgr::num {

// Row-major dense double matrix, just enough for the plane-wave pencil.
struct DMat {
  int n = 0;
  std::vector<double> a;

  DMat() = default;
  explicit DMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Cholesky factor L (lower) of a symmetric positive definite matrix.
// Returns false if a nonpositive pivot appears.
bool cholesky(const DMat& m, DMat& l);

// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, ascending.
std::vector<double> jacobi_eigenvalues(DMat m);

// Eigenvalues of the symmetric-definite pencil B x = lambda A x
// (B symmetric, A SPD), via A = L L^T and the congruence L^-1 B L^-T.
std::vector<double> pencil_eigenvalues(const DMat& b, const DMat& a);

}  // namespace cgr::num
