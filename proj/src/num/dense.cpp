#include "num/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgr::num {

bool cholesky(const DMat& m, DMat& l) {
  int n = m.n;
  l = DMat(n);
  for (int j = 0; j < n; ++j) {
    double d = m.at(j, j);
    for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
    if (d <= 0.0) return false;
    l.at(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = m.at(i, j);
      for (int k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
      l.at(i, j) = v / l.at(j, j);
    }
  }
  return true;
}

std::vector<double> jacobi_eigenvalues(DMat m) {
  int n = m.n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m.at(i, j) * m.at(i, j);
    if (off < 1e-26) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m.at(k, p), mkq = m.at(k, q);
          m.at(k, p) = c * mkp - s * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m.at(p, k), mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> pencil_eigenvalues(const DMat& b, const DMat& a) {
  if (a.n != b.n) throw std::invalid_argument("pencil dimension mismatch");
  DMat l;
  if (!cholesky(a, l)) throw std::domain_error("pencil time matrix is not positive definite");
  int n = a.n;
  // X = L^-1 B  by forward substitution on columns of B
  DMat x(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      double v = b.at(i, col);
      for (int k = 0; k < i; ++k) v -= l.at(i, k) * x.at(k, col);
      x.at(i, col) = v / l.at(i, i);
    }
  }
  // C = X L^-T: solve C L^T = X row-wise
  DMat c(n);
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j < n; ++j) {
      double v = x.at(row, j);
      for (int k = 0; k < j; ++k) v -= c.at(row, k) * l.at(j, k);
      c.at(row, j) = v / l.at(j, j);
    }
  }
  // symmetrize against round-off before Jacobi
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (c.at(i, j) + c.at(j, i));
      c.at(i, j) = c.at(j, i) = v;
    }
  return jacobi_eigenvalues(std::move(c));
}

}  // namespace cgr::num
