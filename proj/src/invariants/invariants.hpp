#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "irreps/rep.hpp"

namespace cgr {

// Trace/deviator split of a symmetric 3x3 tensor: T = p*I + S with
// p = tr(T)/3 and the five deviator components read through the weight-2
// family, s_j = tr((G^j_{2[1,1]})^T (T - p I)).
template <class S>
struct DeviatorParts {
  S p;
  Vec<S> s;
};

template <class S>
DeviatorParts<S> deviator_decompose(const Matrix<S>& t) {
  if (t.rows() != 3 || t.cols() != 3) throw std::invalid_argument("tensor must be 3x3");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(t.at(i, j) == t.at(j, i))) throw std::domain_error("tensor must be symmetric");
  S third = S::from_rational(Rational(1, 3));
  S p = third * (t.at(0, 0) + t.at(1, 1) + t.at(2, 2));
  Matrix<S> dev = t;
  for (int i = 0; i < 3; ++i) dev.at(i, i) -= p;
  auto fam = compute_family_h<S>(1, 1, 2);
  DeviatorParts<S> out{p, Vec<S>(2)};
  for (int j = -2; j <= 2; ++j) out.s.s(j) = trace_inner(fam->at(j), dev);
  return out;
}

template <class S>
Matrix<S> deviator_reconstruct(const S& p, const Vec<S>& s) {
  if (s.weight() != 2) throw std::invalid_argument("deviator vector must have weight 2");
  auto fam = compute_family_h<S>(1, 1, 2);
  Matrix<S> t(3, 3);
  for (int i = 0; i < 3; ++i) t.at(i, i) = p;
  for (int j = -2; j <= 2; ++j) t += s.s(j) * fam->at(j);
  return t;
}

// Kronecker expansion of an outer product: components
// w^(N)_n = pvec^T G^n_{N[N1,N2]} qvec for N = |N1-N2| .. N1+N2, with
// sum_N sum_n w_n G^n = pvec qvec^T.
template <class S>
std::map<int, Vec<S>> kron_expand(const Vec<S>& pvec, const Vec<S>& qvec) {
  std::map<int, Vec<S>> out;
  int N1 = pvec.weight(), N2 = qvec.weight();
  for (int N = std::abs(N1 - N2); N <= N1 + N2; ++N) {
    auto fam = compute_family_h<S>(N1, N2, N);
    Vec<S> w(N);
    for (int n = -N; n <= N; ++n) w.s(n) = bilinear(pvec, fam->at(n), qvec);
    out.emplace(N, std::move(w));
  }
  return out;
}

// The 21 material parameters: two scalars, two weight-2 coefficient vectors
// and one weight-4 coefficient vector.
template <class S>
struct MaterialCoefficients {
  S c1{}, c2{};
  Vec<S> a{2}, b{2}, d{4};

  static MaterialCoefficients isotropic(const S& c1, const S& c2) {
    MaterialCoefficients m;
    m.c1 = c1;
    m.c2 = c2;
    return m;
  }
};

template <class S>
struct QuadraticInvariants {
  S j0{}, j1{}, i0{}, i1{}, i2{};

  S total() const { return j0 + j1 + i0 + i1 + i2; }
};

// J0 = c1 p^2,  J1 = sum_j a_j s_j p,  I0 = c2 (s,s),
// I1 = sum_j b_j (G^j_{2[2,2]} s, s),  I2 = sum_j d_j (G^j_{4[2,2]} s, s).
template <class S>
QuadraticInvariants<S> quadratic_invariants(const S& p, const Vec<S>& s,
                                            const MaterialCoefficients<S>& m) {
  if (s.weight() != 2) throw std::invalid_argument("deviator vector must have weight 2");
  QuadraticInvariants<S> q{};
  q.j0 = m.c1 * p * p;
  for (int j = -2; j <= 2; ++j) q.j1 += m.a.s(j) * s.s(j) * p;
  q.i0 = m.c2 * dot(s, s);
  auto fam2 = compute_family_h<S>(2, 2, 2);
  for (int j = -2; j <= 2; ++j) q.i1 += m.b.s(j) * bilinear(s, fam2->at(j), s);
  auto fam4 = compute_family_h<S>(2, 2, 4);
  for (int j = -4; j <= 4; ++j) q.i2 += m.d.s(j) * bilinear(s, fam4->at(j), s);
  return q;
}

// Kernel of m as coefficient vectors over its columns, by reduced echelon
// elimination.  Pivots are normalized to 1; rational entries are preferred
// as pivots so divisions stay inside the supported quadratic fields.
template <class S>
std::vector<std::vector<S>> kernel_basis(Matrix<S> m) {
  int nrows = m.rows(), ncols = m.cols();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int sel = -1;
    for (int r = row; r < nrows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      if (sel < 0) sel = r;
      if constexpr (std::is_same_v<S, Radical>) {
        if (m.at(r, col).is_rational()) {
          sel = r;
          break;
        }
      } else {
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < ncols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    S inv = S::one() / m.at(row, col);
    for (int c = 0; c < ncols; ++c) m.at(row, c) = inv * m.at(row, c);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      S f = m.at(r, col);
      for (int c = 0; c < ncols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<S>> basis;
  for (int col = 0; col < ncols; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    std::vector<S> y(ncols);
    y[col] = S::one();
    for (size_t r = 0; r < pivot_col.size(); ++r)
      y[pivot_col[r]] = -m.at(static_cast<int>(r), col);
    basis.push_back(std::move(y));
  }
  return basis;
}

// Exact basis of the fixed space {x : A^T x = x} of an orthogonal matrix.
template <class S>
std::vector<Vec<S>> fixed_subspace(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("fixed_subspace needs a square matrix");
  int n = a.rows();
  int weight = (n - 1) / 2;
  std::vector<Vec<S>> out;
  for (std::vector<S>& y : kernel_basis(a.transpose() - Matrix<S>::identity(n))) {
    Vec<S> v(weight);
    for (int i = 0; i < n; ++i) v.at(i) = std::move(y[i]);
    out.push_back(std::move(v));
  }
  return out;
}

// Common fixed space of several representation matrices: restrict each
// next condition (A^T - I) to the span of the basis found so far.
template <class S>
std::vector<Vec<S>> intersect_fixed(const std::vector<Matrix<S>>& reps) {
  if (reps.empty()) return {};
  int n = reps.front().rows();
  int weight = (n - 1) / 2;
  std::vector<Vec<S>> basis = fixed_subspace(reps.front());
  for (size_t g = 1; g < reps.size() && !basis.empty(); ++g) {
    int k = static_cast<int>(basis.size());
    Matrix<S> cond(n, k);
    Matrix<S> at = reps[g].transpose();
    for (int j = 0; j < k; ++j) {
      Vec<S> img = at * basis[j];
      for (int i = 0; i < n; ++i) cond.at(i, j) = img.at(i) - basis[j].at(i);
    }
    std::vector<Vec<S>> next;
    for (const std::vector<S>& y : kernel_basis(std::move(cond))) {
      Vec<S> v(weight);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) v.at(i) += y[j] * basis[j].at(i);
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return basis;
}

struct CrystalGenerators {
  std::string name;
  std::vector<Matrix<Radical>> generators;
};

// Built-in point-rotation groups, one per crystal system, using rotations
// about the coordinate axes (plus a second axis where one generator is not
// enough).  Counts beyond the monoclinic/rhombic cases follow the classical
// stiffness-constant table; see README.
CrystalGenerators crystal_preset(const std::string& system);

template <class S>
struct CrystalBlock {
  std::vector<Vec<S>> basis;   // fixed-subspace basis for this coefficient block
  std::vector<int> indices;    // filled when the basis is axis-aligned
  bool axis_aligned = false;
  int dim() const { return static_cast<int>(basis.size()); }
};

template <class S>
struct CrystalReduction {
  std::string system;
  int count = 0;  // 2 + 2*dim fix(rho_2) + dim fix(rho_4)
  CrystalBlock<S> a, b, d;
};

template <class S>
CrystalBlock<S> make_block(std::vector<Vec<S>> basis) {
  CrystalBlock<S> blk;
  blk.basis = std::move(basis);
  blk.axis_aligned = true;
  for (const Vec<S>& v : blk.basis) {
    int nz = -1;
    for (int i = 0; i < v.dim() && blk.axis_aligned; ++i) {
      if (v.at(i).is_zero()) continue;
      if (nz >= 0 || !(v.at(i) == S::one())) blk.axis_aligned = false;
      nz = i;
    }
    if (!blk.axis_aligned) break;
    blk.indices.push_back(nz - v.weight());
  }
  if (!blk.axis_aligned) blk.indices.clear();
  std::sort(blk.indices.begin(), blk.indices.end());
  return blk;
}

template <class S>
CrystalReduction<S> crystal_reduce(const std::string& name,
                                   const std::vector<Matrix<S>>& generators) {
  for (const Matrix<S>& g : generators)
    if (!is_rotation(g)) throw std::domain_error("crystal generator is not a rotation");
  CrystalReduction<S> red;
  red.system = name;
  std::vector<Matrix<S>> rho2, rho4;
  for (const Matrix<S>& g : generators) {
    rho2.push_back(rep_matrix(2, g));
    rho4.push_back(rep_matrix(4, g));
  }
  auto full = [](int weight) {
    std::vector<Vec<S>> v;
    for (int i = 0; i < 2 * weight + 1; ++i) {
      Vec<S> e(weight);
      e.at(i) = S::one();
      v.push_back(std::move(e));
    }
    return v;
  };
  std::vector<Vec<S>> fix2 = generators.empty() ? full(2) : intersect_fixed(rho2);
  std::vector<Vec<S>> fix4 = generators.empty() ? full(4) : intersect_fixed(rho4);
  red.a = make_block(fix2);
  red.b = make_block(std::move(fix2));
  red.d = make_block(std::move(fix4));
  red.count = 2 + red.a.dim() + red.b.dim() + red.d.dim();
  return red;
}

inline CrystalReduction<Radical> crystal_reduce_preset(const std::string& system) {
  CrystalGenerators gen = crystal_preset(system);
  return crystal_reduce<Radical>(gen.name, gen.generators);
}

}  // namespace cgr
