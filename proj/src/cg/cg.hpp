#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "irreps/basis.hpp"

namespace cgr {

// Complete h-basis Clebsch-Gordan family {G^n : n = -N..N} for the
// decomposition of weight N1 x weight N2 at weight N.  Every matrix is
// (2N1+1) x (2N2+1), real, supported on the diagonals n1+n2 = +/-n, and
// the family is orthonormal under tr(G^n^T G^m).
template <class S>
struct CgFamilyH {
  int N1 = 0, N2 = 0, N = 0;
  std::vector<Matrix<S>> g;  // index n + N

  const Matrix<S>& at(int n) const { return g.at(n + N); }
};

// e-basis counterpart {C^n}; matrices may be complex.
template <class S>
struct CgFamilyE {
  int N1 = 0, N2 = 0, N = 0;
  std::vector<Matrix<Cx<S>>> c;

  const Matrix<Cx<S>>& at(int n) const { return c.at(n + N); }
};

// Nonzero diagonal of C^{+N}: entries at (N-k, k) for k = N-N1..N2.
// Ascending integer products with an empty index range are 1.
template <class S>
Matrix<S> stage1_top_diagonal(int N1, int N2, int N) {
  check_triangle(N, N1, N2);
  if (N < 1) throw std::domain_error("stage 1 diagonals need N >= 1");
  Matrix<S> c = Matrix<S>::weighted(N1, N2);
  S common = rho<S>(N, N1, N2) * S::sqrt_rational(Rational(2 * N + 1)) *
             S::from_rational(Rational(ascending_product(N + N1 - N2 + 1, 2 * N)));
  for (int k = N - N1; k <= N2; ++k) {
    S val = common * S::from_rational(Rational(ascending_product(N1 - N + k + 1, N2 + k)));
    val = val * rho_tilde<S>(N2, -k) / rho_tilde<S>(N1, N - k);
    if (sign_pow(N2 - k) < 0) val = -val;
    c.s(N - k, k) = val;
  }
  return c;
}

// Nonzero diagonal of C^{-N}: entries at (-N-k, k) for k = -N2..N1-N.
// The extra (-1)^(N1+N2-N) relative to the mirrored top-diagonal formula is
// forced by exactness: without it the h-transform of the +/-N pair in
// stage2_to_h keeps a nonzero imaginary part whenever N1+N2-N is odd.
template <class S>
Matrix<S> stage1_bottom_diagonal(int N1, int N2, int N) {
  check_triangle(N, N1, N2);
  if (N < 1) throw std::domain_error("stage 1 diagonals need N >= 1");
  Matrix<S> c = Matrix<S>::weighted(N1, N2);
  S common = rho<S>(N, N1, N2) * S::sqrt_rational(Rational(2 * N + 1)) *
             S::from_rational(Rational(ascending_product(N + N1 - N2 + 1, 2 * N)));
  for (int k = -N2; k <= N1 - N; ++k) {
    S val = common * S::from_rational(Rational(ascending_product(N1 - N - k + 1, N2 - k)));
    val = val * rho_tilde<S>(N2, -k) / rho_tilde<S>(N1, -N - k);
    if (sign_pow(N2 - k + N1 + N2 - N) < 0) val = -val;
    c.s(-N - k, k) = val;
  }
  return c;
}

// Anti-diagonal matrix C^0_{0[N1,N1]} with entries (-1)^(N1-k)/sqrt(2N1+1)
// at (-k, k).
template <class S>
Matrix<S> stage1_zero(int N1) {
  check_weight(N1);
  Matrix<S> c = Matrix<S>::weighted(N1, N1);
  S inv = S::one() / S::sqrt_rational(Rational(2 * N1 + 1));
  for (int k = -N1; k <= N1; ++k)
    c.s(-k, k) = sign_pow(N1 - k) < 0 ? -inv : inv;
  return c;
}

// Stage 2: transform the extreme e-basis diagonals to the h basis,
//   G^{+N} = -(-i)^N/sqrt(2) * V_{N1} ((-1)^N C^{+N} + C^{-N}) V_{N2}^T
//   G^{-N} = (-i)^(N-1)/sqrt(2) * V_{N1} ((-1)^N C^{+N} - C^{-N}) V_{N2}^T
// Both results are exactly real; a nonzero imaginary residue means the
// stage-1 inputs are inconsistent and raises std::logic_error.
template <class S>
std::pair<Matrix<S>, Matrix<S>> stage2_to_h(const Matrix<S>& cp, const Matrix<S>& cm,
                                            int N1, int N2, int N) {
  Matrix<Cx<S>> v1 = v_matrix<S>(N1);
  Matrix<Cx<S>> v2t = v_matrix<S>(N2).transpose();
  Matrix<Cx<S>> cpx = complexify(cp);
  Matrix<Cx<S>> cmx = complexify(cm);
  Matrix<Cx<S>> sum = (sign_pow(N) < 0) ? (cmx - cpx) : (cpx + cmx);
  Matrix<Cx<S>> dif = (sign_pow(N) < 0) ? (-cpx - cmx) : (cpx - cmx);
  Cx<S> half = Cx<S>(S::sqrt_rational(Rational(1, 2)));
  Cx<S> fp = -minus_i_pow<S>(N) * half;
  Cx<S> fm = minus_i_pow<S>(N - 1) * half;
  Matrix<Cx<S>> gp = fp * (v1 * sum * v2t);
  Matrix<Cx<S>> gm = fm * (v1 * dif * v2t);
  return {real_part_checked(gp, "stage2 G^{+N}"), real_part_checked(gm, "stage2 G^{-N}")};
}

// G^0_{0[N1,N1]} = V_{N1} C^0 V_{N1}^T.
template <class S>
Matrix<S> stage2_zero_to_h(const Matrix<S>& c0, int N1) {
  Matrix<Cx<S>> v1 = v_matrix<S>(N1);
  Matrix<Cx<S>> g = v1 * complexify(c0) * v1.transpose();
  return real_part_checked(g, "stage2 G^0");
}

template <class S>
class FamilyCache;

// J_{+/-1}^{N1 x N2} acting on a (2N1+1) x (2N2+1) matrix:
//   -(1/sqrt(3)) [ sqrt(N1(N1+1)(2N1+1)) G^j_{1[N1,N1]} B
//                + sqrt(N2(N2+1)(2N2+1)) B (G^j_{1[N2,N2]})^T ].
// Weight-0 sides contribute nothing.
template <class S>
Matrix<S> kron_infinitesimal(int N1, int N2, int j, const Matrix<S>& b);

// One downward recurrence step: from the pair at level n produce the pair
// at level n-1 (for n >= 2), or the single central matrix (n = 1, second
// element unused).
template <class S>
struct Stage3Result {
  Matrix<S> g_minus;  // G^{-(n-1)}; for n == 1 this is G^0
  Matrix<S> g_plus;   // G^{+(n-1)}; empty for n == 1
};

template <class S>
Stage3Result<S> stage3_step(const Matrix<S>& gm_n, const Matrix<S>& gp_n, int N1, int N2,
                            int N, int n) {
  if (n < 1 || n > N) throw std::out_of_range("stage 3 level out of range");
  if (n >= 2) {
    S scale = -(S::one() / S::sqrt_rational(Rational((N + n) * (N - n + 1))));
    Matrix<S> jm_gm = kron_infinitesimal(N1, N2, -1, gm_n);
    Matrix<S> jp_gp = kron_infinitesimal(N1, N2, +1, gp_n);
    Matrix<S> jp_gm = kron_infinitesimal(N1, N2, +1, gm_n);
    Matrix<S> jm_gp = kron_infinitesimal(N1, N2, -1, gp_n);
    return {scale * (jm_gm + jp_gp), scale * (jm_gp - jp_gm)};
  }
  S scale = S::one() / S::sqrt_rational(Rational(2 * N * (N + 1)));
  Matrix<S> jp_gm = kron_infinitesimal(N1, N2, +1, gm_n);
  Matrix<S> jm_gp = kron_infinitesimal(N1, N2, -1, gp_n);
  return {scale * (jm_gp - jp_gm), Matrix<S>()};
}

template <class S>
CgFamilyH<S> compute_family_h_uncached(int N1, int N2, int N) {
  check_triangle(N, N1, N2);
  CgFamilyH<S> fam{N1, N2, N, {}};
  fam.g.resize(2 * N + 1);
  if (N == 0) {
    fam.g[0] = stage2_zero_to_h(stage1_zero<S>(N1), N1);
    return fam;
  }
  auto [gp, gm] = stage2_to_h(stage1_top_diagonal<S>(N1, N2, N),
                              stage1_bottom_diagonal<S>(N1, N2, N), N1, N2, N);
  fam.g[N + N] = gp;
  fam.g[-N + N] = gm;
  for (int n = N; n >= 1; --n) {
    Stage3Result<S> next = stage3_step(fam.g[-n + N], fam.g[n + N], N1, N2, N, n);
    if (n >= 2) {
      fam.g[-(n - 1) + N] = next.g_minus;
      fam.g[(n - 1) + N] = next.g_plus;
    } else {
      fam.g[N] = next.g_minus;
    }
  }
  return fam;
}

// Shared cache of computed families and bootstrap adjoint pairs.  Entries
// are immutable once inserted; concurrent duplicate computation of the same
// key yields identical values, so the first writer wins.
template <class S>
class FamilyCache {
 public:
  static FamilyCache& instance() {
    static FamilyCache cache;
    return cache;
  }

  std::shared_ptr<const CgFamilyH<S>> family_h(int N1, int N2, int N) {
    std::tuple<int, int, int> key{N1, N2, N};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = fams_.find(key);
      if (it != fams_.end()) return it->second;
    }
    auto fam = std::make_shared<const CgFamilyH<S>>(compute_family_h_uncached<S>(N1, N2, N));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = fams_.emplace(key, std::move(fam));
    return it->second;
  }

  // G^{+/-1}_{1[M,M]} from stages 1-2 only; resolves the circular dependency
  // between the recurrences and the infinitesimal operators.
  std::pair<Matrix<S>, Matrix<S>> adjoint_pair(int M) {
    if (M < 1) throw std::domain_error("adjoint bootstrap needs weight >= 1");
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = adj_.find(M);
      if (it != adj_.end()) return it->second;
    }
    auto [gp, gm] = stage2_to_h(stage1_top_diagonal<S>(M, M, 1),
                                stage1_bottom_diagonal<S>(M, M, 1), M, M, 1);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = adj_.emplace(M, std::make_pair(gm, gp));
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const CgFamilyH<S>>> fams_;
  std::map<int, std::pair<Matrix<S>, Matrix<S>>> adj_;  // M -> (G^{-1}, G^{+1})
};

template <class S>
std::pair<Matrix<S>, Matrix<S>> bootstrap_adjoint(int M) {
  return FamilyCache<S>::instance().adjoint_pair(M);
}

template <class S>
Matrix<S> kron_infinitesimal(int N1, int N2, int j, const Matrix<S>& b) {
  if (j != 1 && j != -1) throw std::domain_error("kron_infinitesimal: j must be +/-1");
  if (b.rows() != irrep_dim(N1) || b.cols() != irrep_dim(N2))
    throw std::invalid_argument("kron_infinitesimal: dimension mismatch");
  Matrix<S> out(b.rows(), b.cols());
  S minus_inv_sqrt3 = -(S::one() / S::sqrt_rational(Rational(3)));
  if (N1 >= 1) {
    auto [gm, gp] = bootstrap_adjoint<S>(N1);
    const Matrix<S>& g = (j == 1) ? gp : gm;
    S f = S::sqrt_rational(Rational(N1 * (N1 + 1) * (2 * N1 + 1)));
    out += f * (g * b);
  }
  if (N2 >= 1) {
    auto [gm, gp] = bootstrap_adjoint<S>(N2);
    const Matrix<S>& g = (j == 1) ? gp : gm;
    S f = S::sqrt_rational(Rational(N2 * (N2 + 1) * (2 * N2 + 1)));
    out += f * (b * g.transpose());
  }
  return minus_inv_sqrt3 * out;
}

template <class S>
std::shared_ptr<const CgFamilyH<S>> compute_family_h(int N1, int N2, int N) {
  return FamilyCache<S>::instance().family_h(N1, N2, N);
}

// e-basis family from the h-basis one:
//   C^n = sum_m (V_N)_{mn} U_{N1} G^m (U_{N2})^T.
template <class S>
CgFamilyE<S> compute_family_e(int N1, int N2, int N) {
  auto fam = compute_family_h<S>(N1, N2, N);
  Matrix<Cx<S>> u1 = u_matrix<S>(N1);
  Matrix<Cx<S>> u2t = u_matrix<S>(N2).transpose();
  Matrix<Cx<S>> vN = v_matrix<S>(N);
  CgFamilyE<S> e{N1, N2, N, {}};
  e.c.resize(2 * N + 1, Matrix<Cx<S>>(irrep_dim(N1), irrep_dim(N2)));
  std::vector<Matrix<Cx<S>>> conv(2 * N + 1);
  for (int m = -N; m <= N; ++m) conv[m + N] = u1 * complexify(fam->at(m)) * u2t;
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) e.c[n + N] += vN.s(m, n) * conv[m + N];
  return e;
}

}  // namespace cgr
