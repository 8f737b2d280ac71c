#pragma once

#include <array>
#include <string>
#include <vector>

#include "invariants/invariants.hpp"
#include "num/dense.hpp"
#include "radix/sign.hpp"

namespace cgr {

// Rotation-invariant first-order differential symbols.  Delta_- lowers the
// weight, L -> L-1, through the G^i_{1[L-1,L]} slices (a divergence
// analogue); Delta_+ raises it, L -> L+1, through G^i_{1[L+1,L]} (a gradient
// analogue).  The symbol is linear in the direction k and equivariant:
// Delta(rho_1(U) k) = rho_{L-+1}(U) Delta(k) rho_L(U)^T.
template <class S>
struct SymbolMatrix {
  int L = 0;
  int sign = 0;  // -1 lowers, +1 raises
  std::array<S, 3> k;
  S scale;
  Matrix<S> matrix;  // scale * sum_i k_i G^i_{1[L+sign, L]}
};

template <class S>
SymbolMatrix<S> delta_symbol(int L, int sign, const std::array<S, 3>& k, const S& scale) {
  if (sign != 1 && sign != -1) throw std::domain_error("delta sign must be +/-1");
  if (L == 0 && sign == -1) throw std::domain_error("weight 0 cannot be lowered");
  check_weight(L);
  auto fam = compute_family_h<S>(L + sign, L, 1);
  Matrix<S> m(irrep_dim(L + sign), irrep_dim(L));
  for (int i = -1; i <= 1; ++i) m += k[i + 1] * fam->at(i);
  return SymbolMatrix<S>{L, sign, k, scale, scale * m};
}

template <class S>
SymbolMatrix<S> delta_symbol(int L, int sign, const std::array<S, 3>& k) {
  return delta_symbol(L, sign, k, S::one());
}

// The four constants the 9-unknown system needs, fixed so that conjugating
// the invariant system back through deviator_decompose reproduces the
// classical component equations of isotropic linear elasticity exactly.
template <class S>
struct DeltaConstants {
  S c_minus_1;  // Delta_- on the weight-1 velocity (pressure row)
  S c_plus_0;   // Delta_+ on the weight-0 pressure (velocity rows)
  S c_minus_2;  // Delta_- on the weight-2 deviator (velocity rows)
  S c_plus_1;   // Delta_+ on the weight-1 velocity (deviator rows)
};

struct CalibrationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

// sum_i k_i G^i_{1[1,0]} = kappa0 * k: the single equivariant map taking a
// direction to a weight-1 column; reads off kappa0 and checks it is the
// same for every slice.
template <class S>
S divergence_structure_constant() {
  auto fam = compute_family_h<S>(1, 0, 1);
  S kappa{};
  for (int i = -1; i <= 1; ++i) {
    const Matrix<S>& g = fam->at(i);
    for (int r = -1; r <= 1; ++r) {
      if (r == i) {
        if (kappa.is_zero())
          kappa = g.s(r, 0);
        else if (!(kappa == g.s(r, 0)))
          throw CalibrationFailure("G_{1[1,0]} slices are not a multiple of the identity map");
      } else if (!g.s(r, 0).is_zero()) {
        throw CalibrationFailure("G_{1[1,0]} slice has an off-axis entry");
      }
    }
  }
  if (kappa.is_zero()) throw CalibrationFailure("vanishing divergence structure constant");
  return kappa;
}

// (sum_i k_i G^i_{1[2,1]})_{m,j} = kappa2 * (G^m_{2[1,1]})_{j,i} k_i: the
// equivariant map pairing a direction with a velocity to give a weight-2
// vector, proportional to the deviator projection of the symmetrized dyad.
template <class S>
S deviator_structure_constant() {
  auto f21 = compute_family_h<S>(2, 1, 1);
  auto f2 = compute_family_h<S>(1, 1, 2);
  S kappa{};
  for (int i = -1; i <= 1; ++i) {
    const Matrix<S>& g = f21->at(i);
    for (int m = -2; m <= 2; ++m)
      for (int j = -1; j <= 1; ++j) {
        const S& lhs = g.s(m, j);
        const S& ref = f2->at(m).s(j, i);
        if (ref.is_zero()) {
          if (!lhs.is_zero())
            throw CalibrationFailure("G_{1[2,1]} support exceeds the dyad projection");
          continue;
        }
        S ratio = lhs / ref;
        if (kappa.is_zero())
          kappa = ratio;
        else if (!(kappa == ratio))
          throw CalibrationFailure("G_{1[2,1]} is not proportional to the dyad projection");
      }
  }
  if (kappa.is_zero()) throw CalibrationFailure("vanishing deviator structure constant");
  return kappa;
}

}  // namespace detail

// Equating symbols on the basis directions: the pressure row must produce
// -(1/3) div u, the velocity rows -grad p and -div S, and the deviator rows
// minus twice the deviator part of sym grad u (the factor two restores the
// 1/(2 mu) compliance against the printed 1/mu diagonal of A_hat).
template <class S>
DeltaConstants<S> calibrate_delta_constants() {
  S kappa0 = detail::divergence_structure_constant<S>();
  S kappa2 = detail::deviator_structure_constant<S>();
  DeltaConstants<S> c;
  c.c_plus_0 = -(S::one() / kappa0);
  c.c_minus_1 = -(S::from_rational(Rational(1, 3)) / kappa0);
  c.c_minus_2 = -(S::one() / kappa2);
  c.c_plus_1 = -(S::from_rational(Rational(2)) / kappa2);
  return c;
}

// 6x6 block matrix of the time derivative of (p, s):
//   [ c1            sum_j a_j G^j_{2[0,2]} ]
//   [ sum_j a_j G^j_{2[2,0]}   c2 I + sum_j b_j G^j_{2[2,2]} + sum_j d_j G^j_{4[2,2]} ]
template <class S>
Matrix<S> assemble_A_hat(const MaterialCoefficients<S>& m) {
  Matrix<S> a(6, 6);
  a.at(0, 0) = m.c1;
  auto f02 = compute_family_h<S>(0, 2, 2);
  auto f20 = compute_family_h<S>(2, 0, 2);
  for (int j = -2; j <= 2; ++j) {
    for (int col = 0; col < 5; ++col) a.at(0, col + 1) += m.a.s(j) * f02->at(j).at(0, col);
    for (int row = 0; row < 5; ++row) a.at(row + 1, 0) += m.a.s(j) * f20->at(j).at(row, 0);
  }
  for (int i = 0; i < 5; ++i) a.at(i + 1, i + 1) += m.c2;
  auto f22 = compute_family_h<S>(2, 2, 2);
  for (int j = -2; j <= 2; ++j)
    for (int r = 0; r < 5; ++r)
      for (int cc = 0; cc < 5; ++cc) a.at(r + 1, cc + 1) += m.b.s(j) * f22->at(j).at(r, cc);
  auto f42 = compute_family_h<S>(2, 2, 4);
  for (int j = -4; j <= 4; ++j)
    for (int r = 0; r < 5; ++r)
      for (int cc = 0; cc < 5; ++cc) a.at(r + 1, cc + 1) += m.d.s(j) * f42->at(j).at(r, cc);
  return a;
}

// First-order system for the state (v_-1, v_0, v_1, p, s_-2 .. s_2):
//   rho dv/dt + Delta_- s + Delta_+ p = 0
//   A_hat d(p,s)/dt + (Delta_- v, Delta_+ v) = 0.
template <class S>
struct HyperbolicModel {
  S density;
  MaterialCoefficients<S> material;
  DeltaConstants<S> deltas;

  static HyperbolicModel isotropic(const S& lambda, const S& mu, const S& rho) {
    S three_l_two_m = S::from_rational(Rational(3)) * lambda + S::from_rational(Rational(2)) * mu;
    MaterialCoefficients<S> m =
        MaterialCoefficients<S>::isotropic(S::one() / three_l_two_m, S::one() / mu);
    return HyperbolicModel{rho, m, calibrate_delta_constants<S>()};
  }

  Matrix<S> a_hat() const { return assemble_A_hat(material); }

  // 9x9 time-derivative block diag(rho I3, A_hat).
  Matrix<S> a_tilde() const {
    Matrix<S> a(9, 9);
    for (int i = 0; i < 3; ++i) a.at(i, i) = density;
    Matrix<S> ah = a_hat();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a.at(i + 3, j + 3) = ah.at(i, j);
    return a;
  }

  // 9x9 spatial symbol B(k).
  Matrix<S> symbol(const std::array<S, 3>& k) const {
    Matrix<S> b(9, 9);
    Matrix<S> dp = delta_symbol<S>(0, +1, k, deltas.c_plus_0).matrix;    // 3x1
    Matrix<S> ds = delta_symbol<S>(2, -1, k, deltas.c_minus_2).matrix;   // 3x5
    Matrix<S> dv0 = delta_symbol<S>(1, -1, k, deltas.c_minus_1).matrix;  // 1x3
    Matrix<S> dv2 = delta_symbol<S>(1, +1, k, deltas.c_plus_1).matrix;   // 5x3
    for (int i = 0; i < 3; ++i) {
      b.at(i, 3) = dp.at(i, 0);
      for (int j = 0; j < 5; ++j) b.at(i, 4 + j) = ds.at(i, j);
    }
    for (int j = 0; j < 3; ++j) {
      b.at(3, j) = dv0.at(0, j);
      for (int i = 0; i < 5; ++i) b.at(4 + i, j) = dv2.at(i, j);
    }
    return b;
  }

  bool has_pressure_coupling() const { return !m_a_is_zero(); }

  // Energy matrix W * a_tilde with W = diag(I3, 3, (1/2) I5): the quadratic
  // form it defines is conserved by the system, and W * symbol(k) is
  // symmetric (the Friedrichs property in disguise: W absorbs the 1/3 of
  // the divergence row and the factor 2 of the deviator rows).  Defined
  // only when the pressure-deviator coupling a vanishes; the printed A_hat
  // form does not admit an energy normalization otherwise.
  Matrix<S> energy_matrix() const {
    if (has_pressure_coupling())
      throw std::domain_error(
          "energy matrix requires a vanishing pressure-deviator coupling block");
    return row_weights() * a_tilde();
  }

  // W * B(k), symmetric for every direction.
  Matrix<S> symmetrized_symbol(const std::array<S, 3>& k) const {
    return row_weights() * symbol(k);
  }

  static Matrix<S> row_weights() {
    Matrix<S> w(9, 9);
    for (int i = 0; i < 3; ++i) w.at(i, i) = S::one();
    w.at(3, 3) = S::from_rational(Rational(3));
    for (int i = 4; i < 9; ++i) w.at(i, i) = S::from_rational(Rational(1, 2));
    return w;
  }

 private:
  bool m_a_is_zero() const {
    for (int j = -2; j <= 2; ++j)
      if (!material.a.s(j).is_zero()) return false;
    return true;
  }
};

enum class Hyperbolicity { Hyperbolic, NotHyperbolic };

struct HyperbolicityReport {
  Hyperbolicity status = Hyperbolicity::Hyperbolic;
  int failing_minor = 0;  // 1-based order of the first nonpositive minor; 0 if none

  bool ok() const { return status == Hyperbolicity::Hyperbolic; }
};

template <class S>
S determinant(const Matrix<S>& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  S det{};
  Matrix<S> sub(n - 1, n - 1);
  for (int p = 0; p < n; ++p) {
    if (m.at(0, p).is_zero()) continue;
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int j = 0; j < n; ++j) {
        if (j == p) continue;
        sub.at(i - 1, cc++) = m.at(i, j);
      }
    }
    S term = m.at(0, p) * determinant(sub);
    if (p % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Positive definiteness of A_hat via the leading principal minors, plus a
// positive density.  The witness is the order of the first failing minor.
template <class S>
HyperbolicityReport hyperbolicity_check(const HyperbolicModel<S>& model) {
  HyperbolicityReport rep;
  if (sign_of(model.density) <= 0) {
    rep.status = Hyperbolicity::NotHyperbolic;
    rep.failing_minor = -1;  // density, not a minor
    return rep;
  }
  Matrix<S> ah = model.a_hat();
  for (int k = 1; k <= 6; ++k) {
    Matrix<S> lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = ah.at(i, j);
    if (sign_of(determinant(lead)) <= 0) {
      rep.status = Hyperbolicity::NotHyperbolic;
      rep.failing_minor = k;
      return rep;
    }
  }
  return rep;
}

namespace detail {
template <class S>
num::DMat to_dmat(const Matrix<S>& m) {
  num::DMat d(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d.at(i, j) = m.at(i, j).approx();
  return d;
}
}  // namespace detail

// The nine characteristic speeds along a unit direction k, ascending.  They
// come in +/- pairs around the zero modes.  Exact-backend models contribute
// exact symbol assembly; the eigenvalues themselves are computed in floating
// point from the energy-symmetrized pencil.
template <class S>
std::vector<double> plane_wave_speeds(const HyperbolicModel<S>& model,
                                      const std::array<S, 3>& k) {
  if (!hyperbolicity_check(model).ok())
    throw std::domain_error("model is not hyperbolic");
  S norm2{};
  for (const S& ki : k) norm2 += ki * ki;
  if (norm2.is_zero()) throw std::domain_error("direction must be nonzero");
  // The symbol is linear in k, so a non-unit direction only rescales the
  // eigenvalues; assemble exactly with the given k and normalize after.
  double inv_norm = 1.0 / std::sqrt(norm2.approx());
  // Eigenvalues of A~^-1 B equal those of the symmetric-definite pencil
  // (W B, W A~) with the energy row weights W.
  num::DMat wb = detail::to_dmat(model.symmetrized_symbol(k));
  num::DMat wa = detail::to_dmat(model.energy_matrix());
  std::vector<double> speeds = num::pencil_eigenvalues(wb, wa);
  for (double& s : speeds) s *= inv_norm;
  return speeds;
}

// J0 + J1 + I0 + I1 + I2: the internal energy of linear elasticity as the
// sum of the quadratic invariants.
template <class S>
S linear_energy(const S& p, const Vec<S>& s, const MaterialCoefficients<S>& m) {
  return quadratic_invariants(p, s, m).total();
}

}  // namespace cgr
