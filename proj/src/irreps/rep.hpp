#pragma once

#include <cmath>
#include <optional>

#include "cg/cg.hpp"
#include "radix/approx.hpp"
#include "radix/radical.hpp"

namespace cgr {

enum class Axis { Xm1 = -1, X0 = 0, Xp1 = 1 };

// Infinitesimal operator J_j of the weight-N h-basis representation.
// J_{+/-1} come from the adjoint families,
//   J_{+/-1}^N = -sqrt(N(N+1)(2N+1)/3) G^{+/-1}_{1[N,N]},
// and J_0 pairs h^{-n} with h^n: (J_0)_{-n,n} = n, (J_0)_{n,-n} = -n.
template <class S>
Matrix<S> infinitesimal_h(int N, int j) {
  check_weight(N);
  Matrix<S> m = Matrix<S>::weighted(N, N);
  if (N == 0) return m;
  if (j == 0) {
    for (int n = 1; n <= N; ++n) {
      m.s(-n, n) = S::from_rational(Rational(n));
      m.s(n, -n) = S::from_rational(Rational(-n));
    }
    return m;
  }
  if (j != 1 && j != -1) throw std::domain_error("infinitesimal_h: j must be in {-1,0,1}");
  auto [gm, gp] = bootstrap_adjoint<S>(N);
  S f = -S::sqrt_rational(Rational(N * (N + 1) * (2 * N + 1), 3));
  return f * (j == 1 ? gp : gm);
}

// Exact cos/sin for angles that are integer multiples of pi/6 or pi/4;
// empty otherwise.  Angle is given as the rational multiple theta/pi.
struct ExactAngle {
  Radical cos, sin;
};
inline std::optional<ExactAngle> exact_cos_sin(const Rational& angle_over_pi) {
  Rational a = angle_over_pi - 2 * (numerator(angle_over_pi) / (2 * denominator(angle_over_pi)));
  if (a < 0) a += 2;  // reduce to [0, 2)
  Rational twelfths = a * 12;
  if (denominator(twelfths) != 1) return std::nullopt;
  long k = numerator(twelfths).convert_to<long>();  // angle = k*pi/12, 0 <= k < 24
  if (k % 2 != 0 && k % 3 != 0) return std::nullopt;
  auto cos_of = [](long m) -> Radical {  // m*pi/12 in [0, pi/2]
    switch (m) {
      case 0: return Radical(1);
      case 2: return Radical::radical_term(Rational(1, 2), 3);   // pi/6
      case 3: return Radical::radical_term(Rational(1, 2), 2);   // pi/4
      case 4: return Radical(Rational(1, 2));                    // pi/3
      default: return Radical(0);                                // pi/2
    }
  };
  long q = k % 12;             // reduce by pi
  bool flip = (k >= 12);       // cos(x+pi) = -cos(x)
  long r = q <= 6 ? q : 12 - q;
  Radical c = cos_of(r);
  if (q > 6) c = -c;
  if (flip) c = -c;
  // sin(x) = cos(x - pi/2)
  long ks = ((k - 6) % 24 + 24) % 24;
  long qs = ks % 12;
  bool flips = (ks >= 12);
  long rs = qs <= 6 ? qs : 12 - qs;
  Radical s = cos_of(rs);
  if (qs > 6) s = -s;
  if (flips) s = -s;
  return ExactAngle{c, s};
}

// Rotation by theta about a coordinate axis, in the (x_-1, x_0, x_1)
// component order.  The orientation is fixed once so that the weight-2
// representation of the x_-1 rotation has -sin(theta) in the (s_-2, s_1)
// entry; see rep_matrix below.
template <class S>
Matrix<S> rotation_about(Axis axis, const S& c, const S& s) {
  Matrix<S> m = Matrix<S>::identity(3);
  switch (axis) {
    case Axis::Xm1:  // fixes the third component
      m.at(0, 0) = c;  m.at(0, 1) = s;
      m.at(1, 0) = -s; m.at(1, 1) = c;
      break;
    case Axis::X0:   // fixes the middle component
      m.at(0, 0) = c;  m.at(0, 2) = s;
      m.at(2, 0) = -s; m.at(2, 2) = c;
      break;
    case Axis::Xp1:  // fixes the first component
      m.at(1, 1) = c;  m.at(1, 2) = s;
      m.at(2, 1) = -s; m.at(2, 2) = c;
      break;
  }
  return m;
}

inline Matrix<Radical> rotation_exact(Axis axis, const Rational& angle_over_pi) {
  auto cs = exact_cos_sin(angle_over_pi);
  if (!cs)
    throw std::domain_error(
        "angle is not an exact multiple of pi/6 or pi/4; use the float backend");
  return rotation_about<Radical>(axis, cs->cos, cs->sin);
}

inline Matrix<Approx> rotation_float(Axis axis, double angle_rad) {
  return rotation_about<Approx>(axis, Approx(std::cos(angle_rad)), Approx(std::sin(angle_rad)));
}

template <class S>
bool is_rotation(const Matrix<S>& u) {
  if (u.rows() != 3 || u.cols() != 3) return false;
  if (u.transpose() * u != Matrix<S>::identity(3)) return false;
  S det{};
  det += u.at(0, 0) * (u.at(1, 1) * u.at(2, 2) - u.at(1, 2) * u.at(2, 1));
  det -= u.at(0, 1) * (u.at(1, 0) * u.at(2, 2) - u.at(1, 2) * u.at(2, 0));
  det += u.at(0, 2) * (u.at(1, 0) * u.at(2, 1) - u.at(1, 1) * u.at(2, 0));
  return det == S::one();
}

// Weight-N h-basis representation matrix of a 3x3 rotation, built by the
// lift recursion: rho_1(U) = U, and for N >= 2 a weight-N vector w embeds
// as B = sum_n w_n G^n_{N[N-1,1]}, transforms as B -> rho_{N-1}(U) B U^T,
// and reads back through the trace pairing, giving
//   rho_N(U)_{mn} = tr((G^m)^T rho_{N-1}(U) G^n U^T).
template <class S>
Matrix<S> rep_matrix(int N, const Matrix<S>& u) {
  check_weight(N);
  if (!is_rotation(u)) throw std::domain_error("rep_matrix input is not a rotation");
  if (N == 0) return Matrix<S>::identity(1);
  Matrix<S> prev = u;
  for (int w = 2; w <= N; ++w) {
    auto fam = compute_family_h<S>(w - 1, 1, w);
    Matrix<S> ut = u.transpose();
    Matrix<S> rho_w = Matrix<S>::weighted(w, w);
    for (int n = -w; n <= w; ++n) {
      Matrix<S> b = prev * fam->at(n) * ut;
      for (int m = -w; m <= w; ++m) rho_w.s(m, n) = trace_inner(fam->at(m), b);
    }
    prev = std::move(rho_w);
  }
  return prev;
}

}  // namespace cgr
