#pragma once

#include <stdexcept>

#include "radix/matrix.hpp"
#include "radix/rational.hpp"

namespace cgr {

// Complex irreducible representation matrices are unitary ("e" basis);
// the "h" basis makes them real orthogonal.
enum class BasisKind { E, H };

inline int irrep_dim(int N) { return 2 * N + 1; }

inline void check_weight(int N) {
  if (N < 0) throw std::domain_error("weight must be nonnegative");
}

inline bool triangle_ok(int N, int N1, int N2) {
  return N >= std::abs(N1 - N2) && N <= N1 + N2;
}

inline void check_triangle(int N, int N1, int N2) {
  check_weight(N);
  check_weight(N1);
  check_weight(N2);
  if (!triangle_ok(N, N1, N2))
    throw std::domain_error("weights violate the triangle inequality");
}

// (-1)^(N+n) * sqrt((2N+1)! / ((N+n)!(N-n)!)), the normalization of the
// weight-N canonical basis monomials.
template <class S>
S rho_tilde(int N, int n) {
  check_weight(N);
  if (n < -N || n > N) throw std::out_of_range("rho_tilde: |n| > N");
  Rational q(factorial(2 * N + 1), factorial(N + n) * factorial(N - n));
  S r = S::sqrt_rational(q);
  return sign_pow(N + n) < 0 ? -r : r;
}

// sqrt((2N1+1)!(N1+N2-N)!(N+N1-N2)! / ((2N)!(2N2+1)!(N+N1+N2+1)!(N-N1+N2)!))
template <class S>
S rho(int N, int N1, int N2) {
  check_triangle(N, N1, N2);
  Rational q(factorial(2 * N1 + 1) * factorial(N1 + N2 - N) * factorial(N + N1 - N2),
             factorial(2 * N) * factorial(2 * N2 + 1) * factorial(N + N1 + N2 + 1) *
                 factorial(N - N1 + N2));
  return S::sqrt_rational(q);
}

// sqrt((2N1+1)!(2N2+1)!(N+N1-N2)! / (2N!(N1+N2-N)!(N-N1+N2)!(N+N1+N2+1)!)).
// Documentation helper for the bispinor normalization; nothing in the
// computational pipeline consumes it.
template <class S>
S rho_hat(int N, int N1, int N2) {
  check_triangle(N, N1, N2);
  Rational q(factorial(2 * N1 + 1) * factorial(2 * N2 + 1) * factorial(N + N1 - N2),
             Int(2) * factorial(N) * factorial(N1 + N2 - N) * factorial(N - N1 + N2) *
                 factorial(N + N1 + N2 + 1));
  return S::sqrt_rational(q);
}

// i^k as an exact complex unit.
template <class S>
Cx<S> i_pow(int k) {
  int r = ((k % 4) + 4) % 4;
  switch (r) {
    case 0: return Cx<S>(S::one());
    case 1: return Cx<S>(S::zero(), S::one());
    case 2: return Cx<S>(-S::one());
    default: return Cx<S>(S::zero(), -S::one());
  }
}

template <class S>
Cx<S> minus_i_pow(int k) {
  return i_pow<S>(-k);
}

// Unitary change of basis from "e" to "h" columns: h^. = e^. U_N.
// Column -n (n>=1) carries -1 at row -n and (-1)^n at row n, column +n
// carries i at row -n and i(-1)^n at row n, all times (-i)^(N-1)/sqrt(2);
// the central entry is (-i)^N.
template <class S>
Matrix<Cx<S>> u_matrix(int N) {
  check_weight(N);
  Matrix<Cx<S>> u(irrep_dim(N), irrep_dim(N));
  Cx<S> mu = minus_i_pow<S>(N - 1) * Cx<S>(S::sqrt_rational(Rational(1, 2)));
  Cx<S> i = Cx<S>::i_unit();
  u.s(0, 0) = minus_i_pow<S>(N);
  for (int n = 1; n <= N; ++n) {
    Cx<S> parity = (sign_pow(n) < 0) ? -Cx<S>::one() : Cx<S>::one();
    u.s(-n, -n) = -mu;
    u.s(n, -n) = parity * mu;
    u.s(-n, n) = i * mu;
    u.s(n, n) = i * parity * mu;
  }
  return u;
}

// V_N = U_N^{-1} = U_N^*.
template <class S>
Matrix<Cx<S>> v_matrix(int N) {
  return conj_transpose(u_matrix<S>(N));
}

}  // namespace cgr
