#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>

#include "cg/cg.hpp"
#include "radix/radical.hpp"

namespace cgr {

// Clebsch-Gordan coefficient <N1 n1 N2 n2 | N n> from the classical Racah
// closed sum, evaluated exactly: the alternating sum collapses over a common
// denominator to a single rational, times the square root of a rational
// prefactor, so the result always has at most one radical term.
template <class S>
S racah_coefficient(int N1, int n1, int N2, int n2, int N, int n) {
  check_weight(N1);
  check_weight(N2);
  check_weight(N);
  if (std::abs(n1) > N1 || std::abs(n2) > N2 || std::abs(n) > N)
    throw std::out_of_range("racah_coefficient: component index out of range");
  if (n1 + n2 != n || !triangle_ok(N, N1, N2)) return S::zero();

  Rational pref = Rational(2 * N + 1) *
                  Rational(factorial(N1 + N2 - N) * factorial(N1 - N2 + N) *
                               factorial(-N1 + N2 + N),
                           factorial(N1 + N2 + N + 1)) *
                  Rational(factorial(N + n) * factorial(N - n) * factorial(N1 - n1) *
                           factorial(N1 + n1) * factorial(N2 - n2) * factorial(N2 + n2));

  int k_lo = std::max({0, N2 - N - n1, N1 - N + n2});
  int k_hi = std::min({N1 + N2 - N, N1 - n1, N2 + n2});
  Rational sum(0);
  for (int k = k_lo; k <= k_hi; ++k) {
    Rational term(1, factorial(k) * factorial(N1 + N2 - N - k) * factorial(N1 - n1 - k) *
                         factorial(N2 + n2 - k) * factorial(N - N2 + n1 + k) *
                         factorial(N - N1 - n2 + k));
    sum += (k % 2 == 0) ? term : -term;
  }
  S result = S::sqrt_rational(pref) * S::from_rational(sum);
  if constexpr (std::is_same_v<S, Radical>) {
    // the collapsed sum times one square root is a single term
    if (!result.is_pure_radical())
      throw std::logic_error("Racah sum failed to collapse to a pure radical");
  }
  return result;
}

// Independent h-basis family: e-basis matrices assembled from the Racah
// coefficients, then pushed through the same U/V conjugation as the main
// path,  G^m = sum_n (U_N)_{nm} V_{N1} C^n (V_{N2})^T.
template <class S>
CgFamilyH<S> oracle_family_h(int N1, int N2, int N) {
  check_triangle(N, N1, N2);
  Matrix<Cx<S>> v1 = v_matrix<S>(N1);
  Matrix<Cx<S>> v2t = v_matrix<S>(N2).transpose();
  Matrix<Cx<S>> uN = u_matrix<S>(N);
  std::vector<Matrix<Cx<S>>> conv(2 * N + 1);
  for (int n = -N; n <= N; ++n) {
    Matrix<S> c = Matrix<S>::weighted(N1, N2);
    for (int n1 = -N1; n1 <= N1; ++n1) {
      int n2 = n - n1;
      if (n2 < -N2 || n2 > N2) continue;
      c.s(n1, n2) = racah_coefficient<S>(N1, n1, N2, n2, N, n);
    }
    conv[n + N] = v1 * complexify(c) * v2t;
  }
  CgFamilyH<S> fam{N1, N2, N, {}};
  fam.g.resize(2 * N + 1);
  for (int m = -N; m <= N; ++m) {
    Matrix<Cx<S>> g(irrep_dim(N1), irrep_dim(N2));
    for (int n = -N; n <= N; ++n) g += uN.s(n, m) * conv[n + N];
    fam.g[m + N] = real_part_checked(g, "oracle h-transform");
  }
  return fam;
}

enum class OracleStatus { Match, Mismatch };

// Result of comparing a computed family against the oracle.  The phase
// conventions differ by at most one global sign per family, which is read
// off the first nonzero entry pair and factored out before comparison.
struct OracleReport {
  int N1 = 0, N2 = 0, N = 0;
  int global_sign = 1;
  OracleStatus status = OracleStatus::Match;
  double max_discrepancy = 0.0;       // float-backend only; 0 for exact match
  std::string detail;                 // first mismatching index, when any

  bool matched() const { return status == OracleStatus::Match; }
};

template <class S>
OracleReport compare_families(const CgFamilyH<S>& main, const CgFamilyH<S>& oracle) {
  if (main.N1 != oracle.N1 || main.N2 != oracle.N2 || main.N != oracle.N)
    throw std::invalid_argument("compare_families: key mismatch");
  OracleReport rep;
  rep.N1 = main.N1;
  rep.N2 = main.N2;
  rep.N = main.N;
  std::optional<int> sign;
  for (int n = -main.N; n <= main.N && !sign; ++n) {
    const Matrix<S>& a = main.at(n);
    const Matrix<S>& b = oracle.at(n);
    for (int i = 0; i < a.rows() && !sign; ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (a.at(i, j).is_zero() || b.at(i, j).is_zero()) continue;
        sign = (a.at(i, j) == b.at(i, j)) ? 1 : -1;
        break;
      }
  }
  if (!sign) throw std::logic_error("compare_families: zero family");
  rep.global_sign = *sign;
  for (int n = -main.N; n <= main.N; ++n) {
    const Matrix<S>& a = main.at(n);
    const Matrix<S>& b = oracle.at(n);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        S expect = (*sign > 0) ? b.at(i, j) : -b.at(i, j);
        double diff = std::fabs(a.at(i, j).approx() - expect.approx());
        rep.max_discrepancy = std::max(rep.max_discrepancy, diff);
        if (!(a.at(i, j) == expect) && rep.status == OracleStatus::Match) {
          rep.status = OracleStatus::Mismatch;
          rep.detail = "first mismatch at n=" + std::to_string(n) + " entry (" +
                       std::to_string(i - main.N1) + "," + std::to_string(j - main.N2) + ")";
        }
      }
  }
  if (rep.matched()) rep.max_discrepancy = 0.0;
  return rep;
}

template <class S>
OracleReport verify_family(int N1, int N2, int N) {
  auto main = compute_family_h<S>(N1, N2, N);
  CgFamilyH<S> oracle = oracle_family_h<S>(N1, N2, N);
  return compare_families(*main, oracle);
}

}  // namespace cgr
