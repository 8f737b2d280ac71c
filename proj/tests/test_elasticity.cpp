#include <doctest.h>

#include <algorithm>

#include "elasticity/elasticity.hpp"
#include "test_support.hpp"

using namespace cgr;
using cgrtest::Rng;

namespace {

std::array<Radical, 3> basis_k(int i) {
  std::array<Radical, 3> k{Radical(0), Radical(0), Radical(0)};
  k[i + 1] = Radical(1);
  return k;
}

// Monoclinic-reduced coefficients with the pressure coupling left off (the
// printed block form only admits the energy normalization for a = 0).
MaterialCoefficients<Radical> monoclinic_coeffs() {
  MaterialCoefficients<Radical> m;
  m.c1 = Radical(Rational(1, 8));
  m.c2 = Radical(1);
  m.b.s(-1) = Radical(Rational(1, 10));
  m.b.s(0) = Radical(Rational(1, 7));
  m.b.s(2) = Radical(Rational(-1, 9));
  m.d.s(-3) = Radical(Rational(1, 11));
  m.d.s(-1) = Radical(Rational(1, 13));
  m.d.s(0) = Radical(Rational(1, 12));
  m.d.s(2) = Radical(Rational(-1, 15));
  m.d.s(4) = Radical(Rational(1, 14));
  return m;
}

}  // namespace

TEST_CASE("delta symbol shapes and slices") {
  auto dm = delta_symbol<Radical>(1, -1, basis_k(-1));
  CHECK(dm.matrix.rows() == 1);
  CHECK(dm.matrix.cols() == 3);
  auto f01 = compute_family_h<Radical>(0, 1, 1);
  CHECK(dm.matrix == f01->at(-1));
  auto dp = delta_symbol<Radical>(1, +1, basis_k(0));
  CHECK(dp.matrix.rows() == 5);
  CHECK(dp.matrix.cols() == 3);
  CHECK_THROWS_AS(delta_symbol<Radical>(0, -1, basis_k(0)), std::domain_error);
}

TEST_CASE("delta symbol is linear and equivariant") {
  Rng rng(19);
  for (int L : {1, 2}) {
    for (int sign : {-1, +1}) {
      std::array<Radical, 3> k1{Radical(cgrtest::random_rational(rng)),
                                Radical(cgrtest::random_rational(rng)),
                                Radical(cgrtest::random_rational(rng))};
      std::array<Radical, 3> k2{Radical(cgrtest::random_rational(rng)),
                                Radical(cgrtest::random_rational(rng)),
                                Radical(cgrtest::random_rational(rng))};
      std::array<Radical, 3> sum{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]};
      CHECK(delta_symbol<Radical>(L, sign, sum).matrix ==
            delta_symbol<Radical>(L, sign, k1).matrix +
                delta_symbol<Radical>(L, sign, k2).matrix);
      for (int it = 0; it < 3; ++it) {
        auto u = cgrtest::random_exact_rotation(rng);
        Vec<Radical> kv(1);
        for (int i = 0; i < 3; ++i) kv.at(i) = k1[i];
        Vec<Radical> uk = rep_matrix(1, u) * kv;
        std::array<Radical, 3> uka{uk.at(0), uk.at(1), uk.at(2)};
        Matrix<Radical> lhs = delta_symbol<Radical>(L, sign, uka).matrix;
        Matrix<Radical> rhs = rep_matrix(L + sign, u) *
                              delta_symbol<Radical>(L, sign, k1).matrix *
                              rep_matrix(L, u).transpose();
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("calibration reproduces the component equations exactly") {
  DeltaConstants<Radical> c = calibrate_delta_constants<Radical>();
  auto f2 = compute_family_h<Radical>(1, 1, 2);
  for (int i = -1; i <= 1; ++i) {
    std::array<Radical, 3> k = basis_k(i);
    // pressure row: c_minus_1 K01(k) u = -(1/3) k.u
    Matrix<Radical> k01 = delta_symbol<Radical>(1, -1, k, c.c_minus_1).matrix;
    for (int j = -1; j <= 1; ++j) {
      Radical want = (i == j) ? Radical(Rational(-1, 3)) : Radical();
      CHECK(k01.s(0, j) == want);
    }
    // velocity rows: c_plus_0 K10(k) p = -k p
    Matrix<Radical> k10 = delta_symbol<Radical>(0, +1, k, c.c_plus_0).matrix;
    for (int j = -1; j <= 1; ++j)
      CHECK(k10.s(j, 0) == (i == j ? Radical(-1) : Radical()));
    // velocity rows against the deviator: c_minus_2 K12(k) s = -S(s) k
    Matrix<Radical> k12 = delta_symbol<Radical>(2, -1, k, c.c_minus_2).matrix;
    for (int m = -2; m <= 2; ++m) {
      Vec<Radical> s(2);
      s.s(m) = Radical(1);
      Vec<Radical> got = k12 * s;
      for (int j = -1; j <= 1; ++j) CHECK(got.s(j) == -f2->at(m).s(j, i));
    }
    // deviator rows: c_plus_1 K21(k) u = -2 w, w_m = u^T G^m k
    Matrix<Radical> k21 = delta_symbol<Radical>(1, +1, k, c.c_plus_1).matrix;
    for (int j = -1; j <= 1; ++j)
      for (int m = -2; m <= 2; ++m)
        CHECK(k21.s(m, j) == Radical(-2) * f2->at(m).s(j, i));
  }
}

TEST_CASE("assembled A_hat") {
  // isotropic lambda = 2, mu = 1: diag(1/8, 1, 1, 1, 1, 1)
  auto model = HyperbolicModel<Radical>::isotropic(Radical(2), Radical(1), Radical(1));
  Matrix<Radical> ah = model.a_hat();
  Matrix<Radical> want(6, 6);
  want.at(0, 0) = Radical(Rational(1, 8));
  for (int i = 1; i < 6; ++i) want.at(i, i) = Radical(1);
  CHECK(ah == want);

  // unit scalars, no anisotropy: identity
  MaterialCoefficients<Radical> unit;
  unit.c1 = Radical(1);
  unit.c2 = Radical(1);
  CHECK(assemble_A_hat(unit) == Matrix<Radical>::identity(6));

  // symmetry for arbitrary coefficients
  Rng rng(23);
  MaterialCoefficients<Radical> m;
  m.c1 = Radical(cgrtest::random_rational(rng));
  m.c2 = Radical(cgrtest::random_rational(rng));
  for (int j = -2; j <= 2; ++j) {
    m.a.s(j) = Radical(cgrtest::random_rational(rng));
    m.b.s(j) = Radical(cgrtest::random_rational(rng));
  }
  for (int j = -4; j <= 4; ++j) m.d.s(j) = Radical(cgrtest::random_rational(rng));
  Matrix<Radical> a = assemble_A_hat(m);
  CHECK(a == a.transpose());
}

TEST_CASE("hyperbolicity") {
  auto good = HyperbolicModel<Radical>::isotropic(Radical(1), Radical(1), Radical(1));
  CHECK(hyperbolicity_check(good).ok());
  auto bad = HyperbolicModel<Radical>::isotropic(Radical(1), Radical(-1), Radical(1));
  auto rep = hyperbolicity_check(bad);
  CHECK(!rep.ok());
  CHECK(rep.failing_minor == 2);
  auto negrho = HyperbolicModel<Radical>::isotropic(Radical(1), Radical(1), Radical(-1));
  CHECK(!hyperbolicity_check(negrho).ok());
}

TEST_CASE("hyperbolicity flips at a computable anisotropy threshold") {
  // s-block = I + t G^0_{2[2,2]}: the smallest diagonal entry is
  // 1 - t sqrt(2/7), so the threshold is t* = sqrt(7/2).
  auto model_at = [](const Rational& t) {
    auto m = HyperbolicModel<Radical>::isotropic(Radical(2), Radical(1), Radical(1));
    m.material.c2 = Radical(1);
    m.material.b.s(0) = Radical(t);
    return m;
  };
  CHECK(hyperbolicity_check(model_at(Rational(1))).ok());
  CHECK(!hyperbolicity_check(model_at(Rational(2))).ok());
  double lo = 1.0, hi = 2.0;
  for (int it = 0; it < 40; ++it) {
    double mid = 0.5 * (lo + hi);
    Rational q(static_cast<long long>(mid * 1e6), 1000000);
    (hyperbolicity_check(model_at(q)).ok() ? lo : hi) = mid;
  }
  CHECK(std::fabs(lo - std::sqrt(3.5)) < 1e-5);
}

TEST_CASE("plane-wave speeds, isotropic") {
  auto model = HyperbolicModel<Radical>::isotropic(Radical(2), Radical(1), Radical(1));
  // lambda + 2 mu = 4 => cp = 2; mu = 1 => cs = 1
  std::vector<double> expect{-2, -1, -1, 0, 0, 0, 1, 1, 2};
  for (int i = -1; i <= 1; ++i) {
    std::vector<double> speeds = plane_wave_speeds(model, basis_k(i));
    REQUIRE(speeds.size() == 9);
    for (int j = 0; j < 9; ++j) CHECK(std::fabs(speeds[j] - expect[j]) < 1e-10);
  }
  // non-axis exact direction (normalized internally)
  std::array<Radical, 3> diag{Radical(1), Radical(2), Radical(-2)};
  std::vector<double> speeds = plane_wave_speeds(model, diag);
  for (int j = 0; j < 9; ++j) CHECK(std::fabs(speeds[j] - expect[j]) < 1e-10);
  // +/- pairing and zero count
  int zeros = 0;
  for (int j = 0; j < 9; ++j) {
    CHECK(std::fabs(speeds[j] + speeds[8 - j]) < 1e-10);
    if (std::fabs(speeds[j]) < 1e-9) ++zeros;
  }
  CHECK(zeros == 3);
}

TEST_CASE("speeds of a non-hyperbolic model are refused") {
  auto bad = HyperbolicModel<Radical>::isotropic(Radical(1), Radical(-1), Radical(1));
  CHECK_THROWS_AS(plane_wave_speeds(bad, basis_k(0)), std::domain_error);
}

TEST_CASE("monoclinic speeds vary with direction but respect the generator") {
  HyperbolicModel<Radical> model{Radical(1), monoclinic_coeffs(),
                                 calibrate_delta_constants<Radical>()};
  REQUIRE(hyperbolicity_check(model).ok());
  auto r2 = rotation_exact(Axis::Xm1, Rational(1));  // diag(-1,-1,1)
  Rng rng(29);
  bool varied = false;
  std::vector<double> base;
  for (int it = 0; it < 4; ++it) {
    std::array<Radical, 3> k{Radical(rng.range(-3, 3)), Radical(rng.range(-3, 3)),
                             Radical(rng.range(1, 3))};
    Vec<Radical> kv(1);
    for (int i = 0; i < 3; ++i) kv.at(i) = k[i];
    Vec<Radical> rk = r2 * kv;
    std::array<Radical, 3> krot{rk.at(0), rk.at(1), rk.at(2)};
    std::vector<double> s1 = plane_wave_speeds(model, k);
    std::vector<double> s2 = plane_wave_speeds(model, krot);
    for (int j = 0; j < 9; ++j) CHECK(std::fabs(s1[j] - s2[j]) < 1e-9);
    if (it == 0)
      base = s1;
    else if (std::fabs(s1[8] - base[8]) > 1e-6)
      varied = true;
  }
  CHECK(varied);
}

TEST_CASE("energy-symmetrized symbol is exactly symmetric") {
  auto iso = HyperbolicModel<Radical>::isotropic(Radical(2), Radical(1), Radical(1));
  HyperbolicModel<Radical> mono{Radical(1), monoclinic_coeffs(),
                                calibrate_delta_constants<Radical>()};
  Rng rng(31);
  for (const auto& model : {iso, mono}) {
    Matrix<Radical> h = model.energy_matrix();
    CHECK(h == h.transpose());
    CHECK(sign_of(determinant(h)) > 0);
    for (int it = 0; it < 4; ++it) {
      std::array<Radical, 3> k{Radical(cgrtest::random_rational(rng)),
                               Radical(cgrtest::random_rational(rng)),
                               Radical(cgrtest::random_rational(rng))};
      Matrix<Radical> wb = model.symmetrized_symbol(k);
      CHECK(wb == wb.transpose());
    }
  }
  // with pressure coupling the energy normalization does not exist
  auto coupled = iso;
  coupled.material.a.s(0) = Radical(1);
  CHECK_THROWS_AS(coupled.energy_matrix(), std::domain_error);
}

TEST_CASE("linear energy") {
  MaterialCoefficients<Radical> m;
  m.c1 = Radical(3);
  m.c2 = Radical(2);
  Vec<Radical> s(2);
  CHECK(linear_energy(Radical(2), s, m) == Radical(12));
  Rng rng(37);
  for (int it = 0; it < 10; ++it) {
    Vec<Radical> sv = cgrtest::random_vec(rng, 2);
    Radical p = Radical(cgrtest::random_rational(rng));
    CHECK(linear_energy(p, sv, m) == m.c1 * p * p + m.c2 * dot(sv, sv));
  }
}

TEST_CASE("linear energy is positive definite exactly when A_hat is") {
  Rng rng(41);
  auto sample_energy_positive = [&rng](const MaterialCoefficients<Radical>& m) {
    for (int it = 0; it < 200; ++it) {
      Radical p = Radical(cgrtest::random_rational(rng));
      Vec<Radical> s = cgrtest::random_vec(rng, 2);
      if (p.is_zero() && s.is_zero()) continue;
      if (sign_of(linear_energy(p, s, m)) <= 0) return false;
    }
    return true;
  };
  MaterialCoefficients<Radical> good = monoclinic_coeffs();
  HyperbolicModel<Radical> gm{Radical(1), good, calibrate_delta_constants<Radical>()};
  CHECK(hyperbolicity_check(gm).ok());
  CHECK(sample_energy_positive(good));
  MaterialCoefficients<Radical> bad = monoclinic_coeffs();
  bad.b.s(0) = Radical(2);  // past the sqrt(7/2) threshold
  HyperbolicModel<Radical> bm{Radical(1), bad, calibrate_delta_constants<Radical>()};
  CHECK(!hyperbolicity_check(bm).ok());
  // witness: the energy turns negative along the s_-2 axis
  Vec<Radical> witness(2);
  witness.s(-2) = Radical(1);
  CHECK(sign_of(linear_energy(Radical(0), witness, bad)) < 0);
}
