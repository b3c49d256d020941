#include <doctest.h>

#include <random>

#include "isogeo/numkit.hpp"

using namespace isogeo;
using namespace isogeo::numkit;

TEST_CASE("tensor3 symmetry defect and contraction") {
  Tensor3 t(3);
  t(0, 1, 2) = t(0, 2, 1) = t(1, 0, 2) = t(1, 2, 0) = t(2, 0, 1) = t(2, 1, 0) = 2.5;
  CHECK(t.symmetry_defect() == 0.0);
  Vec x = Vec::Unit(3, 0), y = Vec::Unit(3, 1), z = Vec::Unit(3, 2);
  CHECK(t.eval(x, y, z) == doctest::Approx(2.5));
  Vec s = Vec::Ones(3);
  CHECK(t.eval(s, s, s) == doctest::Approx(15.0));  // six permutations
  t(2, 1, 0) = 0;
  CHECK(t.symmetry_defect() == doctest::Approx(2.5));
  CHECK(t.max_abs() == doctest::Approx(2.5));
}

TEST_CASE("eig_sym clusters repeated eigenvalues") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  RealMat q = RealMat::NullaryExpr(5, 5, [&] { return nd(rng); });
  q = Eigen::HouseholderQR<RealMat>(q).householderQ();
  Vec d(5);
  d << 2, 2, 0.5, -1, -1;
  RealMat m = q * d.asDiagonal() * q.transpose();
  auto sc = eig_sym(m);
  REQUIRE(sc.count() == 3);
  CHECK(sc.values[0] == doctest::Approx(2));
  CHECK(sc.multiplicities == std::vector<int>{2, 1, 2});
  CHECK((sc.reconstruct() - m).norm() < 1e-12);
  // cluster projector equals the one built from the known basis
  RealMat p0 = q.leftCols(2) * q.leftCols(2).transpose();
  CHECK((sc.projector(0) - p0).norm() < 1e-10);
}

TEST_CASE("eig_sym rejects non symmetric input") {
  RealMat m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(eig_sym(m), InputError);
}

TEST_CASE("fd_dir matches analytic derivatives") {
  auto r = fd_dir([](double t) { return std::sin(3 * t); }, 0.4, StepPolicy::first_derivative());
  CHECK(std::abs(r.value - 3 * std::cos(1.2)) < 1e-9);
  auto rl = fd_dir([](Real t) { return std::exp(t); }, Real(1), StepPolicy::nested());
  CHECK(std::abs(static_cast<double>(rl.value) - std::exp(1.0)) < 1e-9);
  Vec v0(2);
  auto rv = fd_dir([](double t) { Vec v(2); v << t * t, std::cos(t); return v; }, 0.7, StepPolicy::first_derivative());
  CHECK(std::abs(rv.value(0) - 1.4) < 1e-9);
  CHECK(std::abs(rv.value(1) + std::sin(0.7)) < 1e-9);
}

TEST_CASE("fd_dir wraps evaluation failures") {
  auto f = [](double t) -> double {
    if (t > 1.0) throw InputError("outside");
    return t;
  };
  CHECK_THROWS_AS(fd_dir(f, 1.0, StepPolicy::first_derivative()), StencilError);
  StepPolicy bad;
  bad.base_step = -1;
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("subspace angle") {
  RealMat a = RealMat::Zero(3, 1), b = RealMat::Zero(3, 1);
  a(0, 0) = 1;
  b(0, 0) = std::cos(0.3);
  b(1, 0) = std::sin(0.3);
  CHECK(subspace_sin_angle(a, b) == doctest::Approx(std::sin(0.3)));
  CHECK(subspace_sin_angle(a, a) < 1e-15);
}

TEST_CASE("kulkarni nomizu of the metric with itself is constant curvature") {
  RealMat g = RealMat::Identity(3, 3);
  Vec e1 = Vec::Unit(3, 0), e2 = Vec::Unit(3, 1), e3 = Vec::Unit(3, 2);
  // (g o g)(X, Y, Y, X) = |X|^2|Y|^2 - <X,Y>^2 with this normalisation
  CHECK(kn_sym(g, g, e1, e2, e2, e1) == doctest::Approx(1.0));
  CHECK(kn_sym(g, g, e1, e2, e1, e2) == doctest::Approx(-1.0));
  CHECK(kn_sym(g, g, e1, e2, e3, e1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(kn_sym(g, g, e1, Vec(Vec::Zero(2)), e1, e1), InputError);
}

TEST_CASE("unitary and symmetric predicates") {
  CplxMat u(2, 2);
  const double c = std::cos(0.2), s = std::sin(0.2);
  u << std::complex<double>(c, 0), std::complex<double>(0, s), std::complex<double>(0, s), std::complex<double>(c, 0);
  CHECK(is_unitary(u));
  u(0, 0) *= 1.01;
  CHECK_FALSE(is_unitary(u));
  RealMat m = RealMat::Identity(2, 2);
  m(0, 1) = 1e-3;
  CHECK_FALSE(is_symmetric(m));
}
