#include <doctest.h>

#include <random>

#include "isogeo/identities.hpp"
#include "isogeo/quadric.hpp"

using namespace isogeo;
using namespace isogeo::quadric;
using numkit::CplxMat;
using numkit::CVec;
using numkit::RealMat;
using numkit::Vec;

namespace {
models::SurfaceJet cartan_jet(std::uint64_t seed, int k = 0) {
  auto m = models::registry_get("g3-cartan");
  return models::jet(m, models::sample_points(m, k + 1, seed)[k]);
}
CplxMat cayley(const RealMat& a) {
  const int n = static_cast<int>(a.rows());
  const std::complex<double> i(0, 1);
  CplxMat I = CplxMat::Identity(n, n);
  CplxMat ac = a.cast<std::complex<double>>();
  return (ac + i * I) * (ac - i * I).inverse();
}
}  // namespace

TEST_CASE("lift lands in the stiefel manifold and is lagrangian") {
  auto jet = cartan_jet(2);
  for (double t : {0.0, 0.4, 1.3}) CHECK(stiefel_residual(lift(family::parallel(jet, t))) < 1e-12);
  auto lj = lagrangian_jet(jet);
  CHECK(horizontality_residual(lj) < 1e-8);
  CHECK(lagrangian_residual(lj) < 1e-8);
}

TEST_CASE("ghat equals half of 1 + A^2 and does not depend on t") {
  auto jet = cartan_jet(3);
  RealMat oracle = 0.5 * (RealMat::Identity(3, 3) + jet.A0 * jet.A0);
  CHECK((ghat(jet) - oracle).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ghat_from_lift(jet) - oracle).cwiseAbs().maxCoeff() < 1e-8);
  auto angles = family::AngleData::for_model(jet.model());
  for (double t : family::t_grid(angles, 10)) CHECK((ghat_at_t(jet, t) - oracle).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("alpha routes agree and transform as a tensor") {
  auto jet = cartan_jet(5, 1);
  const RealMat& F = jet.frame_f;
  auto a = alpha_tensor(jet, F, Route::lift);
  auto b = alpha_tensor(jet, F, Route::connection);
  auto c = alpha_tensor(jet, F, Route::connection_sheared);
  for (size_t k = 0; k < a.data.size(); ++k) {
    CHECK(std::abs(a.data[k] - b.data[k]) < 1e-6);
    CHECK(std::abs(b.data[k] - c.data[k]) < 1e-6);
  }
  CHECK(a.symmetry_defect() < 1e-7);
  // change of frame: contract with a rotated frame
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  RealMat q = RealMat::NullaryExpr(3, 3, [&] { return nd(rng); });
  q = Eigen::HouseholderQR<RealMat>(q).householderQ();
  auto rotated = alpha_tensor(jet, F * q, Route::lift);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Vec x = q.col(i), y = q.col(j), z = q.col(k);
        CHECK(std::abs(rotated(i, j, k) - a.eval(x, y, z)) < 1e-8);
      }
  // t independence
  auto angles = family::AngleData::for_model(jet.model());
  for (double t : family::t_grid(angles, 5)) {
    auto at = alpha_tensor_at_t(jet, F, t);
    for (size_t k = 0; k < a.data.size(); ++k) CHECK(std::abs(at.data[k] - a.data[k]) < 1e-5);
  }
}

TEST_CASE("alpha vanishes for g <= 2") {
  for (const char* name : {"g1-sphere", "g2-product"}) {
    auto m = models::registry_get(name);
    auto jet = models::jet(m, models::sample_points(m, 1, 1)[0]);
    CHECK(alpha_tensor(jet, jet.frame_f, Route::lift).max_abs() < 1e-9);
  }
}

TEST_CASE("b operator against the direct cayley transform") {
  auto jet = cartan_jet(8);
  CplxMat B0 = b_operator(jet.A0);
  CHECK((B0 - cayley(jet.A0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(numkit::is_unitary(B0));
  for (double t : {0.2, 1.1, 2.9}) {
    RealMat At = family::shape_at_t(jet.A0, t);
    CHECK((b_shift(B0, t) - cayley(At)).cwiseAbs().maxCoeff() < 1e-10);
  }
  auto angles = family::AngleData::for_model(jet.model());
  auto r = b_identities(jet.A0, angles, family::t_grid(angles, 10));
  CHECK(r.eigenvalues < 1e-10);
  CHECK(r.power < 1e-10);
  CHECK(r.conj_inverse < 1e-10);
  CHECK(r.shift < 1e-10);
  CHECK(r.tensor < 1e-10);
  CHECK(r.trace < 1e-10);
}

TEST_CASE("projectors are the eigenprojectors of A0") {
  auto jet = cartan_jet(12);
  auto angles = family::AngleData::for_model(jet.model());
  CplxMat B0 = b_operator(jet.A0);
  auto sc = numkit::eig_sym(jet.A0);
  for (int j = 1; j <= 3; ++j) {
    RealMat p = projector(angles, j, b_shift(B0, angles.thetas[j - 1]));
    // eig_sym sorts descending, angles ascend so lambdas descend too
    CHECK((p - sc.projector(j - 1)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("invariant set consistency") {
  auto inv = invariants(cartan_jet(4));
  auto c = check_invariants(inv);
  CHECK(c.alpha_symmetry < 1e-7);
  CHECK(c.alpha_same_distribution < 1e-6);
  CHECK(c.projector_sum < 1e-9);
  CHECK(c.projector_products < 1e-9);
  CHECK(c.projector_tensor < 1e-9);
  CHECK(c.b_power < 1e-9);
  CHECK((inv.ghat - RealMat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  // only the triple with three different distributions survives
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k)
        if (a == b || b == k || a == k) CHECK(std::abs(inv.alpha(a, b, k)) < 1e-7);
}

TEST_CASE("t tensor and quadric curvature symmetries") {
  auto inv = invariants(cartan_jet(6));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  auto rv = [&](int n) { return Vec(Vec::NullaryExpr(n, [&] { return nd(rng); })); };
  Vec X = rv(3), Y = rv(3), Z = rv(3), W = rv(3);
  CHECK(std::abs(t_tensor(inv, X, Y, Z, W) + t_tensor(inv, Z, W, X, Y)) < 1e-12);

  const int N = 5;
  CVec z = CVec::Zero(N);
  z(0) = 1 / std::sqrt(2.0);
  z(1) = std::complex<double>(0, 1 / std::sqrt(2.0));
  auto hv = [&] {
    CVec v = CVec::Zero(N);
    for (int k = 2; k < N; ++k) v(k) = std::complex<double>(nd(rng), nd(rng));
    return v;
  };
  CVec a = hv(), b = hv(), c = hv(), d = hv();
  const double r = quadric_curvature(z, a, b, c, d);
  CHECK(std::abs(r + quadric_curvature(z, b, a, c, d)) < 1e-10);
  CHECK(std::abs(r + quadric_curvature(z, a, b, d, c)) < 1e-10);
  CHECK(std::abs(r - quadric_curvature(z, c, d, a, b)) < 1e-10);
  const double bianchi = r + quadric_curvature(z, b, c, a, d) + quadric_curvature(z, c, a, b, d);
  CHECK(std::abs(bianchi) < 1e-10);
  CVec bad = CVec::Zero(N);
  bad(0) = 1;
  CHECK_THROWS_AS(quadric_curvature(z, bad, b, c, d), InputError);
}
