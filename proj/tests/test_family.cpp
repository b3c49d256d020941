#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "isogeo/family.hpp"

using namespace isogeo;
using namespace isogeo::family;

TEST_CASE("standard angle data") {
  auto a = AngleData::standard(6);
  REQUIRE(a.thetas.size() == 6);
  for (int j = 0; j < 6; ++j) {
    CHECK(std::abs(a.thetas[j] - (2 * j + 1) * M_PI / 12) < 1e-15);
    CHECK(std::abs(a.lambdas[j] - 1 / std::tan(a.thetas[j])) < 1e-13);
  }
  CHECK_THROWS_AS(AngleData::with_phi(3, 2.0), InputError);
  CHECK_THROWS_AS(AngleData::standard(2, {1}), InputError);
}

TEST_CASE("shape operator along the parallel family rotates the angles") {
  RealMat A0 = RealMat::Zero(3, 3);
  const double th[3] = {M_PI / 6, M_PI / 2, 5 * M_PI / 6};
  for (int k = 0; k < 3; ++k) A0(k, k) = 1 / std::tan(th[k]);
  for (double t : {0.1, 0.9, 2.0, -0.4}) {
    RealMat At = shape_at_t(A0, t);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(At(k, k) - 1 / std::tan(th[k] - t)) < 1e-10);
  }
  CHECK_THROWS_AS(shape_at_t(A0, M_PI / 6), FocalTimeError);
}

TEST_CASE("focal spectrum for g = 6") {
  for (int j = 1; j <= 6; ++j) {
    auto fs = focal_spectrum(6, j);
    std::vector<double> oracle;
    for (int i = 1; i <= 6; ++i)
      if (i != j) oracle.push_back(std::cos((i - j) * M_PI / 6) / std::sin((i - j) * M_PI / 6));
    std::sort(oracle.rbegin(), oracle.rend());
    REQUIRE(fs.size() == 5);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(fs[k] - oracle[k]) < 1e-12);
    auto ex = focal_spectrum_exact(6, j);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(ex[k].to_double() - oracle[k]) < 1e-14);
  }
  CHECK_THROWS_AS(focal_spectrum(6, 7), InputError);
}

TEST_CASE("t grid avoids focal times") {
  auto a = AngleData::standard(3);
  auto ts = t_grid(a, 10);
  CHECK(ts.size() == 10);
  CHECK(t_grid(a, 5).size() == 5);  // pi/2 is focal for g = 3 and gets moved
  for (double t : ts)
    for (double th : a.thetas) CHECK(std::abs(std::sin(t - th)) > 1e-6);
}

TEST_CASE("parallel surfaces and reflections on the cartan model") {
  auto m = models::registry_get("g3-cartan");
  auto pts = models::sample_points(m, 4, 21);
  for (const auto& p : pts) {
    auto jet = models::jet(m, p);
    auto st = parallel(jet, 0.3);
    CHECK(std::abs(st.Ft.norm() - 1) < 1e-12);
    CHECK(std::abs(st.Ft.dot(st.nut)) < 1e-12);
    // at a focal time one distribution collapses
    auto focal = parallel(jet, jet.model().phi);
    CHECK(focal.rank == 2);
    CHECK_FALSE(focal.At.has_value());
    for (int j = 1; j <= 3; ++j) {
      CHECK(involution_residual(jet, j) < 1e-8);
      auto r = reflection_tau(jet, j);
      CHECK(r.membership_residual < 1e-9);
      CHECK(r.isometry_residual < 1e-6);
    }
    CHECK(rotation_order(jet, 12) == 3);
  }
}
