#include <doctest.h>

#include "isogeo/homog6.hpp"
#include "isogeo/identities.hpp"

using namespace isogeo;
using namespace isogeo::identities;

namespace {
models::SurfaceJet jet_of(const char* name, std::uint64_t seed, int k = 0) {
  auto m = models::registry_get(name);
  return models::jet(m, models::sample_points(m, k + 1, seed)[k]);
}
}  // namespace

TEST_CASE("cartan identity on equally spaced angles") {
  for (int g : {1, 2, 3, 4, 6}) CHECK(cartan_identity(family::AngleData::standard(g)).pass);
  CHECK(cartan_identity(family::AngleData::standard(4, {1, 2, 1, 2})).pass);
  CHECK(cartan_identity(family::AngleData::with_phi(3, 0.3)).pass);
  // unequal multiplicities for g = 3 break it
  CHECK_FALSE(cartan_identity(family::AngleData::standard(3, {1, 2, 1})).pass);
}

TEST_CASE("weyl implies cartan bookkeeping") {
  auto ok = Residual::make("w", 0.0, 1.0);
  auto bad = Residual::make("w", 2.0, 1.0);
  auto cartan_ok = Residual::make("c", 0.0, 1.0);
  auto cartan_bad = Residual::make("c", 2.0, 1.0);
  CHECK(weyl_implies_cartan({ok}, cartan_ok).pass);
  CHECK_FALSE(weyl_implies_cartan({ok}, cartan_bad).pass);
  CHECK(weyl_implies_cartan({bad}, cartan_bad).pass);
}

TEST_CASE("weyl identities on cartan points") {
  for (int k = 0; k < 4; ++k) {
    auto jet = jet_of("g3-cartan", 17, k);
    auto inv = quadric::invariants(jet);
    CHECK(invariant_weyl(inv, 1e-4).pass);
    CHECK(classical_weyl_all(inv, 1e-5).pass);
    // independent of the frame chosen inside each distribution
    CHECK(invariant_weyl(rotate_within_distributions(inv, 5 + k), 1e-4).pass);
  }
  auto inv = quadric::invariants(jet_of("g3-cartan", 1));
  Eigen::VectorXd v = Eigen::VectorXd::Unit(3, 0);
  CHECK_THROWS_AS(classical_weyl(inv, 1, 1, v, v), InputError);
  CHECK_THROWS_AS(classical_weyl(inv, 1, 2, v, v), InputError);  // v is not in D_2
}

TEST_CASE("weyl identities on tabulated data") {
  for (int m : {1, 2}) {
    auto table = homog6::load_alpha_table(m);
    auto inv = homog6::table_invariants(table);
    CHECK(invariant_weyl(inv, 1e-10).value < 1e-10);
    CHECK(classical_weyl_all(inv, 1e-10).pass);
    CHECK(invariant_weyl(rotate_within_distributions(inv, 3), 1e-10).pass);
    // an entry pairing D_1 with D_4 breaks both forms
    auto bad = homog6::table_invariants(homog6::violating_table(table, exact::Surd(1)));
    CHECK_FALSE(invariant_weyl(bad, 1e-10).pass);
    CHECK_FALSE(classical_weyl_all(bad, 1e-10).pass);
  }
}

TEST_CASE("codazzi and gauss on the lagrangian") {
  for (int k = 0; k < 2; ++k) {
    auto jet = jet_of("g3-cartan", 31, k);
    CHECK(codazzi_check(jet).pass);
    CHECK(gauss_check(jet).pass);
    CHECK(sphere_gauss_check(jet).pass);
    CHECK(nabla_b_check(jet).pass);
    CHECK(connection_relation_check(jet).pass);
  }
}

TEST_CASE("codazzi and gauss are exact for g = 2 over many points") {
  auto m = models::registry_get("g2-product");
  double worst_c = 0, worst_g = 0;
  for (const auto& p : models::sample_points(m, 32, 77)) {
    auto jet = models::jet(m, p);
    worst_c = std::max(worst_c, codazzi_check(jet, 1e-10).value);
    worst_g = std::max(worst_g, gauss_check(jet, 1e-10).value);
  }
  CHECK(worst_c < 1e-10);
  CHECK(worst_g < 1e-10);
  MESSAGE("g=2 codazzi worst " << worst_c << ", gauss worst " << worst_g);
}

TEST_CASE("symmetry identities on cartan points") {
  for (int k = 0; k < 4; ++k) {
    auto jet = jet_of("g3-cartan", 41, k);
    for (int j = 1; j <= 3; ++j) CHECK(symmetry_check(jet, j).pass);
    CHECK(composition_symmetry_check(jet, 1, 2).pass);
  }
}

TEST_CASE("symmetry index out of range") {
  auto jet = jet_of("g3-cartan", 1);
  CHECK_THROWS_AS(symmetry_check(jet, 4), InputError);
}
