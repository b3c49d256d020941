#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "isogeo/models.hpp"

using namespace isogeo;
using namespace isogeo::models;

namespace {
std::vector<double> sorted_eigs(const RealMat& a) {
  Eigen::SelfAdjointEigenSolver<RealMat> es(0.5 * (a + a.transpose()));
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  return v;
}
}  // namespace

TEST_CASE("builtin registry") {
  auto r = Registry::builtin();
  CHECK(r.names() == std::vector<std::string>{"g1-sphere", "g2-product", "g3-cartan", "g6-hom-m1", "g6-hom-m2"});
  CHECK_THROWS_AS(r.get("nope"), LookupError);
  CHECK(r.get("g6-hom-m2")->kind == Kind::tabulated);
  CHECK(r.get("g6-hom-m2")->n == 12);
}

TEST_CASE("cartan points lie on the level set with principal curvatures sqrt3, 0, -sqrt3") {
  auto m = registry_get("g3-cartan");
  auto pts = sample_points(m, 16, 11);
  REQUIRE(pts.size() == 16);
  for (const auto& p : pts) {
    CHECK(on_surface(*m, p.x));
    CHECK(std::abs(p.x.norm() - 1) < 1e-12);
    auto j = jet(m, p);
    auto e = sorted_eigs(j.A0);
    CHECK(std::abs(e[0] + std::sqrt(3.0)) < 1e-6);
    CHECK(std::abs(e[1]) < 1e-6);
    CHECK(std::abs(e[2] - std::sqrt(3.0)) < 1e-6);
    // frame orthonormal and tangent
    RealMat F = j.frame_f;
    CHECK((F.transpose() * F - RealMat::Identity(3, 3)).norm() < 1e-12);
    CHECK((F.transpose() * p.x).norm() < 1e-12);
    CHECK((F.transpose() * j.normal).norm() < 1e-12);
  }
}

TEST_CASE("sphere and product curvatures") {
  // small sphere at polar radius theta has curvature cot(theta)
  auto s = make_sphere(2, 1.0);
  auto js = jet(s, sample_points(s, 1, 1)[0]);
  for (double e : sorted_eigs(js.A0)) CHECK(std::abs(std::abs(e) - 1 / std::tan(1.0)) < 1e-9);
  auto p = registry_get("g2-product");
  auto jp = jet(p, sample_points(p, 1, 4)[0]);
  auto e = sorted_eigs(jp.A0);
  CHECK(std::abs(e[0] + 1) < 1e-9);
  CHECK(std::abs(e[1] - 1) < 1e-9);
}

TEST_CASE("seeds are reproducible") {
  auto m = registry_get("g3-cartan");
  auto a = sample_points(m, 3, 5), b = sample_points(m, 3, 5), c = sample_points(m, 3, 6);
  for (int k = 0; k < 3; ++k) CHECK(a[k].x == b[k].x);
  CHECK(a[0].x != c[0].x);
}

TEST_CASE("self test on builtin geometry models") {
  for (const char* name : {"g1-sphere", "g2-product", "g3-cartan"}) {
    auto m = registry_get(name);
    for (const auto& r : model_self_test(m, sample_points(m, 4, 2), 1e-6)) CHECK_MESSAGE(r.pass, name << " " << r.name);
  }
}

TEST_CASE("tabulated models carry no geometry") {
  auto m = registry_get("g6-hom-m1");
  CHECK_FALSE(m->has_geometry());
  CHECK_THROWS(sample_points(m, 1, 1));
}

TEST_CASE("model files from a directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "isogeo_models_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto base = Registry::builtin();
  auto r = base;
  r.add_directory(dir.string());
  CHECK(r.list().size() == 5);
  std::string txt;
  {
    std::ifstream in(std::string(ISOGEO_TEST_MODEL_DIR) + "/g6_hom_m1.json");
    txt.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto pos = txt.find("g6-hom-m1");
  txt.replace(pos, 9, "g6-copy");
  std::ofstream(dir / "copy.json") << txt;
  r.add_directory(dir.string());
  CHECK(r.list().size() == 6);
  CHECK(r.get("g6-copy")->alpha_entries.size() == 5);
  // duplicate names are rejected
  CHECK_THROWS(r.add(base.get("g3-cartan")));
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK_THROWS(load_model_file((dir / "broken.json").string()));
  fs::remove_all(dir);
}
