#include <doctest.h>

#include "isogeo_app/app.hpp"

using namespace isogeo;
using namespace isogeo::app;

TEST_CASE("argument helpers") {
  auto [n, v] = parse_tol("codazzi=1e-4");
  CHECK(n == "codazzi");
  CHECK(v == 1e-4);
  CHECK_THROWS_AS(parse_tol("codazzi"), ConfigError);
  CHECK_THROWS_AS(parse_tol("=1"), ConfigError);
  CHECK_THROWS_AS(parse_tol("x=abc"), ConfigError);
  CHECK(parse_suites("weyl,self") == std::vector<std::string>{"weyl", "self"});
  CHECK_THROWS_AS(parse_suites(","), ConfigError);
}

TEST_CASE("config validation") {
  RunConfig c;
  c.model = "g3-cartan";
  c.suites = {"weyl", "self", "weyl"};
  CHECK(c.effective_suites() == std::vector<std::string>{"self", "weyl"});
  c.points = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.points = 1;
  c.suites = {"nope"};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.suites = {};
  c.model = "missing";
  CHECK_THROWS_AS(run_verify(c), ConfigError);
}

TEST_CASE("report structure and tallies") {
  RunConfig c;
  c.model = "g6-hom-m1";
  auto rep = run_verify(c);
  auto j = to_json(rep);
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["passed"].get<int>() + j["summary"]["failed"].get<int>() == static_cast<int>(j["checks"].size()));
  CHECK(j["summary"]["warnings"].get<size_t>() == j["warnings"].size());
  CHECK(j["skipped"].size() == 3);  // lift, codazzi-gauss, symmetry
  for (const auto& s : j["skipped"]) CHECK(s["status"] == "skipped: not applicable");
  CHECK(rep.ok());
  CHECK(j["versions"]["model_data"]["g6-hom-m1"].get<std::string>().size() == 64);
  // names sorted
  for (size_t k = 1; k < j["checks"].size(); ++k) CHECK(j["checks"][k - 1]["name"] < j["checks"][k]["name"]);
  auto md = render_markdown(j);
  CHECK(md.find("homog6.criterion_i") != std::string::npos);
}

TEST_CASE("same seed, same body") {
  RunConfig c;
  c.model = "g3-cartan";
  c.points = 3;
  c.seed = 9;
  auto a = to_json(run_verify(c));
  auto b = to_json(run_verify(c));
  CHECK(report_body(a) == report_body(b));
  c.seed = 10;
  CHECK(report_body(to_json(run_verify(c))) != report_body(a));
}

TEST_CASE("tolerance overrides") {
  RunConfig c;
  c.model = "g2-product";
  c.suites = {"codazzi-gauss"};
  c.tol_overrides = {{"codazzi", 1e-300}, {"unknown.check", 1.0}};
  auto rep = run_verify(c);
  CHECK_FALSE(rep.ok());
  bool warned = false;
  for (const auto& w : rep.warnings) warned |= w.find("unknown.check") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("export alpha") {
  auto t = export_alpha({"g6-hom-m1", std::nullopt});
  CHECK(t["components"].size() == 5);
  CHECK(t["components"][0]["indices"] == "1,2,3");
  CHECK_THROWS_AS(export_alpha({"g6-hom-m1", 0}), ConfigError);
  CHECK(export_alpha({"g2-product", 0})["components"].empty());
  auto c = export_alpha({"g3-cartan", 2});
  for (const auto& e : c["components"]) {
    auto l = e["labels"];
    CHECK(l[0] != l[1]);
    CHECK(l[1] != l[2]);
    CHECK(l[0] != l[2]);
  }
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
