// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isogeo/family.hpp"
#include "isogeo/homog6.hpp"
#include "isogeo/identities.hpp"
#include "isogeo/quadric.hpp"
#include "isogeo_app/app.hpp"

using namespace isogeo;
using exact::Surd;
using numkit::CplxMat;
using numkit::RealMat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(dt < budget_s, "runtime budget");
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %-34s %8.3f s (< %g s)%s\n", id, o.pass ? "PASS" : "FAIL", title, dt, budget_s,
              o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<models::SurfaceJet> jets(const char* name, int count, std::uint64_t seed) {
  auto m = models::registry_get(name);
  std::vector<models::SurfaceJet> out;
  for (const auto& p : models::sample_points(m, count, seed)) out.push_back(models::jet(m, p));
  return out;
}

double max_abs(const RealMat& m) { return m.cwiseAbs().maxCoeff(); }

// entries as displayed for the two homogeneous examples; "kb" is the barred index k
using Displayed = std::vector<std::pair<std::array<const char*, 3>, const char*>>;
const Displayed kM1 = {{{"1", "2", "3"}, "sqrt(3/2)"},
                       {{"3", "4", "5"}, "sqrt(3/2)"},
                       {{"1", "5", "6"}, "sqrt(3/2)"},
                       {{"2", "4", "6"}, "-sqrt(3/2)"},
                       {{"1", "3", "5"}, "-2*sqrt(3/2)"}};
const Displayed kM2 = {
    {{"1", "5b", "6"}, "-sqrt(3/2)"},   {{"1b", "5", "6"}, "sqrt(3/2)"},    {{"1", "5", "6b"}, "sqrt(3/2)"},
    {{"1b", "5b", "6b"}, "sqrt(3/2)"},  {{"2", "4b", "6"}, "-sqrt(3/2)"},   {{"2b", "4", "6"}, "sqrt(3/2)"},
    {{"2", "4", "6b"}, "sqrt(3/2)"},    {{"2b", "4b", "6b"}, "sqrt(3/2)"},  {{"1", "2b", "3"}, "-sqrt(3/2)"},
    {{"1b", "2", "3"}, "sqrt(3/2)"},    {{"1", "2", "3b"}, "sqrt(3/2)"},    {{"1b", "2b", "3b"}, "sqrt(3/2)"},
    {{"3", "4b", "5"}, "sqrt(3/2)"},    {{"3b", "4", "5"}, "-sqrt(3/2)"},   {{"3", "4", "5b"}, "-sqrt(3/2)"},
    {{"3b", "4b", "5b"}, "-sqrt(3/2)"}, {{"1", "3b", "5"}, "2*sqrt(3/2)"},  {{"1b", "3", "5"}, "-2*sqrt(3/2)"},
    {{"1", "3", "5b"}, "-2*sqrt(3/2)"}, {{"1b", "3b", "5b"}, "-2*sqrt(3/2)"}};

int index_of(const std::string& s) {
  const bool bar = s.back() == 'b';
  const int k = std::stoi(bar ? s.substr(0, s.size() - 1) : s) - 1;
  return bar ? k + 6 : k;
}

void check_table(Outcome& o, int m, const Displayed& shown) {
  auto t = homog6::load_alpha_table(m);
  o.require(t.entries.size() == shown.size(), "entry count m=" + std::to_string(m));
  for (const auto& [idx, val] : shown) {
    homog6::Triple key{index_of(idx[0]), index_of(idx[1]), index_of(idx[2])};
    std::sort(key.begin(), key.end());
    auto it = t.sources.find(key);
    const std::string name = std::string(idx[0]) + idx[1] + idx[2];
    o.require(it != t.sources.end() && it->second == val, "string m=" + std::to_string(m) + " " + name);
    o.require(t.value(key[0], key[1], key[2]) == Surd::parse(val), "value m=" + std::to_string(m) + " " + name);
  }
  auto crit = homog6::homogeneity_criteria(t, false);
  for (int k = 0; k < 4; ++k) o.require(crit[k].pass, "criterion " + crit[k].criterion + " m=" + std::to_string(m));
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ISOGEO_CLI) + " " + args + " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string body_of(const std::string& path) {
  std::ifstream in(path);
  return app::report_body(nlohmann::json::parse(in));
}

}  // namespace

int main() {
  criterion(1, "focal spectrum g=6", 1, [](Outcome& o) {
    const Surd r3 = Surd::sqrt3();
    const std::vector<Surd> oracle = {r3, r3 / Surd(3), Surd(0), -(r3 / Surd(3)), -r3};
    for (int j = 1; j <= 6; ++j) {
      auto ex = family::focal_spectrum_exact(6, j);
      auto num = family::focal_spectrum(6, j);
      o.require(ex == oracle, "exact j=" + std::to_string(j));
      for (int k = 0; k < 5; ++k) o.require(std::abs(num[k] - oracle[k].to_double()) < 1e-12, "numeric");
      // the family diagonal carries the same values
      auto fam = homog6::build_isospectral_family(homog6::load_alpha_table(1), j);
      std::vector<Surd> diag = fam.L0_exact;
      std::sort(diag.begin(), diag.end(), [](const Surd& a, const Surd& b) { return a.to_double() > b.to_double(); });
      o.require(diag == oracle, "L0 diagonal j=" + std::to_string(j));
    }
  });

  criterion(2, "alpha table fidelity", 1, [](Outcome& o) {
    check_table(o, 1, kM1);
    check_table(o, 2, kM2);
  });

  criterion(3, "isospectrality", 5, [](Outcome& o) {
    for (int m : {1, 2}) {
      auto t = homog6::load_alpha_table(m);
      for (int j = 1; j <= 6; ++j) {
        auto fam = homog6::build_isospectral_family(t, j);
        o.require(homog6::isospectral_scan(fam, 64).value < 1e-9, "spectrum");
        o.require(homog6::kernel_constancy(fam, 64).value < 1e-8, "kernel");
      }
    }
    o.require(homog6::kernel_constancy(homog6::rotating_kernel_family(1.0), 64).value > 0.1, "negative control");
  });

  criterion(4, "invariant weyl", 60, [](Outcome& o) {
    for (int m : {1, 2})
      o.require(identities::invariant_weyl(homog6::table_invariants(homog6::load_alpha_table(m))).value < 1e-10,
                "table m=" + std::to_string(m));
    for (const auto& jet : jets("g3-cartan", 4, 101))
      o.require(identities::invariant_weyl(quadric::invariants(jet), 1e-4).value < 1e-4, "cartan");
  });

  criterion(5, "lift vs connection alpha", 120, [](Outcome& o) {
    for (const auto& jet : jets("g3-cartan", 8, 202)) {
      auto a = quadric::alpha_tensor(jet, jet.frame_f, quadric::Route::lift);
      auto b = quadric::alpha_tensor(jet, jet.frame_f, quadric::Route::connection);
      for (size_t k = 0; k < a.data.size(); ++k) o.require(std::abs(a.data[k] - b.data[k]) < 1e-6, "routes");
      auto angles = family::AngleData::for_model(jet.model());
      const auto ts = family::t_grid(angles, 5);
      o.require(ts.size() == 5, "t grid");
      for (double t : ts) {
        auto at = quadric::alpha_tensor_at_t(jet, jet.frame_f, t);
        for (size_t k = 0; k < a.data.size(); ++k) o.require(std::abs(at.data[k] - a.data[k]) < 1e-5, "t");
      }
    }
  });

  criterion(6, "ghat t-independence", 30, [](Outcome& o) {
    for (const char* name : {"g1-sphere", "g2-product", "g3-cartan"})
      for (const auto& jet : jets(name, 4, 303)) {
        auto angles = family::AngleData::for_model(jet.model());
        const RealMat g0 = quadric::ghat(jet);
        // closed form in the orthonormal frame
        o.require(max_abs(g0 - 0.5 * (RealMat::Identity(jet.n(), jet.n()) + jet.A0 * jet.A0)) < 1e-12, name);
        for (double t : family::t_grid(angles, 10)) o.require(max_abs(quadric::ghat_at_t(jet, t) - g0) < 1e-8, name);
      }
  });

  criterion(7, "cartan identity", 1, [](Outcome& o) {
    for (int g : {2, 3, 6}) o.require(identities::cartan_identity(family::AngleData::standard(g)).value < 1e-12, "g");
    for (const char* name : {"g1-sphere", "g2-product", "g3-cartan", "g6-hom-m1", "g6-hom-m2"}) {
      app::RunConfig c;
      c.model = name;
      c.suites = {"weyl", "cartan"};
      c.points = 2;
      bool found = false;
      for (const auto& ch : app::run_verify(c).checks)
        if (ch.r.name == "cartan.implied_by_weyl") {
          found = true;
          o.require(ch.r.pass, name);
        }
      o.require(found, std::string("implication missing for ") + name);
    }
  });

  criterion(8, "codazzi and gauss", 180, [](Outcome& o) {
    for (const auto& jet : jets("g3-cartan", 4, 404)) {
      o.require(identities::codazzi_check(jet).value < 1e-3, "codazzi g=3");
      o.require(identities::gauss_check(jet).value < 1e-3, "gauss g=3");
    }
    for (const auto& jet : jets("g2-product", 16, 405)) {
      o.require(identities::codazzi_check(jet, 1e-10).value < 1e-10, "codazzi g=2");
      o.require(identities::gauss_check(jet, 1e-10).value < 1e-10, "gauss g=2");
    }
  });

  criterion(9, "symmetry identities", 60, [](Outcome& o) {
    for (const auto& jet : jets("g3-cartan", 4, 505))
      for (int j = 1; j <= 3; ++j) {
        o.require(identities::symmetry_check(jet, j).value < 1e-5, "tau_" + std::to_string(j));
        o.require(family::involution_residual(jet, j) < 1e-8, "involution");
      }
  });

  criterion(10, "model self-tests", 30, [](Outcome& o) {
    const double r3 = std::sqrt(3.0);
    for (const auto& jet : jets("g3-cartan", 16, 606)) {
      Eigen::SelfAdjointEigenSolver<RealMat> es(jet.A0);
      const auto& e = es.eigenvalues();
      o.require(std::abs(e(0) + r3) < 1e-6 && std::abs(e(1)) < 1e-6 && std::abs(e(2) - r3) < 1e-6, "curvatures");
    }
    auto algebra = [&](const quadric::InvariantSet& inv, const std::string& what) {
      RealMat sum = RealMat::Zero(inv.n(), inv.n());
      for (const auto& p : inv.projs) {
        sum += p;
        o.require(max_abs(p * p - p) < 1e-9, "idempotent " + what);
      }
      o.require(max_abs(sum - RealMat::Identity(inv.n(), inv.n())) < 1e-9, "sum " + what);
    };
    for (int m : {1, 2}) {
      auto inv = homog6::table_invariants(homog6::load_alpha_table(m));
      CplxMat p = CplxMat::Identity(inv.n(), inv.n());
      for (int k = 0; k < 6; ++k) p = p * inv.B0;
      o.require((p + CplxMat::Identity(inv.n(), inv.n())).cwiseAbs().maxCoeff() < 1e-9, "B0^6");
      algebra(inv, "table");
    }
    for (const char* name : {"g1-sphere", "g2-product", "g3-cartan"})
      for (const auto& jet : jets(name, 4, 607)) algebra(quadric::invariants(jet), name);
  });

  criterion(11, "cli determinism and exit codes", 10, [](Outcome& o) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "isogeo_acceptance";
    fs::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
    o.require(run_cli("verify --model g3-cartan --points 3 --seed 5 --out " + a) == 0, "run a");
    o.require(run_cli("verify --model g3-cartan --points 3 --seed 5 --out " + b) == 0, "run b");
    o.require(body_of(a) == body_of(b), "byte-identical bodies");
    o.require(run_cli("verify --model g6-hom-m1 --suites homog6,weyl") == 0, "exit 0");
    o.require(run_cli("verify --model g2-product --suites self,invariants,weyl --points 16 --seed 1") == 0, "exit 0 g2");
    o.require(run_cli("verify --model g3-cartan --points 1 --tol codazzi=1e-300") == 1, "exit 1");
    o.require(run_cli("verify --model nonexistent") == 2, "exit 2 model");
    o.require(run_cli("verify --model g3-cartan --suites nope") == 2, "exit 2 suite");
    o.require(run_cli("export-alpha --model g6-hom-m1 --point 0") == 2, "exit 2 export");
    fs::remove_all(dir);
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
