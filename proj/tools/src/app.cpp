#include "isogeo_app/app.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include <openssl/evp.h>
#include <Eigen/Core>
#include <boost/version.hpp>

#include "isogeo/family.hpp"
#include "isogeo/homog6.hpp"
#include "isogeo/identities.hpp"
#include "isogeo/quadric.hpp"

#ifndef ISOGEO_VERSION
#define ISOGEO_VERSION "unknown"
#endif

namespace isogeo::app {

using nlohmann::json;
using numkit::RealMat;
using numkit::Vec;

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"self",     "lift",   "invariants", "weyl", "codazzi-gauss",
                                             "symmetry", "cartan", "homog6"};
  return s;
}

void RunConfig::validate() const {
  if (model.empty()) throw ConfigError("no model given");
  if (points < 1) throw ConfigError("--points must be >= 1");
  for (const auto& s : suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw ConfigError("unknown suite '" + s + "'");
  for (const auto& [k, v] : tol_overrides)
    if (!(v > 0) || !std::isfinite(v)) throw ConfigError("tolerance for '" + k + "' must be positive");
  try {
    fd.validate();
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<std::string> RunConfig::effective_suites() const {
  if (suites.empty()) return all_suites();
  std::vector<std::string> out;
  for (const auto& s : all_suites())  // canonical order, no duplicates
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  return out;
}

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.r.pass; }));
}
int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::pair<std::string, double> parse_tol(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--tol expects name=value, got '" + s + "'");
  std::string name = s.substr(0, eq), val = s.substr(eq + 1);
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(val, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != val.size()) throw ConfigError("bad tolerance value '" + val + "'");
  return {name, v};
}

std::vector<std::string> parse_suites(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw ConfigError("--suites is empty");
  return out;
}

namespace {

// per-check worst value over points
class Collector {
 public:
  void add(const std::string& suite, Residual r, int point = -1) {
    if (point >= 0) r.context["worst_point"] = std::to_string(point);
    auto it = index_.find(r.name);
    if (it == index_.end()) {
      index_[r.name] = checks_.size();
      checks_.push_back({suite, std::move(r)});
      return;
    }
    Residual& cur = checks_[it->second].r;
    const bool worse = !std::isfinite(r.value) || (std::isfinite(cur.value) && r.value > cur.value);
    if (worse) cur = std::move(r);
  }
  std::vector<Check> take() { return std::move(checks_); }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
  std::map<std::string, size_t> index_;
};

Residual failure(const std::string& name, const std::exception& e) {
  return Residual::make(name, std::numeric_limits<double>::infinity(), 0.0, {}, std::string("error: ") + e.what());
}

double max_abs(const RealMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double tensor_diff(const numkit::Tensor3& a, const numkit::Tensor3& b) {
  double d = 0;
  for (size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct PointContext {
  const models::ModelSpec& spec;
  const family::AngleData& angles;
  const numkit::StepPolicy& fd;
  const std::vector<std::string>& suites;
};

void lift_checks(const models::SurfaceJet& jet, const PointContext& pc, Collector& out) {
  const std::string S = "lift";
  auto st = family::parallel(jet, 0.0);
  out.add(S, Residual::make("lift.stiefel", quadric::stiefel_residual(quadric::lift(st)), 1e-10));
  auto lj = quadric::lagrangian_jet(jet);
  out.add(S, Residual::make("lift.horizontality", quadric::horizontality_residual(lj), 1e-8));
  out.add(S, Residual::make("lift.lagrangian", quadric::lagrangian_residual(lj), 1e-8));
  const RealMat g0 = quadric::ghat(jet);
  out.add(S, Residual::make("lift.ghat_from_lift", max_abs(quadric::ghat_from_lift(jet) - g0), 1e-8));
  double dev = 0;
  for (double t : family::t_grid(pc.angles, 10)) dev = std::max(dev, max_abs(quadric::ghat_at_t(jet, t) - g0));
  out.add(S, Residual::make("lift.ghat_t_independence", dev, 1e-8, {{"t_values", "10"}}));

  const RealMat& F = jet.frame_f;
  auto lift_t = quadric::alpha_tensor(jet, F, quadric::Route::lift, pc.fd);
  auto conn = quadric::alpha_tensor(jet, F, quadric::Route::connection, pc.fd);
  auto sheared = quadric::alpha_tensor(jet, F, quadric::Route::connection_sheared, pc.fd);
  out.add(S, Residual::make("lift.alpha_routes", tensor_diff(lift_t, conn), 1e-6, {{"triples", "all"}}));
  out.add(S, Residual::make("lift.alpha_extension", tensor_diff(conn, sheared), 1e-6));
  double tdev = 0;
  for (double t : family::t_grid(pc.angles, 5)) tdev = std::max(tdev, tensor_diff(quadric::alpha_tensor_at_t(jet, F, t, pc.fd), lift_t));
  out.add(S, Residual::make("lift.alpha_t_independence", tdev, 1e-5, {{"t_values", "5"}}));
}

void invariant_checks(const quadric::InvariantSet& inv, bool exact_data, Collector& out) {
  const std::string S = "invariants";
  const double fd = exact_data ? 1e-10 : 1e-5;
  const double alg = exact_data ? 1e-10 : 1e-9;
  auto c = quadric::check_invariants(inv);
  out.add(S, Residual::make("invariants.alpha_symmetry", c.alpha_symmetry, exact_data ? 1e-10 : 1e-7));
  out.add(S, Residual::make("invariants.alpha_same_distribution", c.alpha_same_distribution, fd));
  out.add(S, Residual::make("invariants.alpha_trace", c.alpha_trace, fd));
  out.add(S, Residual::make("invariants.projector_sum", c.projector_sum, alg));
  out.add(S, Residual::make("invariants.projector_products", c.projector_products, alg));
  out.add(S, Residual::make("invariants.projector_image", c.projector_image, alg));
  out.add(S, Residual::make("invariants.projector_tensor", c.projector_tensor, alg));
  out.add(S, Residual::make("invariants.b_unitary", c.b_unitary, alg));
  out.add(S, Residual::make("invariants.b_power", c.b_power, alg));
  out.add(S, Residual::make("invariants.b_conj_inverse", c.b_conj_inverse, alg));
}

void geometry_invariant_checks(const models::SurfaceJet& jet, const quadric::InvariantSet& inv, const PointContext& pc,
                               Collector& out) {
  invariant_checks(inv, false, out);
  const std::string S = "invariants";
  auto b = quadric::b_identities(jet.A0, pc.angles, family::t_grid(pc.angles, 10));
  out.add(S, Residual::make("invariants.b_eigenvalues", b.eigenvalues, 1e-9));
  out.add(S, Residual::make("invariants.b_power_t", b.power, 1e-9));
  out.add(S, Residual::make("invariants.b_conj_inverse_t", b.conj_inverse, 1e-9));
  out.add(S, Residual::make("invariants.b_shift", b.shift, 1e-9));
  out.add(S, Residual::make("invariants.b_tensor", b.tensor, 1e-9));
  const auto& m = pc.angles.multiplicities;
  if (std::adjacent_find(m.begin(), m.end(), std::not_equal_to<>()) == m.end())
    out.add(S, Residual::make("invariants.b_trace", b.trace, 1e-9));
  out.add(S, identities::connection_relation_check(jet));
}

void self_point_checks(const models::SurfaceJet& jet, const PointContext& pc, Collector& out) {
  const std::string S = "self";
  const auto B0 = quadric::b_operator(jet.A0);
  const int g = pc.angles.g;
  const std::complex<double> target = std::exp(std::complex<double>(0, 2.0 * g * pc.angles.phi));
  numkit::CplxMat P = numkit::CplxMat::Identity(B0.rows(), B0.cols());
  for (int k = 0; k < g; ++k) P = P * B0;
  out.add(S, Residual::make("self.b_power", (P - target * numkit::CplxMat::Identity(P.rows(), P.cols())).cwiseAbs().maxCoeff(), 1e-9,
                            {{"g", std::to_string(g)}}));
  RealMat sum = RealMat::Zero(jet.n(), jet.n());
  double idem = 0;
  for (int j = 1; j <= g; ++j) {
    RealMat pj = quadric::projector(pc.angles, j, quadric::b_shift(B0, pc.angles.thetas[j - 1]));
    sum += pj;
    idem = std::max(idem, max_abs(pj * pj - pj));
  }
  out.add(S, Residual::make("self.projector_sum", max_abs(sum - RealMat::Identity(jet.n(), jet.n())), 1e-9));
  out.add(S, Residual::make("self.projector_idempotent", idem, 1e-9));
}

void codazzi_gauss_checks(const models::SurfaceJet& jet, const PointContext& pc, Collector& out) {
  const std::string S = "codazzi-gauss";
  // alpha vanishes for g <= 2 and both sides are exactly zero
  const double tol = pc.angles.g == 2 ? 1e-10 : 1e-3;
  out.add(S, identities::codazzi_check(jet, tol));
  out.add(S, identities::gauss_check(jet, tol));
  out.add(S, identities::sphere_gauss_check(jet));
  out.add(S, identities::nabla_b_check(jet));
}

void symmetry_checks(const models::SurfaceJet& jet, const PointContext& pc, Collector& out) {
  const std::string S = "symmetry";
  for (int j = 1; j <= pc.angles.g; ++j) {
    Residual r = identities::symmetry_check(jet, j, 1e-5, pc.fd);
    r.name = "symmetry.tau" + std::to_string(j);
    out.add(S, r);
    out.add(S, Residual::make("symmetry.involution_tau" + std::to_string(j), family::involution_residual(jet, j), 1e-8));
  }
  if (pc.angles.g >= 2) out.add(S, identities::composition_symmetry_check(jet, 1, 2, 1e-5, pc.fd));
}

Collector point_checks(const models::SurfaceJet& jet, const PointContext& pc, std::vector<Residual>& weyl_out) {
  Collector out;
  auto guarded = [&](const std::string& suite, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      out.add(suite, failure(suite + ".error", e));
    }
  };
  if (has(pc.suites, "self")) guarded("self", [&] { self_point_checks(jet, pc, out); });
  if (has(pc.suites, "lift")) guarded("lift", [&] { lift_checks(jet, pc, out); });
  std::optional<quadric::InvariantSet> inv;
  if (has(pc.suites, "invariants") || has(pc.suites, "weyl"))
    guarded("invariants", [&] { inv = quadric::invariants(jet, pc.fd); });
  if (inv && has(pc.suites, "invariants")) guarded("invariants", [&] { geometry_invariant_checks(jet, *inv, pc, out); });
  if (inv && has(pc.suites, "weyl"))
    guarded("weyl", [&] {
      Residual w = identities::invariant_weyl(*inv, 1e-4);
      Residual c = identities::classical_weyl_all(*inv, 1e-5);
      weyl_out.push_back(w);
      weyl_out.push_back(c);
      out.add("weyl", w);
      out.add("weyl", c);
    });
  if (has(pc.suites, "codazzi-gauss")) guarded("codazzi-gauss", [&] { codazzi_gauss_checks(jet, pc, out); });
  if (has(pc.suites, "symmetry")) guarded("symmetry", [&] { symmetry_checks(jet, pc, out); });
  return out;
}

void homog6_checks(const homog6::AlphaTable& table, Collector& out) {
  const std::string S = "homog6";
  for (const auto& c : homog6::homogeneity_criteria(table, true))
    out.add(S, Residual::make("homog6.criterion_" + c.criterion, c.residual, 1e-10, {{"m", std::to_string(table.m)}}, c.note));
  double iso = 0, ker = 0;
  for (int j = 1; j <= 6; ++j)
    for (int a = 0; a < table.n(); ++a) {
      if (table.label(a) != j - 1) continue;
      auto fam = homog6::build_isospectral_family(table, j, a + 1);
      iso = std::max(iso, homog6::isospectral_scan(fam).value);
      ker = std::max(ker, homog6::kernel_constancy(fam).value);
    }
  out.add(S, Residual::make("homog6.isospectral", iso, 1e-9, {{"samples", "64"}}));
  out.add(S, Residual::make("homog6.kernel_constancy", ker, 1e-8, {{"samples", "64"}}));
  double neg = 0;
  std::string note;
  try {
    neg = homog6::kernel_constancy(homog6::rotating_kernel_family(1.0)).value;
    note = "rotating kernel residual " + std::to_string(neg);
  } catch (const StructuralError& e) {
    neg = 1.0;
    note = e.what();
  }
  // the control must be flagged; value is 1 when it is not
  out.add(S, Residual::make("homog6.negative_control", neg > 0.1 ? 0.0 : 1.0, 0.5, {}, note));
}

void tabulated_checks(const models::ModelSpec& spec, const RunConfig& cfg, const std::vector<std::string>& suites,
                      Collector& out, std::vector<Residual>& weyl) {
  const auto table = homog6::AlphaTable::from_model(spec);
  const auto inv = homog6::table_invariants(table);
  if (has(suites, "self")) {
    auto c = quadric::check_invariants(inv);
    out.add("self", Residual::make("self.b_power", c.b_power, 1e-9, {{"g", "6"}}));
    out.add("self", Residual::make("self.projector_sum", c.projector_sum, 1e-9));
    out.add("self", Residual::make("self.projector_idempotent", c.projector_products, 1e-9));
  }
  if (has(suites, "invariants")) invariant_checks(inv, true, out);
  if (has(suites, "weyl")) {
    Residual w = identities::invariant_weyl(inv, 1e-10);
    Residual c = identities::classical_weyl_all(inv, 1e-10);
    weyl = {w, c};
    out.add("weyl", w);
    out.add("weyl", c);
  }
  if (has(suites, "homog6")) homog6_checks(table, out);
  (void)cfg;
}

std::string data_hash(const models::ModelSpec& spec) {
  return spec.data_text.empty() ? "builtin" : sha256_hex(spec.data_text);
}

}  // namespace

Report run_verify(const RunConfig& cfg) {
  cfg.validate();
  models::ModelPtr model;
  try {
    model = models::registry_get(cfg.model);
  } catch (const LookupError& e) {
    throw ConfigError(e.what());
  }
  const auto& spec = *model;
  const auto suites = cfg.effective_suites();

  Report rep;
  rep.config = cfg;
  rep.config.suites = suites;
  rep.versions = {{"artifact", ISOGEO_VERSION},
                  {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                std::to_string(EIGEN_MINOR_VERSION)},
                  {"boost", BOOST_LIB_VERSION},
                  {"model_data", {{spec.name, data_hash(spec)}}}};

  Collector out;
  std::vector<Residual> weyl;
  static const std::set<std::string> geometry_only = {"lift", "codazzi-gauss", "symmetry"};

  if (!spec.has_geometry()) {
    for (const auto& s : suites)
      if (geometry_only.count(s)) rep.skipped.push_back(s);
    tabulated_checks(spec, cfg, suites, out, weyl);
  } else {
    if (has(suites, "homog6")) rep.skipped.push_back("homog6");
    const auto angles = family::AngleData::for_model(spec);
    if (has(suites, "self")) {
      try {
        auto pts = models::sample_points(model, std::max(cfg.points, 2), cfg.seed);
        for (auto& r : models::model_self_test(model, pts, 1e-6)) out.add("self", r);
      } catch (const Error& e) {
        out.add("self", failure("self.error", e));
      }
    }
    // jets on this thread, per-point checks fanned out, merged in point order
    auto pts = models::sample_points(model, cfg.points, cfg.seed);
    std::vector<models::SurfaceJet> jets;
    for (const auto& p : pts) jets.push_back(models::jet(model, p));
    PointContext pc{spec, angles, cfg.fd, suites};
    std::vector<std::future<std::pair<Collector, std::vector<Residual>>>> tasks;
    const auto policy = std::thread::hardware_concurrency() > 1 ? std::launch::async : std::launch::deferred;
    for (const auto& jet : jets)
      tasks.push_back(std::async(policy, [&pc, &jet] {
        std::vector<Residual> w;
        Collector c = point_checks(jet, pc, w);
        return std::make_pair(std::move(c), std::move(w));
      }));
    for (size_t k = 0; k < tasks.size(); ++k) {
      auto [c, w] = tasks[k].get();
      for (auto ch : c.checks()) {
        out.add(ch.suite, ch.r, static_cast<int>(k));
      }
      weyl.insert(weyl.end(), w.begin(), w.end());
    }
  }

  if (has(suites, "cartan")) {
    const auto angles = spec.has_geometry() ? family::AngleData::for_model(spec)
                                            : family::AngleData::standard(spec.g, spec.multiplicities);
    Residual cartan = identities::cartan_identity(angles);
    out.add("cartan", cartan);
    if (!weyl.empty()) out.add("cartan", identities::weyl_implies_cartan(weyl, cartan));
  }

  rep.checks = out.take();
  for (auto& c : rep.checks) {
    if (c.r.note.find("opposite overall sign") != std::string::npos)
      rep.warnings.push_back(c.r.name + ": " + c.r.note);
    auto it = cfg.tol_overrides.find(c.r.name);
    if (it != cfg.tol_overrides.end()) {
      c.r.tol = it->second;
      c.r.pass = std::isfinite(c.r.value) && c.r.value < c.r.tol;
      c.r.context["tol_override"] = "1";
    }
  }
  for (const auto& [k, v] : cfg.tol_overrides)
    if (std::none_of(rep.checks.begin(), rep.checks.end(), [&](const Check& c) { return c.r.name == k; }))
      rep.warnings.push_back("tolerance override '" + k + "' matched no check");
  for (const auto& s : rep.skipped) rep.warnings.push_back("suite " + s + " skipped: not applicable");
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.r.name < b.r.name; });
  rep.generated_at = utc_timestamp();
  return rep;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = {{"name", c.r.name}, {"suite", c.suite}, {"tol", c.r.tol}, {"pass", c.r.pass}, {"context", c.r.context}};
    e["value"] = std::isfinite(c.r.value) ? json(c.r.value) : json(nullptr);
    if (!c.r.note.empty()) e["note"] = c.r.note;
    checks.push_back(std::move(e));
  }
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"suite", s}, {"status", "skipped: not applicable"}});
  json tol = json::object();
  for (const auto& [k, v] : r.config.tol_overrides) tol[k] = v;
  return {{"schema", 1},
          {"generated_at", r.generated_at},
          {"config",
           {{"model", r.config.model},
            {"suites", r.config.suites},
            {"points", r.config.points},
            {"seed", r.config.seed},
            {"tol_overrides", tol},
            {"fd_step", r.config.fd.base_step}}},
          {"checks", checks},
          {"skipped", skipped},
          {"warnings", r.warnings},
          {"summary", {{"passed", r.passed()}, {"failed", r.failed()}, {"warnings", r.warnings.size()}}},
          {"versions", r.versions}};
}

std::string report_body(const json& j) {
  json b = j;
  b.erase("generated_at");
  return b.dump(2);
}

namespace {
std::string fmt(const json& v) {
  if (v.is_null()) return "non-finite";
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v.get<double>();
  return os.str();
}
}  // namespace

std::string render_markdown(const json& j) {
  std::ostringstream os;
  const auto& c = j.at("config");
  const auto& s = j.at("summary");
  os << "# isogeo report: " << c.at("model").get<std::string>() << "\n\n";
  os << "generated " << j.at("generated_at").get<std::string>() << ", seed " << c.at("seed") << ", points "
     << c.at("points") << "\n\n";
  os << "**" << s.at("passed") << " passed, " << s.at("failed") << " failed, " << s.at("warnings")
     << " warnings**\n\n";
  os << "| check | suite | residual | tol | result |\n|---|---|---|---|---|\n";
  for (const auto& e : j.at("checks"))
    os << "| " << e.at("name").get<std::string>() << " | " << e.at("suite").get<std::string>() << " | "
       << fmt(e.at("value")) << " | " << fmt(e.at("tol")) << " | " << (e.at("pass").get<bool>() ? "pass" : "FAIL")
       << " |\n";
  if (!j.at("skipped").empty()) {
    os << "\n";
    for (const auto& e : j.at("skipped"))
      os << "- " << e.at("suite").get<std::string>() << ": " << e.at("status").get<std::string>() << "\n";
  }
  if (!j.at("warnings").empty()) {
    os << "\n## warnings\n\n";
    for (const auto& w : j.at("warnings")) os << "- " << w.get<std::string>() << "\n";
  }
  return os.str();
}

void write_report(const Report& r, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  const json j = to_json(r);
  const bool md = path.size() >= 3 && path.compare(path.size() - 3, 3, ".md") == 0;
  f << (md ? render_markdown(j) : j.dump(2) + "\n");
}

std::string summary_line(const Report& r) {
  std::ostringstream os;
  os << r.config.model << ": " << r.passed() << " passed, " << r.failed() << " failed, " << r.warnings.size()
     << " warnings";
  for (const auto& c : r.checks)
    if (!c.r.pass) os << "\n  FAIL " << c.r.name << " = " << c.r.value << " (tol " << c.r.tol << ")";
  return os.str();
}

std::string list_models_table() {
  std::ostringstream os;
  os << std::left << std::setw(14) << "NAME" << std::setw(14) << "KIND" << std::setw(4) << "N" << std::setw(4) << "G"
     << std::setw(16) << "MULT" << "SOURCE\n";
  for (const auto& m : models::default_registry().list()) {
    std::string mult;
    for (int k : m->multiplicities) mult += (mult.empty() ? "" : ",") + std::to_string(k);
    os << std::left << std::setw(14) << m->name << std::setw(14) << models::kind_name(m->kind) << std::setw(4) << m->n
       << std::setw(4) << m->g << std::setw(16) << mult << m->source << "\n";
  }
  return os.str();
}

json export_alpha(const ExportRequest& req) {
  models::ModelPtr model;
  try {
    model = models::registry_get(req.model);
  } catch (const LookupError& e) {
    throw ConfigError(e.what());
  }
  json out = {{"schema", 1}, {"model", model->name}};
  if (!model->has_geometry()) {
    if (req.point) throw ConfigError("model '" + model->name + "' is tabulated; --point does not apply");
    const auto table = homog6::AlphaTable::from_model(*model);
    json comps = json::array();
    for (const auto& [t, v] : table.entries)
      comps.push_back({{"indices", homog6::AlphaTable::key(t, table.m)},
                       {"value", table.sources.at(t)},
                       {"numeric", v.to_double()}});
    out["kind"] = "table";
    out["frame"] = "e";
    out["m"] = table.m;
    out["components"] = comps;
    return out;
  }
  const int k = req.point.value_or(0);
  if (k < 0) throw ConfigError("--point must be >= 0");
  auto pts = models::sample_points(model, k + 1, req.seed);
  auto jet = models::jet(model, pts[k]);
  auto inv = quadric::invariants(jet, req.fd);
  const int n = inv.n();
  json comps = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        const double v = inv.alpha(a, b, c);
        if (std::abs(v) > 1e-9)
          comps.push_back({{"indices", {a + 1, b + 1, c + 1}},
                           {"labels", {inv.labels[a] + 1, inv.labels[b] + 1, inv.labels[c] + 1}},
                           {"value", v}});
      }
  json gh = json::array(), b0 = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array(), brow = json::array();
    for (int b = 0; b < n; ++b) {
      row.push_back(inv.ghat(a, b));
      brow.push_back({inv.B0(a, b).real(), inv.B0(a, b).imag()});
    }
    gh.push_back(row);
    b0.push_back(brow);
  }
  json labels = json::array();
  for (int l : inv.labels) labels.push_back(l + 1);
  out["kind"] = "point";
  out["frame"] = "e";
  out["point_index"] = k;
  out["seed"] = req.seed;
  out["point"] = std::vector<double>(pts[k].x.data(), pts[k].x.data() + pts[k].x.size());
  out["labels"] = labels;
  out["lambdas"] = inv.lambdas;
  out["ghat"] = gh;
  out["B0"] = b0;
  out["components"] = comps;
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace isogeo::app
