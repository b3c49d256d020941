#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isogeo/errors.hpp"
#include "isogeo/exact.hpp"
#include "isogeo/models.hpp"

namespace isogeo::models {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double number_or_expression(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return exact::Surd::parse(v.get<std::string>()).to_double();
  throw InputError(what + " must be a number or a surd expression string");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open model file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A level-set file is only accepted if its principal curvatures come out right.
void check_geometry(const ModelPtr& m) {
  auto pts = sample_points(m, 4, 20240601);
  for (const auto& r : model_self_test(m, pts, 1e-6))
    if (!r.pass)
      throw ModelConsistencyError("model '" + m->name + "' failed its load-time self test (" + r.name +
                                  " = " + std::to_string(r.value) + ")" + (r.note.empty() ? "" : ": " + r.note));
}

}  // namespace

ModelPtr parse_model_json(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("model file '" + source + "': " + e.what());
  }
  auto spec = std::make_shared<ModelSpec>();
  try {
    spec->name = j.at("name").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit") {
      const std::string fam = j.at("family").get<std::string>();
      const double theta = number_or_expression(j.at("theta"), "theta");
      ModelPtr base;
      if (fam == "sphere") base = make_sphere(j.at("n").get<int>(), theta);
      else if (fam == "product") base = make_product(j.at("d1").get<int>(), j.at("d2").get<int>(), theta);
      else throw InputError("unknown explicit family '" + fam + "'");
      *spec = *base;
      spec->name = j.at("name").get<std::string>();
    } else {
      spec->n = j.at("n").get<int>();
      spec->g = j.at("g").get<int>();
      spec->multiplicities = j.at("multiplicities").get<std::vector<int>>();
      spec->phi = M_PI / (2.0 * spec->g);
      if (j.contains("phi")) spec->phi = number_or_expression(j.at("phi"), "phi");
      if (kind == "level-set") {
        spec->kind = Kind::level_set;
        std::vector<Monomial> terms;
        for (const auto& t : j.at("poly"))
          terms.push_back({number_or_expression(t.at("coeff"), "coeff"), t.at("exponents").get<std::vector<int>>()});
        spec->level_set = LevelSetData{Polynomial(spec->n + 2, terms), number_or_expression(j.at("level"), "level")};
      } else if (kind == "tabulated") {
        spec->kind = Kind::tabulated;
        spec->table_m = j.at("m").get<int>();
        for (const auto& e : j.at("alpha_components")) {
          AlphaEntry a{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                       e.at("value_expression").get<std::string>()};
          exact::Surd::parse(a.value_expression);  // reject malformed values early
          spec->alpha_entries.push_back(a);
        }
      } else {
        throw InputError("unknown model kind '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InputError("model file '" + source + "': " + e.what());
  }
  spec->source = source;
  spec->data_text = text;
  spec->validate();
  ModelPtr out = spec;
  if (out->kind == Kind::level_set) check_geometry(out);
  return out;
}

ModelPtr load_model_file(const std::string& path) { return parse_model_json(read_file(path), path); }

std::string default_data_dir() {
  if (const char* env = std::getenv("ISOGEO_DATA_DIR"); env && *env) return env;
  std::error_code ec;
  if (fs::is_directory(ISOGEO_SOURCE_DATA_DIR, ec)) return ISOGEO_SOURCE_DATA_DIR;
  return ISOGEO_INSTALL_DATA_DIR;
}

Registry Registry::builtin(const std::string& data_dir) {
  Registry r;
  r.add(make_sphere());
  r.add(make_product());
  for (const char* file : {"g3_cartan.json", "g6_hom_m1.json", "g6_hom_m2.json"})
    r.add(load_model_file((fs::path(data_dir) / file).string()));
  return r;
}

void Registry::add(ModelPtr model) {
  if (!model) throw InputError("Registry::add: null model");
  for (const auto& m : models_)
    if (m->name == model->name) throw InputError("duplicate model name '" + model->name + "'");
  models_.push_back(std::move(model));
}

void Registry::add_directory(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw LookupError("model directory '" + dir + "' does not exist");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) add(load_model_file(f));
}

ModelPtr Registry::get(const std::string& name) const {
  for (const auto& m : models_)
    if (m->name == name) return m;
  std::string avail;
  for (const auto& n : names()) avail += (avail.empty() ? "" : ", ") + n;
  throw LookupError("unknown model '" + name + "'; available: " + avail);
}

std::vector<ModelPtr> Registry::list() const {
  auto out = models_;
  std::sort(out.begin(), out.end(), [](const ModelPtr& a, const ModelPtr& b) { return a->name < b->name; });
  return out;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& m : list()) out.push_back(m->name);
  return out;
}

Registry default_registry() {
  static const Registry base = Registry::builtin();
  Registry r = base;
  if (const char* env = std::getenv("ISOGEO_MODEL_DIR"); env && *env) r.add_directory(env);
  return r;
}

ModelPtr registry_get(const std::string& name) { return default_registry().get(name); }

}  // namespace isogeo::models
