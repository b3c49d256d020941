#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isogeo/numkit.hpp"
#include "isogeo/polynomial.hpp"
#include "isogeo/residual.hpp"

namespace isogeo::models {

using numkit::MatL;
using numkit::Real;
using numkit::RealMat;
using numkit::Vec;
using numkit::VecL;

enum class Kind { explicit_param, level_set, tabulated };
std::string kind_name(Kind k);

struct LevelSetData {
  Polynomial poly;
  double level = 0.0;
};

struct ExplicitData {
  enum class Family { sphere, product };
  Family family = Family::sphere;
  int d1 = 0, d2 = 0;
  double theta = 0.0;
};

// Tabulated alpha entry in the e-frame; indices are 1-based, bar index i -> i + 6.
struct AlphaEntry {
  int i = 0, j = 0, k = 0;
  std::string value_expression;
};

struct ModelSpec {
  std::string name;
  int n = 0;
  int g = 0;
  std::vector<int> multiplicities;
  Kind kind = Kind::level_set;
  double phi = 0.0;  // first angle theta_1; pi/(2g) unless a radius is chosen

  // Present for explicit and level-set models (explicit models carry their
  // defining polynomial as well).
  std::optional<LevelSetData> level_set;
  std::optional<ExplicitData> explicit_data;
  int table_m = 0;
  std::vector<AlphaEntry> alpha_entries;

  std::string source;     // "builtin" or a file path
  std::string data_text;  // raw file contents, empty for purely built-in models

  int ambient_dim() const { return n + 2; }
  bool has_geometry() const { return kind != Kind::tabulated; }
  void validate() const;
};

using ModelPtr = std::shared_ptr<const ModelSpec>;

ModelPtr make_sphere(int n = 2, double theta = 1.5707963267948966);
ModelPtr make_product(int d1 = 1, int d2 = 1, double theta = 0.78539816339744831);
ModelPtr parse_model_json(const std::string& text, const std::string& source);
ModelPtr load_model_file(const std::string& path);

std::string default_data_dir();

class Registry {
 public:
  // g1-sphere, g2-product, g3-cartan, g6-hom-m1, g6-hom-m2
  static Registry builtin(const std::string& data_dir = default_data_dir());
  void add(ModelPtr model);
  void add_directory(const std::string& dir);
  ModelPtr get(const std::string& name) const;
  std::vector<ModelPtr> list() const;  // sorted by name
  std::vector<std::string> names() const;

 private:
  std::vector<ModelPtr> models_;
};

// Built-ins plus the files found in $ISOGEO_MODEL_DIR.
Registry default_registry();
ModelPtr registry_get(const std::string& name);

struct SurfacePoint {
  Vec x;
  ModelPtr model;
};

struct SurfaceJet {
  SurfacePoint point;
  Vec normal;
  RealMat frame_f;  // (n+2) x n, columns grouped by distribution
  RealMat frame_e;
  std::vector<int> labels;     // 0-based distribution index per column
  RealMat A0;                  // n x n in frame_f
  std::vector<double> lambdas; // measured, descending
  RealMat shape_ambient;       // (n+2) x (n+2), zero on span{x, normal}

  int n() const { return static_cast<int>(frame_f.cols()); }
  const ModelSpec& model() const { return *point.model; }
  double lambda_of(int column) const { return lambdas[labels[column]]; }
  // sqrt(2 / (1 + lambda^2)) per column
  Vec e_scale() const;
};

std::vector<SurfacePoint> sample_points(const ModelPtr& model, int count, std::uint64_t seed);
SurfaceJet jet(const ModelPtr& model, const SurfacePoint& p);
std::vector<Residual> model_self_test(const ModelPtr& model, const std::vector<SurfacePoint>& points,
                                      double tol);

// Ambient geometry of the level set through x, in extended precision.
struct AmbientFrame {
  VecL x;
  VecL normal;
  MatL proj;   // orthogonal projector onto the tangent space
  MatL shape;  // shape operator extended by zero to R^{n+2}
  Real grad_norm = 0;
};

AmbientFrame ambient_at(const ModelSpec& spec, const VecL& x);
Real defining_residual(const ModelSpec& spec, const VecL& x);
bool on_surface(const ModelSpec& spec, const Vec& x, double tol = 1e-8);

// Graph chart over the tangent space at base: the point normalize(base + v + w normal)
// with w chosen so that it lies on the surface. Tangents are d/du of the point for
// v = frame * u.
struct GraphEval {
  VecL x;
  MatL tangents;
};
VecL graph_point(const ModelSpec& spec, const VecL& base, const VecL& base_normal, const VecL& offset);
GraphEval graph_eval(const ModelSpec& spec, const VecL& base, const VecL& base_normal, const MatL& frame,
                     const VecL& u);

}  // namespace isogeo::models
