#include "isogeo/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "isogeo/errors.hpp"

namespace isogeo::models {

namespace {

constexpr Real kPi = 3.141592653589793238462643383279502884L;

const LevelSetData& level_data(const ModelSpec& spec) {
  if (!spec.level_set)
    throw InputError("model '" + spec.name + "' has no point geometry (kind " + kind_name(spec.kind) + ")");
  return *spec.level_set;
}

Real ipow(Real b, int e) {
  Real r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// h(y) = f(y) - c |y|^g vanishes on the cone over the surface
Real cone_value(const LevelSetData& ls, const VecL& y) {
  return ls.poly.value(y) - static_cast<Real>(ls.level) * ipow(y.norm(), ls.poly.degree());
}

VecL cone_gradient(const LevelSetData& ls, const VecL& y) {
  const int g = ls.poly.degree();
  const Real r = y.norm();
  return ls.poly.gradient(y) - static_cast<Real>(ls.level) * Real(g) * ipow(r, g - 2) * y;
}

Vec random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = nd(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

// Damped Newton onto {f = c} within the sphere.
VecL project_to_level(const LevelSetData& ls, VecL x, int& iterations, Real& residual) {
  x.normalize();
  auto res = [&](const VecL& p) { return ls.poly.value(p) - static_cast<Real>(ls.level); };
  Real r = res(x);
  iterations = 0;
  for (; iterations < 50 && std::abs(r) > 1e-15L; ++iterations) {
    VecL grad = ls.poly.gradient(x);
    VecL gs = grad - x.dot(grad) * x;
    const Real gn2 = gs.squaredNorm();
    if (gn2 < 1e-300L) break;
    Real step = 1;
    bool moved = false;
    for (int halving = 0; halving < 40; ++halving, step *= 0.5L) {
      VecL cand = (x - step * r * gs / gn2).normalized();
      const Real rc = res(cand);
      if (std::abs(rc) < std::abs(r)) {
        x = cand;
        r = rc;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  residual = std::abs(r);
  return x;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::explicit_param: return "explicit";
    case Kind::level_set: return "level-set";
    case Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

Vec SurfaceJet::e_scale() const {
  Vec s(n());
  for (int i = 0; i < n(); ++i) {
    const double l = lambda_of(i);
    s(i) = std::sqrt(2.0 / (1.0 + l * l));
  }
  return s;
}

void ModelSpec::validate() const {
  auto bad = [&](const std::string& why) { throw ModelConsistencyError("model '" + name + "': " + why); };
  if (name.empty()) bad("empty name");
  if (g != 1 && g != 2 && g != 3 && g != 6) bad("g must be one of 1, 2, 3, 6");
  if (static_cast<int>(multiplicities.size()) != g) bad("need one multiplicity per principal curvature");
  int total = 0;
  for (int m : multiplicities) {
    if (m <= 0) bad("multiplicities must be positive");
    total += m;
  }
  if (total != n) bad("multiplicities must sum to n");
  for (int i = 0; i < g; ++i)
    if (multiplicities[i] != multiplicities[(i + 2) % g]) bad("multiplicity rule m_i = m_{i+2} violated");
  if (kind == Kind::tabulated) {
    if (g != 6) bad("tabulated models must have g = 6");
    if (table_m != 1 && table_m != 2) bad("tabulated models must have m in {1, 2}");
    if (n != 6 * table_m) bad("tabulated model dimension must be 6m");
    for (const auto& e : alpha_entries)
      for (int idx : {e.i, e.j, e.k})
        if (idx < 1 || idx > n) bad("alpha index out of range");
    return;
  }
  if (!level_set) bad("missing defining polynomial");
  const auto& ls = *level_set;
  if (ls.poly.dim() != n + 2) bad("polynomial must live on R^{n+2}");
  if (!ls.poly.is_homogeneous()) bad("polynomial is not homogeneous");
  if (ls.poly.degree() != g) bad("polynomial degree must equal g");
  if (!(ls.level > -1.0 && ls.level < 1.0)) bad("level must lie in (-1, 1)");
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ud(0.3, 2.5);
  for (int trial = 0; trial < 4; ++trial) {
    Vec x = random_unit(rng, n + 2);
    const double s = ud(rng);
    const double fx = ls.poly.value(x), fsx = ls.poly.value(Vec(s * x));
    if (std::abs(fsx - std::pow(s, g) * fx) > 1e-10 * (1.0 + std::abs(fsx))) bad("homogeneity check failed");
  }
}

ModelPtr make_sphere(int n, double theta) {
  if (n < 1) throw InputError("g1-sphere: n must be positive");
  if (!(theta > 0.0 && theta < M_PI)) throw InputError("g1-sphere: radius angle must lie in (0, pi)");
  auto spec = std::make_shared<ModelSpec>();
  spec->name = "g1-sphere";
  spec->n = n;
  spec->g = 1;
  spec->multiplicities = {n};
  spec->kind = Kind::explicit_param;
  spec->phi = theta;
  spec->explicit_data = ExplicitData{ExplicitData::Family::sphere, n, 0, theta};
  std::vector<int> e(n + 2, 0);
  e[0] = 1;
  spec->level_set = LevelSetData{Polynomial(n + 2, {Monomial{1.0, e}}), std::cos(theta)};
  spec->source = "builtin";
  spec->validate();
  return spec;
}

ModelPtr make_product(int d1, int d2, double theta) {
  if (d1 < 1 || d2 < 1) throw InputError("g2-product: sphere dimensions must be positive");
  if (!(theta > 0.0 && theta < M_PI / 2)) throw InputError("g2-product: theta must lie in (0, pi/2)");
  auto spec = std::make_shared<ModelSpec>();
  spec->name = "g2-product";
  spec->n = d1 + d2;
  spec->g = 2;
  // lambda_1 = cot(theta) lives on the second factor's directions
  spec->multiplicities = {d2, d1};
  spec->kind = Kind::explicit_param;
  spec->phi = theta;
  spec->explicit_data = ExplicitData{ExplicitData::Family::product, d1, d2, theta};
  const int N = d1 + d2 + 2;
  std::vector<Monomial> terms;
  for (int i = 0; i < N; ++i) {
    std::vector<int> e(N, 0);
    e[i] = 2;
    terms.push_back({i <= d1 ? 1.0 : -1.0, e});
  }
  spec->level_set = LevelSetData{Polynomial(N, terms), std::cos(2 * theta)};
  spec->source = "builtin";
  spec->validate();
  return spec;
}

Real defining_residual(const ModelSpec& spec, const VecL& x) {
  const auto& ls = level_data(spec);
  return ls.poly.value(x) - static_cast<Real>(ls.level);
}

bool on_surface(const ModelSpec& spec, const Vec& x, double tol) {
  if (std::abs(x.norm() - 1.0) > tol) return false;
  return std::abs(static_cast<double>(defining_residual(spec, x.cast<Real>()))) < tol;
}

AmbientFrame ambient_at(const ModelSpec& spec, const VecL& x) {
  const auto& ls = level_data(spec);
  const int N = spec.ambient_dim();
  if (x.size() != N) throw InputError("ambient_at: point has wrong dimension");
  AmbientFrame out;
  out.x = x;
  VecL grad = ls.poly.gradient(x);
  const Real radial = x.dot(grad);
  VecL gs = grad - radial * x;
  out.grad_norm = gs.norm();
  if (out.grad_norm < 1e-8L)
    throw FocalPointError("model '" + spec.name + "': spherical gradient vanishes (|grad| = " +
                          std::to_string(static_cast<double>(out.grad_norm)) + ")");
  out.normal = gs / out.grad_norm;
  out.proj = MatL::Identity(N, N) - x * x.transpose() - out.normal * out.normal.transpose();
  MatL hess = ls.poly.hessian(x);
  out.shape = -(out.proj * hess * out.proj - radial * out.proj) / out.grad_norm;
  out.shape = Real(0.5) * (out.shape + out.shape.transpose());
  return out;
}

namespace {
Real solve_height(const LevelSetData& ls, const VecL& y0, const VecL& nu) {
  Real w = 0, last = 1;
  for (int it = 0; it < 60; ++it) {
    const VecL y = y0 + w * nu;
    const Real h = cone_value(ls, y);
    const Real dh = cone_gradient(ls, y).dot(nu);
    if (std::abs(dh) < 1e-12L) throw StencilError("graph chart: surface is tangent to the normal line");
    const Real dw = h / dh;
    w -= dw;
    last = std::abs(dw);
    if (std::abs(dw) <= 8 * std::numeric_limits<Real>::epsilon() * (1 + std::abs(w))) {
      if (std::abs(w) > 0.9L) break;
      return w;
    }
  }
  if (last < 1e-16L && std::abs(w) <= 0.9L) return w;
  throw StencilError("graph chart: height equation did not converge");
}
}  // namespace

VecL graph_point(const ModelSpec& spec, const VecL& base, const VecL& base_normal, const VecL& offset) {
  const auto& ls = level_data(spec);
  const VecL y0 = base + offset;
  const Real w = solve_height(ls, y0, base_normal);
  const VecL y = y0 + w * base_normal;
  return y / y.norm();
}

GraphEval graph_eval(const ModelSpec& spec, const VecL& base, const VecL& base_normal, const MatL& frame,
                     const VecL& u) {
  const auto& ls = level_data(spec);
  const VecL y0 = base + frame * u;
  const Real w = solve_height(ls, y0, base_normal);
  const VecL y = y0 + w * base_normal;
  const Real r = y.norm();
  GraphEval out;
  out.x = y / r;
  const VecL gh = cone_gradient(ls, y);
  const Real gn = gh.dot(base_normal);
  MatL dy = frame;
  for (int a = 0; a < frame.cols(); ++a) dy.col(a) -= (gh.dot(frame.col(a)) / gn) * base_normal;
  const MatL px = MatL::Identity(y.size(), y.size()) - out.x * out.x.transpose();
  out.tangents = px * dy / r;
  return out;
}

std::vector<SurfacePoint> sample_points(const ModelPtr& model, int count, std::uint64_t seed) {
  if (!model) throw InputError("sample_points: null model");
  if (!model->has_geometry())
    throw SamplingError("model '" + model->name + "' is tabulated and has no point geometry");
  if (count < 1) throw InputError("sample_points: count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<SurfacePoint> out;
  const int N = model->ambient_dim();
  for (int k = 0; k < count; ++k) {
    Vec x = Vec::Zero(N);
    if (model->explicit_data) {
      const auto& ex = *model->explicit_data;
      if (ex.family == ExplicitData::Family::sphere) {
        Vec u = random_unit(rng, N - 1);
        x(0) = std::cos(ex.theta);
        x.tail(N - 1) = std::sin(ex.theta) * u;
      } else {
        Vec u1 = random_unit(rng, ex.d1 + 1), u2 = random_unit(rng, ex.d2 + 1);
        x.head(ex.d1 + 1) = std::cos(ex.theta) * u1;
        x.tail(ex.d2 + 1) = std::sin(ex.theta) * u2;
      }
    } else {
      const auto& ls = level_data(*model);
      int iters = 0;
      Real res = 0;
      VecL p = project_to_level(ls, random_unit(rng, N).cast<Real>(), iters, res);
      if (res > 1e-12L) {
        std::ostringstream os;
        os << "model '" << model->name << "': Newton projection failed for sample " << k << " after " << iters
           << " iterations, residual " << static_cast<double>(res);
        throw SamplingError(os.str());
      }
      x = p.cast<double>();
    }
    x.normalize();
    out.push_back({x, model});
  }
  return out;
}

SurfaceJet jet(const ModelPtr& model, const SurfacePoint& p) {
  if (!model) throw InputError("jet: null model");
  const int N = model->ambient_dim(), n = model->n;
  const AmbientFrame amb = ambient_at(*model, p.x.cast<Real>());
  const Vec x = amb.x.cast<double>(), nu = amb.normal.cast<double>();
  const RealMat shape = amb.shape.cast<double>();

  RealMat xn(N, 2);
  xn.col(0) = x;
  xn.col(1) = nu;
  Eigen::HouseholderQR<RealMat> qr(xn);
  RealMat q = qr.householderQ() * RealMat::Identity(N, N);
  RealMat tangent = q.rightCols(n);

  RealMat at = tangent.transpose() * shape * tangent;
  at = 0.5 * (at + at.transpose());
  numkit::SpectralClusters cl = numkit::eig_sym(at, 1e-6);
  if (cl.count() != model->g || cl.multiplicities != model->multiplicities) {
    std::ostringstream os;
    os << "model '" << model->name << "': shape operator spectrum {";
    for (size_t i = 0; i < cl.eigenvalues.size(); ++i) os << (i ? ", " : "") << cl.eigenvalues[i];
    os << "} does not cluster into " << model->g << " groups with the model's multiplicities";
    throw ModelConsistencyError(os.str());
  }

  SurfaceJet out;
  out.point = SurfacePoint{x, model};
  out.normal = nu;
  out.frame_f = tangent * cl.basis;
  for (int c = 0; c < n; ++c) {
    Eigen::Index imax = 0;
    out.frame_f.col(c).cwiseAbs().maxCoeff(&imax);
    if (out.frame_f(imax, c) < 0) out.frame_f.col(c) *= -1.0;
  }
  for (int k = 0; k < cl.count(); ++k)
    for (int i = 0; i < cl.multiplicities[k]; ++i) out.labels.push_back(k);
  out.lambdas = cl.values;
  out.A0 = out.frame_f.transpose() * shape * out.frame_f;
  out.A0 = 0.5 * (out.A0 + out.A0.transpose());
  out.shape_ambient = shape;
  out.frame_e = out.frame_f * out.e_scale().asDiagonal();
  return out;
}

std::vector<Residual> model_self_test(const ModelPtr& model, const std::vector<SurfacePoint>& points,
                                      double tol) {
  if (points.size() < 2) throw InputError("model_self_test: need at least two points");
  std::map<std::string, std::string> ctx{{"model", model->name}, {"points", std::to_string(points.size())}};
  double spread = 0.0, angle_dev = 0.0;
  bool pattern_ok = true;
  std::string note;
  std::vector<double> first;
  for (size_t k = 0; k < points.size(); ++k) {
    try {
      SurfaceJet j = jet(model, points[k]);
      numkit::SpectralClusters cl = numkit::eig_sym(j.A0, 1e-6);
      if (first.empty()) {
        first = cl.eigenvalues;
      } else {
        for (size_t i = 0; i < first.size(); ++i) spread = std::max(spread, std::abs(first[i] - cl.eigenvalues[i]));
      }
      for (int a = 0; a < model->g; ++a) {
        const double theta = model->phi + a * M_PI / model->g;
        angle_dev = std::max(angle_dev, std::abs(j.lambdas[a] - std::cos(theta) / std::sin(theta)));
      }
    } catch (const ModelConsistencyError& e) {
      pattern_ok = false;
      spread = angle_dev = std::numeric_limits<double>::infinity();
      note = e.what();
    }
  }
  return {Residual::make("self.spectrum_constancy", spread, tol, ctx, note),
          Residual::make("self.angle_match", angle_dev, tol, ctx, note),
          Residual::make("self.multiplicity_pattern", pattern_ok ? 0.0 : 1.0, 0.5, ctx, note)};
}

}  // namespace isogeo::models
