#include "isogeo/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isogeo/errors.hpp"

namespace isogeo::family {

using models::Real;
using models::VecL;

AngleData AngleData::with_phi(int g, double phi, std::vector<int> multiplicities) {
  AngleData a;
  a.g = g;
  a.phi = phi;
  if (multiplicities.empty()) multiplicities.assign(g, 1);
  a.multiplicities = std::move(multiplicities);
  for (int j = 0; j < g; ++j) {
    const double th = phi + j * M_PI / g;
    a.thetas.push_back(th);
    a.lambdas.push_back(std::cos(th) / std::sin(th));
  }
  a.validate();
  return a;
}

AngleData AngleData::standard(int g, std::vector<int> multiplicities) {
  return with_phi(g, M_PI / (2.0 * g), std::move(multiplicities));
}

AngleData AngleData::for_model(const models::ModelSpec& spec) {
  return with_phi(spec.g, spec.phi, spec.multiplicities);
}

void AngleData::validate() const {
  if (g < 1) throw InputError("AngleData: g must be positive");
  if (static_cast<int>(multiplicities.size()) != g) throw InputError("AngleData: need g multiplicities");
  for (int j = 0; j < g; ++j) {
    if (!(thetas[j] > 0.0 && thetas[j] < M_PI)) throw InputError("AngleData: angles must lie in (0, pi)");
    if (j > 0 && !(thetas[j] > thetas[j - 1])) throw InputError("AngleData: angles must increase");
  }
}

RealMat shape_at_t(const RealMat& A0, double t, double guard) {
  if (!numkit::is_symmetric(A0, 1e-9)) throw InputError("shape_at_t: A0 must be symmetric");
  Eigen::SelfAdjointEigenSolver<RealMat> es(0.5 * (A0 + A0.transpose()));
  const double s = std::sin(t), c = std::cos(t);
  Vec mapped(A0.rows());
  for (int i = 0; i < A0.rows(); ++i) {
    const double l = es.eigenvalues()(i);
    if (std::abs(s) > 1e-15 && std::abs(c / s - l) <= guard) {
      std::ostringstream os;
      os << "focal time t=" << t << " hits theta=" << std::atan2(1.0, l) << " (cot t within " << guard
         << " of principal curvature " << l << ")";
      throw FocalTimeError(os.str());
    }
    mapped(i) = (s + c * l) / (c - s * l);
  }
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

ParallelState parallel(const models::SurfaceJet& jet, double t) {
  ParallelState st;
  st.t = t;
  const Vec& x = jet.point.x;
  st.Ft = std::cos(t) * x + std::sin(t) * jet.normal;
  st.nut = -std::sin(t) * x + std::cos(t) * jet.normal;
  const int n = jet.n();
  RealMat m = std::cos(t) * RealMat::Identity(n, n) - std::sin(t) * jet.A0;
  Eigen::JacobiSVD<RealMat> svd(m);
  st.singular_values = svd.singularValues();
  st.rank = 0;
  for (int i = 0; i < st.singular_values.size(); ++i)
    if (st.singular_values(i) > 1e-8) ++st.rank;
  try {
    st.At = shape_at_t(jet.A0, t);
  } catch (const FocalTimeError&) {
    st.At.reset();
  }
  return st;
}

std::vector<double> focal_spectrum(int g, int j) {
  if (g < 1 || j < 1 || j > g) throw InputError("focal_spectrum: need 1 <= j <= g");
  std::vector<double> out;
  for (int i = 1; i <= g; ++i) {
    if (i == j) continue;
    const double a = (i - j) * M_PI / g;
    out.push_back(std::cos(a) / std::sin(a));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<exact::Surd> focal_spectrum_exact(int g, int j) {
  if (g != 1 && g != 2 && g != 3 && g != 6) throw InputError("focal_spectrum_exact: g must be 1, 2, 3 or 6");
  if (j < 1 || j > g) throw InputError("focal_spectrum_exact: need 1 <= j <= g");
  std::vector<exact::Surd> out;
  for (int i = 1; i <= g; ++i)
    if (i != j) out.push_back(exact::cot_pi12((i - j) * 12 / g));
  std::sort(out.begin(), out.end(),
            [](const exact::Surd& a, const exact::Surd& b) { return a.to_long_double() > b.to_long_double(); });
  return out;
}

std::vector<double> t_grid(const AngleData& angles, int count, double guard) {
  if (count < 1) throw InputError("t_grid: count must be positive");
  auto focal = [&](double t) {
    for (double l : angles.lambdas)
      if (std::abs(std::cos(t) / std::sin(t) - l) <= guard) return true;
    return false;
  };
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    double t = (k + 0.5) * M_PI / count;
    if (focal(t)) t += 0.25 * M_PI / count;  // nudge off the focal time, keep the count
    if (!focal(t)) out.push_back(t);
  }
  return out;
}

Vec tau_point(const models::ModelSpec& spec, const Vec& x, int j) {
  const AngleData ang = AngleData::for_model(spec);
  if (j < 1 || j > spec.g) throw InputError("tau_point: index out of range");
  const double th = ang.thetas[j - 1];
  const auto amb = models::ambient_at(spec, x.cast<Real>());
  Vec img = std::cos(2 * th) * x + std::sin(2 * th) * amb.normal.cast<double>();
  return img.normalized();
}

Reflection reflection_tau(const models::SurfaceJet& jet, int j) {
  const auto& spec = jet.model();
  if (!spec.has_geometry()) throw InputError("reflection_tau: model has no point geometry");
  if (j < 1 || j > spec.g) throw InputError("reflection_tau: index out of range");
  const AngleData ang = AngleData::for_model(spec);
  Reflection r;
  r.j = j;
  r.theta = ang.thetas[j - 1];
  const double c2 = std::cos(2 * r.theta), s2 = std::sin(2 * r.theta);
  const Vec& x = jet.point.x;
  Vec img = (c2 * x + s2 * jet.normal).normalized();
  r.membership_residual = std::abs(static_cast<double>(models::defining_residual(spec, img.cast<Real>())));
  if (r.membership_residual > 1e-8) {
    std::ostringstream os;
    os << "reflection tau_" << j << " left the surface (defining residual " << r.membership_residual << ")";
    throw ModelConsistencyError(os.str());
  }
  r.image = models::SurfacePoint{img, jet.point.model};
  const auto amb = models::ambient_at(spec, img.cast<Real>());
  r.image_normal = amb.normal.cast<double>();
  r.expected_normal = s2 * x - c2 * jet.normal;
  r.normal_sign = r.image_normal.dot(r.expected_normal) >= 0 ? 1 : -1;
  r.normal_residual = (r.image_normal - r.normal_sign * r.expected_normal).cwiseAbs().maxCoeff();

  const int N = spec.ambient_dim();
  const RealMat P_img = amb.proj.cast<double>();
  const RealMat S_img = amb.shape.cast<double>();
  const RealMat& S = jet.shape_ambient;
  const RealMat I = RealMat::Identity(N, N);
  r.differential = P_img * (c2 * I - s2 * S) * jet.frame_f;

  const int n = jet.n();
  RealMat ghat_p = 0.5 * (RealMat::Identity(n, n) + jet.A0 * jet.A0);
  RealMat ghat_img = 0.5 * r.differential.transpose() * (P_img + S_img * S_img) * r.differential;
  r.isometry_residual = (ghat_img - ghat_p).cwiseAbs().maxCoeff();
  RealMat lhs = S_img * r.differential;
  RealMat rhs = -r.normal_sign * P_img * (s2 * I + c2 * S) * jet.frame_f;
  r.intertwining_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return r;
}

double involution_residual(const models::SurfaceJet& jet, int j) {
  const auto& spec = jet.model();
  Vec once = tau_point(spec, jet.point.x, j);
  Vec twice = tau_point(spec, once, j);
  return (twice - jet.point.x).cwiseAbs().maxCoeff();
}

int rotation_order(const models::SurfaceJet& jet, int max_order, double tol) {
  const auto& spec = jet.model();
  if (spec.g < 2) return 1;
  Vec p = jet.point.x;
  for (int k = 1; k <= max_order; ++k) {
    p = tau_point(spec, tau_point(spec, p, 2), 1);
    if ((p - jet.point.x).cwiseAbs().maxCoeff() < tol) return k;
  }
  return 0;
}

}  // namespace isogeo::family
