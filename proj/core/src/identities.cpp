#include "isogeo/identities.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "isogeo/errors.hpp"
#include "local_chart.hpp"

namespace isogeo::identities {

using cd = std::complex<double>;
using detail::LocalChart;
using numkit::CMatL;
using numkit::CplxL;
using numkit::MatL;
using numkit::Real;
using numkit::RealMat;
using numkit::Tensor3;
using numkit::VecL;

namespace {

std::map<std::string, std::string> point_ctx(const models::SurfaceJet& jet) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < jet.point.x.size(); ++i) os << (i ? "," : "") << jet.point.x(i);
  return {{"model", jet.model().name}, {"point", os.str()}};
}

std::vector<int> columns_of(const InvariantSet& inv, int dist) {
  std::vector<int> out;
  for (int a = 0; a < inv.n(); ++a)
    if (inv.labels[a] == dist) out.push_back(a);
  return out;
}

void require_in(const InvariantSet& inv, int dist, const Vec& v, const char* what) {
  if (v.size() != inv.n()) throw InputError(std::string(what) + ": dimension mismatch");
  double off = 0;
  for (int a = 0; a < inv.n(); ++a)
    if (inv.labels[a] != dist) off = std::max(off, std::abs(v(a)));
  if (off > 1e-9 * (1.0 + v.norm()))
    throw InputError(std::string(what) + ": vector is not in distribution D_" + std::to_string(dist + 1));
}

void check_pair(const InvariantSet& inv, int i, int j, const char* what) {
  if (i < 1 || j < 1 || i > inv.angles.g || j > inv.angles.g)
    throw InputError(std::string(what) + ": distribution index out of range");
  if (i == j) throw InputError(std::string(what) + ": indices must be distinct");
}

// Right-hand side of the polarized identity, f-frame coordinates.
double weyl_rhs(const Tensor3& af, const InvariantSet& inv, int i, int j, const Vec& vi, const Vec& vti,
                const Vec& vj, const Vec& vtj) {
  const double li = inv.angles.lambdas[i], lj = inv.angles.lambdas[j];
  double acc = 0;
  for (int k = 0; k < inv.n(); ++k) {
    if (inv.labels[k] == i || inv.labels[k] == j) continue;  // trace over the complement of D_i + D_j
    Vec fk = Vec::Unit(inv.n(), k);
    const double lk = inv.lambdas[k];
    acc += (af.eval(vi, vj, fk) * af.eval(vti, vtj, fk) + af.eval(vti, vj, fk) * af.eval(vi, vtj, fk)) /
           ((li - lk) * (lj - lk));
  }
  return acc;
}

struct ChartGeometry {
  int n = 0;
  MatL Ghat;
  std::vector<Real> gam;  // ghat Christoffels
  MatL A;
  CMatL B;
  std::vector<Real> alpha;  // f-frame at the point
  Vec sigma;
};

ChartGeometry chart_geometry(const LocalChart& chart, const models::SurfaceJet& jet, const ChartOptions& opt,
                             bool with_alpha) {
  ChartGeometry cg;
  cg.n = chart.dim();
  LocalChart::MetricJet mj = chart.metric_jet(true, opt.outer.base_step);
  cg.Ghat = mj.G;
  cg.gam = LocalChart::christoffel(mj);
  const VecL zero = VecL::Zero(cg.n);
  cg.A = chart.shape_coords(zero);
  cg.B = chart.b_coords(zero);
  if (with_alpha) cg.alpha = chart.alpha_coords(zero, opt.inner);
  cg.sigma = jet.e_scale();
  return cg;
}

LocalChart make_chart(const models::SurfaceJet& jet) {
  if (!jet.model().has_geometry()) throw InputError("chart checks need a model with point geometry");
  return LocalChart(jet.model(), detail::to_long(jet.point.x), detail::to_long(jet.normal),
                    detail::to_long(jet.frame_f));
}

Real kn(const MatL& h1, const MatL& h2, int a, int b, int c, int d) {
  return Real(0.5) * (h1(a, d) * h2(b, c) + h2(a, d) * h1(b, c) - h1(a, c) * h2(b, d) - h2(a, c) * h1(b, d));
}
CplxL kn(const CMatL& h1, const CMatL& h2, int a, int b, int c, int d) {
  return Real(0.5) * (h1(a, d) * h2(b, c) + h2(a, d) * h1(b, c) - h1(a, c) * h2(b, d) - h2(a, c) * h1(b, d));
}

Tensor3 alpha_at(const models::ModelSpec& spec, const Vec& x, const RealMat& frame, const StepPolicy& policy) {
  models::AmbientFrame q = models::ambient_at(spec, detail::to_long(x));
  std::vector<Real> c = detail::alpha_components(spec, q, detail::to_long(frame), detail::FieldRoute::lift, policy);
  Tensor3 t(static_cast<int>(frame.cols()));
  for (size_t i = 0; i < c.size(); ++i) t.data[i] = static_cast<double>(c[i]);
  return t;
}

RealMat random_block_rotation(const std::vector<int>& labels, std::mt19937_64& rng) {
  const int n = static_cast<int>(labels.size());
  RealMat Q = RealMat::Zero(n, n);
  std::normal_distribution<double> nd;
  int start = 0;
  while (start < n) {
    int end = start;
    while (end < n && labels[end] == labels[start]) ++end;
    const int m = end - start;
    RealMat r(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) r(i, j) = nd(rng);
    Eigen::HouseholderQR<RealMat> qr(r);
    RealMat q = qr.householderQ();
    Q.block(start, start, m, m) = q;
    start = end;
  }
  return Q;
}

}  // namespace

Residual cartan_identity(const family::AngleData& angles, double tol) {
  Real worst = 0;
  for (int i = 0; i < angles.g; ++i) {
    Real sum = 0;
    const Real li = 1 / std::tan(static_cast<Real>(angles.thetas[i]));
    for (int j = 0; j < angles.g; ++j) {
      if (j == i) continue;
      const Real lj = 1 / std::tan(static_cast<Real>(angles.thetas[j]));
      sum += angles.multiplicities[j] * (1 + li * lj) / (li - lj);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return Residual::make("cartan.identity", static_cast<double>(worst), tol, {{"g", std::to_string(angles.g)}});
}

Residual polarized_weyl(const InvariantSet& inv, int i, int j, const Vec& vi, const Vec& vti, const Vec& vj,
                        const Vec& vtj, double tol) {
  check_pair(inv, i, j, "polarized_weyl");
  --i;
  --j;
  require_in(inv, i, vi, "polarized_weyl");
  require_in(inv, i, vti, "polarized_weyl");
  require_in(inv, j, vj, "polarized_weyl");
  require_in(inv, j, vtj, "polarized_weyl");
  const double li = inv.angles.lambdas[i], lj = inv.angles.lambdas[j];
  const double lhs = (1 + li * lj) * vi.dot(vti) * vj.dot(vtj);
  const double rhs = weyl_rhs(inv.alpha_f(), inv, i, j, vi, vti, vj, vtj);
  return Residual::make("weyl.polarized", std::abs(lhs - rhs), tol,
                        {{"i", std::to_string(i + 1)}, {"j", std::to_string(j + 1)}});
}

Residual classical_weyl(const InvariantSet& inv, int i, int j, const Vec& vi, const Vec& vj, double tol) {
  Residual r = polarized_weyl(inv, i, j, vi, vi, vj, vj, tol);
  r.name = "weyl.classical";
  return r;
}

Residual classical_weyl(const models::SurfaceJet& jet, int i, int j, const Vec& vi, const Vec& vj, double tol) {
  InvariantSet inv = quadric::invariants(jet);
  Vec ci = jet.frame_f.transpose() * vi, cj = jet.frame_f.transpose() * vj;
  if ((jet.frame_f * ci - vi).norm() > 1e-9 * (1 + vi.norm()) || (jet.frame_f * cj - vj).norm() > 1e-9 * (1 + vj.norm()))
    throw InputError("classical_weyl: vectors must be tangent");
  Residual r = classical_weyl(inv, i, j, ci, cj, tol);
  for (auto& kv : point_ctx(jet)) r.context[kv.first] = kv.second;
  return r;
}

Residual classical_weyl_all(const InvariantSet& inv, double tol) {
  const int g = inv.angles.g;
  const Tensor3 af = inv.alpha_f();
  double worst = 0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      const double li = inv.angles.lambdas[i], lj = inv.angles.lambdas[j];
      for (int a : columns_of(inv, i))
        for (int b : columns_of(inv, j)) {
          Vec vi = Vec::Unit(inv.n(), a), vj = Vec::Unit(inv.n(), b);
          const double lhs = 1 + li * lj;
          worst = std::max(worst, std::abs(lhs - weyl_rhs(af, inv, i, j, vi, vi, vj, vj)));
        }
    }
  return Residual::make("weyl.classical", worst, tol, {{"g", std::to_string(g)}});
}

Residual invariant_weyl(const InvariantSet& inv, double tol) {
  const int n = inv.n();
  const int g = inv.angles.g;
  double offdiag = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag = std::max(offdiag, std::abs(inv.B0(a, b)));
  const double ortho = (inv.ghat - RealMat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (offdiag > 1e-8 || ortho > 1e-8)
    throw InputError("invariant_weyl: frame must be ghat-orthonormal and adapted to B0");
  // mu^k for k in [-2g, 2g]
  std::vector<std::vector<cd>> pw(n, std::vector<cd>(4 * g + 1));
  for (int a = 0; a < n; ++a)
    for (int k = -2 * g; k <= 2 * g; ++k) pw[a][k + 2 * g] = std::pow(inv.mu[a], k);
  auto P = [&](int a, int k) { return pw[a][k + 2 * g]; };
  const Tensor3& A = inv.alpha;
  // alpha(B^-L p, B^-J q, e_c) * sum_k alpha(B^L r, B^(k+1) s, B^(J-k-1) e_c) + alpha(B^L r, B^k s, B^(J-k) e_c)
  auto term = [&](int p, int q, int r, int s, int L, int J, int c) -> cd {
    const double a1 = A(p, q, c);
    if (a1 == 0.0) return 0.0;
    const double a2 = A(r, s, c);
    if (a2 == 0.0) return 0.0;
    cd acc = 0;
    for (int k = 0; k < J; ++k) acc += P(r, L) * (P(s, k + 1) * P(c, J - k - 1) + P(s, k) * P(c, J - k));
    return P(p, -L) * P(q, -J) * a1 * a2 * acc;
  };
  double worst = 0, worst_flipped = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          cd rhs = 0;
          for (int l = 0; l < g; ++l)
            for (int j = 0; j < g; ++j)
              for (int c = 0; c < n; ++c)
                rhs += term(y, w, x, z, l, j, c) + term(y, z, x, w, l, j, c) - term(w, y, z, x, j, l, c) -
                       term(w, x, z, y, j, l, c);
          const double T = (inv.b(x, y) * inv.bbar(z, w)).imag();
          const cd lhs = cd(0, -4.0 * g * g) * T;
          worst = std::max(worst, std::abs(lhs - rhs));
          worst_flipped = std::max(worst_flipped, std::abs(lhs + rhs));
        }
  std::string note;
  if (!(worst < tol) && worst_flipped < tol)
    note = "identity holds only with the opposite overall sign (residual " + std::to_string(worst_flipped) + ")";
  return Residual::make("weyl.invariant", worst, tol, {{"g", std::to_string(g)}}, note);
}

Residual weyl_implies_cartan(const std::vector<Residual>& weyl, const Residual& cartan) {
  bool all_pass = !weyl.empty();
  for (const auto& r : weyl) all_pass = all_pass && r.pass;
  const bool violated = all_pass && !cartan.pass;
  return Residual::make("cartan.implied_by_weyl", violated ? 1.0 : 0.0, 0.5,
                        {{"weyl_pass", all_pass ? "true" : "false"}, {"cartan_pass", cartan.pass ? "true" : "false"}});
}

Residual codazzi_check(const models::SurfaceJet& jet, double tol, const ChartOptions& opt) {
  LocalChart chart = make_chart(jet);
  ChartGeometry cg = chart_geometry(chart, jet, opt, true);
  const int n = cg.n;
  const size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Real> dal = chart.alpha_derivative(opt.outer, opt.inner);
  auto al = [&](int a, int b, int c) { return cg.alpha[(static_cast<size_t>(a) * n + b) * n + c]; };
  auto gam = [&](int k, int i, int j) { return cg.gam[(static_cast<size_t>(k) * n + i) * n + j]; };
  auto nabla = [&](int a, int b, int c, int d) {
    Real v = dal[a * n3 + (static_cast<size_t>(b) * n + c) * n + d];
    for (int e = 0; e < n; ++e) v -= gam(e, a, b) * al(e, c, d) + gam(e, a, c) * al(b, e, d) + gam(e, a, d) * al(b, c, e);
    return v;
  };
  const CMatL Gc = cg.Ghat.cast<CplxL>();
  const CMatL b = cg.B.transpose() * Gc;
  const CMatL bb = cg.B.conjugate().transpose() * Gc;
  auto T = [&](int x, int y, int z, int w) { return (b(x, y) * bb(z, w)).imag(); };
  Real worst = 0;
  for (int a = 0; a < n; ++a)
    for (int bi = 0; bi < n; ++bi)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Real lhs = nabla(a, bi, c, d) - nabla(bi, a, c, d);
          Real rhs = 2 * (T(a, c, bi, d) + T(a, d, bi, c));
          Real s = cg.sigma(a) * cg.sigma(bi) * cg.sigma(c) * cg.sigma(d);
          worst = std::max(worst, std::abs(lhs - rhs) * s);
        }
  return Residual::make("codazzi", static_cast<double>(worst), tol, point_ctx(jet));
}

Residual gauss_check(const models::SurfaceJet& jet, double tol, const ChartOptions& opt) {
  LocalChart chart = make_chart(jet);
  ChartGeometry cg = chart_geometry(chart, jet, opt, true);
  const int n = cg.n;
  LocalChart::MetricJet mj = chart.metric_jet(true, opt.outer.base_step);
  std::vector<Real> R = LocalChart::riemann(mj);
  const CMatL Gc = cg.Ghat.cast<CplxL>();
  const CMatL b = cg.B.transpose() * Gc;
  const CMatL bb = cg.B.conjugate().transpose() * Gc;
  const MatL Ginv = cg.Ghat.inverse();
  auto al = [&](int a, int b2, int c) { return cg.alpha[(static_cast<size_t>(a) * n + b2) * n + c]; };
  auto tr = [&](int a1, int a2, int b1, int b2) {
    Real s = 0;
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) s += Ginv(c, d) * al(a1, a2, c) * al(b1, b2, d);
    return s;
  };
  Real worst = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Real rhs = kn(cg.Ghat, cg.Ghat, x, y, z, w) + kn(b, bb, x, y, z, w).real() +
                     Real(0.25) * (tr(x, w, y, z) - tr(x, z, y, w));
          Real lhs = R[((static_cast<size_t>(x) * n + y) * n + z) * n + w];
          Real s = cg.sigma(x) * cg.sigma(y) * cg.sigma(z) * cg.sigma(w);
          worst = std::max(worst, std::abs(lhs - rhs) * s);
        }
  return Residual::make("gauss", static_cast<double>(worst), tol, point_ctx(jet));
}

Residual nabla_b_check(const models::SurfaceJet& jet, double tol, const ChartOptions& opt) {
  LocalChart chart = make_chart(jet);
  ChartGeometry cg = chart_geometry(chart, jet, opt, true);
  const int n = cg.n;
  std::vector<CMatL> dB = chart.b_derivative(opt.outer);
  auto gam = [&](int k, int i, int j) { return cg.gam[(static_cast<size_t>(k) * n + i) * n + j]; };
  auto al = [&](int a, int b, int c) { return cg.alpha[(static_cast<size_t>(a) * n + b) * n + c]; };
  const CplxL I(0, 1);
  Real worst = 0;
  for (int a = 0; a < n; ++a) {
    CMatL nB = dB[a];
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) nB(b, c) += gam(b, a, d) * cg.B(d, c) - cg.B(b, d) * gam(d, a, c);
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e) {
        CplxL lhs = 0, rhs = 0;
        for (int b = 0; b < n; ++b) lhs += cg.Ghat(e, b) * nB(b, c);
        for (int d = 0; d < n; ++d) rhs += cg.B(d, c) * al(a, d, e) + cg.B(d, e) * al(a, c, d);
        rhs *= -I / Real(2);
        worst = std::max(worst, std::abs(lhs - rhs) * cg.sigma(a) * cg.sigma(c) * cg.sigma(e));
      }
  }
  return Residual::make("nabla_b", static_cast<double>(worst), tol, point_ctx(jet));
}

Residual sphere_gauss_check(const models::SurfaceJet& jet, double tol, const ChartOptions& opt) {
  LocalChart chart = make_chart(jet);
  const int n = chart.dim();
  LocalChart::MetricJet mj = chart.metric_jet(false, opt.outer.base_step);
  std::vector<Real> R = LocalChart::riemann(mj);
  const MatL& G = mj.G;
  MatL h = G * chart.shape_coords(VecL::Zero(n));
  Real worst = 0;
  for (int vj = 0; vj < n; ++vj)
    for (int vi = 0; vi < n; ++vi) {
      if (jet.labels[vi] == jet.labels[vj]) continue;
      for (int wi = 0; wi < n; ++wi) {
        if (jet.labels[wi] != jet.labels[vi]) continue;
        for (int wj = 0; wj < n; ++wj) {
          if (jet.labels[wj] != jet.labels[vj]) continue;
          Real lhs = R[((static_cast<size_t>(vj) * n + vi) * n + wi) * n + wj];
          Real rhs = kn(G, G, vj, vi, wi, wj) + kn(h, h, vj, vi, wi, wj);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
  return Residual::make("gauss.sphere", static_cast<double>(worst), tol, point_ctx(jet));
}

Residual connection_relation_check(const models::SurfaceJet& jet, double tol, const ChartOptions& opt) {
  LocalChart chart = make_chart(jet);
  const int n = chart.dim();
  LocalChart::MetricJet mh = chart.metric_jet(true, opt.outer.base_step);
  LocalChart::MetricJet m0 = chart.metric_jet(false, opt.outer.base_step);
  std::vector<Real> gh = LocalChart::christoffel(mh), g0 = LocalChart::christoffel(m0);
  const VecL zero = VecL::Zero(n);
  MatL A = chart.shape_coords(zero);
  MatL M = A * (MatL::Identity(n, n) + A * A).inverse();
  MatL G0inv = m0.G.inverse();
  std::vector<Real> al = chart.alpha_coords(zero, opt.inner);
  Real worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      VecL v(n);  // (nabla^0_a A) d_b
      for (int m = 0; m < n; ++m) {
        Real s = 0;
        for (int c = 0; c < n; ++c) s += G0inv(m, c) * al[(static_cast<size_t>(a) * n + b) * n + c];
        v(m) = s;
      }
      VecL rhs = M * v;
      for (int k = 0; k < n; ++k) {
        const size_t idx = (static_cast<size_t>(k) * n + a) * n + b;
        worst = std::max(worst, std::abs(gh[idx] - g0[idx] - rhs(k)));
      }
    }
  return Residual::make("connection.relation", static_cast<double>(worst), tol, point_ctx(jet));
}

Residual symmetry_check(const models::SurfaceJet& jet, int j, double tol, const StepPolicy& policy) {
  family::Reflection r = family::reflection_tau(jet, j);
  const Vec sig = jet.e_scale();
  Tensor3 ap = alpha_at(jet.model(), jet.point.x, jet.frame_e, policy);
  Tensor3 ai = alpha_at(jet.model(), r.image.x, r.differential * sig.asDiagonal(), policy);
  double worst = 0;
  for (size_t i = 0; i < ap.data.size(); ++i) worst = std::max(worst, std::abs(ap.data[i] + r.normal_sign * ai.data[i]));
  auto ctx = point_ctx(jet);
  ctx["j"] = std::to_string(j);
  ctx["normal_sign"] = std::to_string(r.normal_sign);
  return Residual::make("symmetry.tau", worst, tol, ctx);
}

Residual composition_symmetry_check(const models::SurfaceJet& jet, int j1, int j2, double tol,
                                    const StepPolicy& policy) {
  const auto& spec = jet.model();
  family::Reflection r2 = family::reflection_tau(jet, j2);
  // differential of tau_j1 at the intermediate point
  const family::AngleData ang = family::AngleData::for_model(spec);
  const double th = ang.thetas[j1 - 1];
  const double c2 = std::cos(2 * th), s2 = std::sin(2 * th);
  models::AmbientFrame mid = models::ambient_at(spec, detail::to_long(r2.image.x));
  const Vec mid_normal = mid.normal.cast<double>();
  Vec img = (c2 * r2.image.x + s2 * mid_normal).normalized();
  models::AmbientFrame fin = models::ambient_at(spec, detail::to_long(img));
  const int N = spec.ambient_dim();
  RealMat d1 = fin.proj.cast<double>() * (c2 * RealMat::Identity(N, N) - s2 * mid.shape.cast<double>());
  RealMat frame = d1 * r2.differential * jet.e_scale().asDiagonal();
  Tensor3 ap = alpha_at(spec, jet.point.x, jet.frame_e, policy);
  Tensor3 ai = alpha_at(spec, img, frame, policy);
  // sign of the image normal relative to the one transported by both reflections
  Vec expected_mid = r2.normal_sign * mid_normal;
  Vec expected_fin = s2 * r2.image.x - c2 * expected_mid;
  const int sign = fin.normal.cast<double>().dot(expected_fin) >= 0 ? 1 : -1;
  double worst = 0;
  for (size_t i = 0; i < ap.data.size(); ++i) worst = std::max(worst, std::abs(ap.data[i] - sign * ai.data[i]));
  auto ctx = point_ctx(jet);
  ctx["j1"] = std::to_string(j1);
  ctx["j2"] = std::to_string(j2);
  return Residual::make("symmetry.composition", worst, tol, ctx);
}

models::SurfaceJet rotate_within_distributions(const models::SurfaceJet& jet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RealMat Q = random_block_rotation(jet.labels, rng);
  models::SurfaceJet out = jet;
  out.frame_f = jet.frame_f * Q;
  out.A0 = Q.transpose() * jet.A0 * Q;
  out.A0 = 0.5 * (out.A0 + out.A0.transpose()).eval();
  out.frame_e = out.frame_f * jet.e_scale().asDiagonal();
  return out;
}

InvariantSet rotate_within_distributions(const InvariantSet& inv, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // group columns by label first so that blocks are contiguous
  std::vector<int> order;
  for (int d = 0; d < inv.angles.g; ++d)
    for (int a : columns_of(inv, d)) order.push_back(a);
  std::vector<int> sorted_labels;
  for (int a : order) sorted_labels.push_back(inv.labels[a]);
  RealMat Qs = random_block_rotation(sorted_labels, rng);
  const int n = inv.n();
  RealMat Q = RealMat::Zero(n, n);  // new e'_b = sum_a Q(a, b) e_a
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) Q(order[i], order[k]) = Qs(i, k);
  InvariantSet out = inv;
  Tensor3 t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t(a, b, c) = inv.alpha.eval(Vec(Q.col(a)), Vec(Q.col(b)), Vec(Q.col(c)));
  out.alpha = t;
  out.ghat = Q.transpose() * inv.ghat * Q;
  out.B0 = Q.transpose().cast<cd>() * inv.B0 * Q.cast<cd>();
  quadric::complete_algebraic_part(out);
  return out;
}

}  // namespace isogeo::identities
