#include "isogeo/quadric.hpp"

#include <cmath>

#include "isogeo/errors.hpp"
#include "local_chart.hpp"

namespace isogeo::quadric {

using cd = std::complex<double>;
using detail::to_long;
using numkit::MatL;
using numkit::Real;
using numkit::VecL;

namespace {

const cd I(0.0, 1.0);

Vec tangent_part(const models::SurfaceJet& jet, const Vec& v, const char* what) {
  if (v.size() != jet.point.x.size()) throw InputError(std::string(what) + ": expected an ambient vector");
  const Vec& x = jet.point.x;
  Vec t = v - x * x.dot(v) - jet.normal * jet.normal.dot(v);
  if ((t - v).norm() > 1e-8 * (1.0 + v.norm())) throw InputError(std::string(what) + ": vector is not tangent");
  return t;
}

MatL column(const Vec& v) { return to_long(RealMat(v)); }

Tensor3 to_tensor(const std::vector<Real>& comps, int n) {
  Tensor3 t(n);
  for (size_t i = 0; i < comps.size(); ++i) t.data[i] = static_cast<double>(comps[i]);
  return t;
}

CplxMat matpow(const CplxMat& m, int k) {
  CplxMat r = CplxMat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

StiefelPoint lift(const family::ParallelState& state) {
  return {(state.Ft.cast<cd>() + I * state.nut.cast<cd>()) / std::sqrt(2.0)};
}

double stiefel_residual(const StiefelPoint& p) {
  return std::max(std::abs((p.z.transpose() * p.z).value()), std::abs(p.z.norm() - 1.0));
}

LagrangianJet lagrangian_jet(const models::SurfaceJet& jet) {
  LagrangianJet lj;
  lj.base = lift(family::parallel(jet, 0.0));
  const RealMat& F = jet.frame_f;
  lj.dF = (F.cast<cd>() - I * (jet.shape_ambient * F).cast<cd>()) / std::sqrt(2.0);
  lj.N = -I * lj.dF;
  return lj;
}

double horizontality_residual(const LagrangianJet& lj) {
  double r = 0;
  for (int a = 0; a < lj.dF.cols(); ++a) {
    r = std::max(r, std::abs((lj.base.z.transpose() * lj.dF.col(a)).value()));
    r = std::max(r, std::abs(lj.base.z.dot(lj.dF.col(a))));
  }
  return r;
}

double lagrangian_residual(const LagrangianJet& lj) {
  CplxMat h = (I * lj.dF).adjoint() * lj.dF;
  return h.real().cwiseAbs().maxCoeff();
}

RealMat ghat(const models::SurfaceJet& jet) {
  const int n = jet.n();
  return 0.5 * (RealMat::Identity(n, n) + jet.A0 * jet.A0);
}

RealMat ghat_at_t(const models::SurfaceJet& jet, double t) {
  const int n = jet.n();
  RealMat Id = RealMat::Identity(n, n);
  RealMat M = std::cos(t) * Id - std::sin(t) * jet.A0;
  RealMat At = family::shape_at_t(jet.A0, t);
  RealMat g = M.transpose() * M * 0.5 * (Id + At * At);
  return 0.5 * (g + g.transpose());
}

RealMat ghat_from_lift(const models::SurfaceJet& jet) {
  LagrangianJet lj = lagrangian_jet(jet);
  return (lj.dF.adjoint() * lj.dF).real();
}

double alpha_via_lift(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z,
                      const StepPolicy& policy) {
  Vec x = tangent_part(jet, X, "alpha_via_lift"), y = tangent_part(jet, Y, "alpha_via_lift"),
      z = tangent_part(jet, Z, "alpha_via_lift");
  models::AmbientFrame q = models::ambient_at(jet.model(), to_long(jet.point.x));
  return static_cast<double>(detail::alpha_block_lift(jet.model(), q, to_long(x), column(y), column(z), policy)(0, 0));
}

double alpha_via_connection(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z,
                            const StepPolicy& policy, Extension ext) {
  Vec x = tangent_part(jet, X, "alpha_via_connection"), y = tangent_part(jet, Y, "alpha_via_connection"),
      z = tangent_part(jet, Z, "alpha_via_connection");
  models::AmbientFrame q = models::ambient_at(jet.model(), to_long(jet.point.x));
  return static_cast<double>(detail::alpha_block_connection(jet.model(), q, to_long(x), column(y), column(z), policy,
                                                            ext == Extension::projected_sheared)(0, 0));
}

double alpha_at_t(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z, double t,
                  const StepPolicy& policy) {
  Vec x = tangent_part(jet, X, "alpha_at_t"), y = tangent_part(jet, Y, "alpha_at_t"),
      z = tangent_part(jet, Z, "alpha_at_t");
  family::shape_at_t(jet.A0, t);  // focal times are rejected here
  models::AmbientFrame q = models::ambient_at(jet.model(), to_long(jet.point.x));
  return static_cast<double>(
      detail::alpha_block_t(jet.model(), q, to_long(x), column(y), column(z), Real(t), policy)(0, 0));
}

Tensor3 alpha_tensor(const models::SurfaceJet& jet, const RealMat& frame, Route route, const StepPolicy& policy) {
  for (int a = 0; a < frame.cols(); ++a) tangent_part(jet, frame.col(a), "alpha_tensor");
  models::AmbientFrame q = models::ambient_at(jet.model(), to_long(jet.point.x));
  detail::FieldRoute fr = route == Route::lift         ? detail::FieldRoute::lift
                          : route == Route::connection ? detail::FieldRoute::connection
                                                       : detail::FieldRoute::sheared;
  return to_tensor(detail::alpha_components(jet.model(), q, to_long(frame), fr, policy),
                   static_cast<int>(frame.cols()));
}

Tensor3 alpha_tensor_at_t(const models::SurfaceJet& jet, const RealMat& frame, double t, const StepPolicy& policy) {
  for (int a = 0; a < frame.cols(); ++a) tangent_part(jet, frame.col(a), "alpha_tensor_at_t");
  family::shape_at_t(jet.A0, t);
  models::AmbientFrame q = models::ambient_at(jet.model(), to_long(jet.point.x));
  return to_tensor(detail::alpha_components_t(jet.model(), q, to_long(frame), Real(t), policy),
                   static_cast<int>(frame.cols()));
}

CplxMat b_operator(const RealMat& At) {
  if (!numkit::is_symmetric(At, 1e-9)) throw InputError("b_operator: A_t must be symmetric");
  Eigen::SelfAdjointEigenSolver<RealMat> es(0.5 * (At + At.transpose()));
  numkit::CVec mu(At.rows());
  for (int i = 0; i < At.rows(); ++i) {
    const double l = es.eigenvalues()(i);
    mu(i) = (l + I) / (l - I);
  }
  CplxMat V = es.eigenvectors().cast<cd>();
  return V * mu.asDiagonal() * V.transpose();
}

CplxMat b_shift(const CplxMat& B0, double t) { return std::exp(-2.0 * I * t) * B0; }

BIdentityResiduals b_identities(const RealMat& A0, const family::AngleData& angles, const std::vector<double>& ts) {
  BIdentityResiduals r;
  const int n = static_cast<int>(A0.rows());
  const int g = angles.g;
  const CplxMat Id = CplxMat::Identity(n, n);
  const CplxMat B0 = b_operator(A0);
  const CplxMat B0inv = B0.inverse();
  bool equal_mult = g > 1;
  for (int m : angles.multiplicities) equal_mult = equal_mult && m == angles.multiplicities[0];
  const double delta = 0.1;
  for (double t : ts) {
    RealMat At;
    try {
      At = family::shape_at_t(A0, t);
    } catch (const FocalTimeError&) {
      continue;
    }
    CplxMat Bt = b_operator(At);
    CplxMat Btinv = Bt.inverse();
    Eigen::ComplexEigenSolver<CplxMat> ces(Bt);
    for (int i = 0; i < n; ++i) {
      double best = 1e300;
      for (double th : angles.thetas) best = std::min(best, std::abs(ces.eigenvalues()(i) - std::exp(2.0 * I * (th - t))));
      r.eigenvalues = std::max(r.eigenvalues, best);
    }
    // with theta_1 = pi/(2g) the constant below is -1
    const cd c = std::exp(2.0 * I * (g * angles.phi)) * std::exp(-2.0 * I * (g * t));
    r.power = std::max(r.power, (matpow(Bt, g) - c * Id).cwiseAbs().maxCoeff());
    r.conj_inverse = std::max(r.conj_inverse, (Bt.conjugate() - Btinv).cwiseAbs().maxCoeff());
    try {
      CplxMat Bs = b_operator(family::shape_at_t(A0, t + delta));
      r.shift = std::max(r.shift, (Bs - std::exp(-2.0 * I * delta) * Bt).cwiseAbs().maxCoeff());
    } catch (const FocalTimeError&) {
    }
    if (equal_mult) r.trace = std::max(r.trace, std::abs(Bt.trace()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            r.tensor = std::max(r.tensor, std::abs(Bt(i, j) * Btinv(k, l) - B0(i, j) * B0inv(k, l)));
  }
  return r;
}

RealMat projector(const family::AngleData& angles, int j, const CplxMat& B_thetaj) {
  if (j < 1 || j > angles.g) throw InputError("projector: index out of range");
  const int n = static_cast<int>(B_thetaj.rows());
  CplxMat acc = CplxMat::Zero(n, n), pw = CplxMat::Identity(n, n);
  for (int k = 0; k < angles.g; ++k) {
    acc += pw;
    pw = pw * B_thetaj;
  }
  acc /= static_cast<double>(angles.g);
  const double im = n == 0 ? 0.0 : acc.imag().cwiseAbs().maxCoeff();
  if (im > 1e-10) throw InputError("projector: sum is not real (imaginary part " + std::to_string(im) + ")");
  return acc.real();
}

Vec InvariantSet::e_scale() const {
  Vec s(n());
  for (int a = 0; a < n(); ++a) s(a) = std::sqrt(2.0 / (1.0 + lambdas[a] * lambdas[a]));
  return s;
}

Tensor3 InvariantSet::alpha_f() const {
  Vec s = e_scale();
  Tensor3 out(n());
  for (int a = 0; a < n(); ++a)
    for (int b = 0; b < n(); ++b)
      for (int c = 0; c < n(); ++c) out(a, b, c) = alpha(a, b, c) / (s(a) * s(b) * s(c));
  return out;
}

void complete_algebraic_part(InvariantSet& inv) {
  const int n = inv.n();
  if (inv.B0.size() == 0) {
    inv.B0 = CplxMat::Zero(n, n);
    for (int a = 0; a < n; ++a) inv.B0(a, a) = std::exp(2.0 * I * inv.angles.thetas[inv.labels[a]]);
  }
  const CplxMat G = inv.ghat.cast<cd>();
  inv.b = inv.B0.transpose() * G;
  inv.bbar = inv.B0.conjugate().transpose() * G;
  inv.projs.clear();
  for (int j = 1; j <= inv.angles.g; ++j)
    inv.projs.push_back(projector(inv.angles, j, b_shift(inv.B0, inv.angles.thetas[j - 1])));
  inv.mu.clear();
  for (int a = 0; a < n; ++a) inv.mu.push_back(inv.B0(a, a));
}

InvariantSet invariants(const models::SurfaceJet& jet, const StepPolicy& policy, Route route) {
  InvariantSet inv;
  inv.angles = family::AngleData::for_model(jet.model());
  inv.labels = jet.labels;
  for (int a = 0; a < jet.n(); ++a) inv.lambdas.push_back(jet.lambda_of(a));
  const int N = static_cast<int>(jet.point.x.size());
  const Vec& x = jet.point.x;
  RealMat P = RealMat::Identity(N, N) - x * x.transpose() - jet.normal * jet.normal.transpose();
  RealMat G = 0.5 * jet.frame_e.transpose() * (P + jet.shape_ambient * jet.shape_ambient) * jet.frame_e;
  inv.ghat = 0.5 * (G + G.transpose());
  inv.alpha = alpha_tensor(jet, jet.frame_e, route, policy);
  Vec s = jet.e_scale();
  inv.B0 = s.cwiseInverse().cast<cd>().asDiagonal() * b_operator(jet.A0) * s.cast<cd>().asDiagonal();
  complete_algebraic_part(inv);
  return inv;
}

double t_tensor(const InvariantSet& inv, const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
  const int n = inv.n();
  if (X.size() != n || Y.size() != n || Z.size() != n || W.size() != n)
    throw InputError("t_tensor: dimension mismatch");
  cd b1 = (X.cast<cd>().transpose() * inv.b * Y.cast<cd>()).value();
  cd b2 = (Z.cast<cd>().transpose() * inv.bbar * W.cast<cd>()).value();
  return (b1 * b2).imag();
}

double quadric_curvature(const CVec& z, const CVec& X, const CVec& Y, const CVec& Z, const CVec& W) {
  const int N = static_cast<int>(z.size());
  for (const CVec* v : {&X, &Y, &Z, &W}) {
    if (v->size() != N) throw InputError("quadric_curvature: dimension mismatch");
    const double tol = 1e-8 * (1.0 + v->norm());
    if (std::abs((z.transpose() * *v).value()) > tol || std::abs(z.dot(*v)) > tol)
      throw InputError("quadric_curvature: argument is not horizontal at the lifted point");
  }
  auto realify = [N](const CVec& v) {
    Eigen::VectorXcd r(2 * N);
    r << v.real().cast<cd>(), v.imag().cast<cd>();
    return r;
  };
  const int M = 2 * N;
  CplxMat gQ = CplxMat::Identity(M, M);
  CplxMat om = CplxMat::Zero(M, M), q = CplxMat::Zero(M, M);
  om.topRightCorner(N, N).setIdentity();
  om.bottomLeftCorner(N, N) = -CplxMat::Identity(N, N);
  q.topLeftCorner(N, N).setIdentity();
  q.topRightCorner(N, N) = I * CplxMat::Identity(N, N);
  q.bottomLeftCorner(N, N) = I * CplxMat::Identity(N, N);
  q.bottomRightCorner(N, N) = -CplxMat::Identity(N, N);
  CplxMat qbar = q.conjugate();
  CVec x = realify(X), y = realify(Y), zz = realify(Z), w = realify(W);
  cd r = numkit::kn_sym(gQ, gQ, x, y, zz, w) + numkit::kn_skew(om, x, y, zz, w) + numkit::kn_sym(q, qbar, x, y, zz, w);
  return r.real();
}

InvariantChecks check_invariants(const InvariantSet& inv) {
  InvariantChecks c;
  const int n = inv.n();
  const int g = inv.angles.g;
  c.alpha_symmetry = inv.alpha.symmetry_defect();
  // alpha(pi_j X, pi_j Y, Z) on frame vectors; projector images are computed, not assumed
  for (int j = 0; j < g; ++j) {
    const RealMat& P = inv.projs[j];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) {
          Vec z = Vec::Unit(n, k);
          c.alpha_same_distribution =
              std::max(c.alpha_same_distribution, std::abs(inv.alpha.eval(Vec(P.col(a)), Vec(P.col(b)), z)));
        }
  }
  // trace over a ghat-orthonormal basis
  RealMat Ginv = inv.ghat.inverse();
  for (int k = 0; k < n; ++k) {
    double tr = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) tr += Ginv(a, b) * inv.alpha(a, b, k);
    c.alpha_trace = std::max(c.alpha_trace, std::abs(tr));
  }
  RealMat sum = RealMat::Zero(n, n);
  for (int j = 0; j < g; ++j) {
    sum += inv.projs[j];
    for (int k = 0; k < g; ++k) {
      RealMat expect = j == k ? inv.projs[j] : RealMat::Zero(n, n);
      c.projector_products = std::max(c.projector_products, (inv.projs[j] * inv.projs[k] - expect).cwiseAbs().maxCoeff());
    }
    RealMat coord = RealMat::Zero(n, n);
    for (int a = 0; a < n; ++a)
      if (inv.labels[a] == j) coord(a, a) = 1.0;
    c.projector_image = std::max(c.projector_image, (inv.projs[j] - coord).cwiseAbs().maxCoeff());
  }
  c.projector_sum = (sum - RealMat::Identity(n, n)).cwiseAbs().maxCoeff();
  // sum_j pi_j (x) pi_j versus (1/g) sum_k B^k (x) B^-k
  const CplxMat Binv = inv.B0.inverse();
  std::vector<CplxMat> pw{CplxMat::Identity(n, n)}, pwi{CplxMat::Identity(n, n)};
  for (int k = 1; k < g; ++k) {
    pw.push_back(pw.back() * inv.B0);
    pwi.push_back(pwi.back() * Binv);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          double lhs = 0;
          for (int j = 0; j < g; ++j) lhs += inv.projs[j](a, b) * inv.projs[j](p, q);
          cd rhs = 0;
          for (int k = 0; k < g; ++k) rhs += pw[k](a, b) * pwi[k](p, q);
          rhs /= static_cast<double>(g);
          c.projector_tensor = std::max(c.projector_tensor, std::abs(lhs - rhs));
        }
  // unitary for the hermitian pairing ghat(X, conj Y)
  const CplxMat G = inv.ghat.cast<cd>();
  c.b_unitary = (inv.B0.adjoint() * G * inv.B0 - G).cwiseAbs().maxCoeff();
  const cd expect_power = std::exp(2.0 * I * (g * inv.angles.phi));
  c.b_power = (matpow(inv.B0, g) - expect_power * CplxMat::Identity(n, n)).cwiseAbs().maxCoeff();
  c.b_conj_inverse = (inv.B0.conjugate() - Binv).cwiseAbs().maxCoeff();
  return c;
}

}  // namespace isogeo::quadric
