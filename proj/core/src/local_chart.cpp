#include "local_chart.hpp"

#include <cmath>

#include "isogeo/errors.hpp"

namespace isogeo::detail {

namespace {

using models::AmbientFrame;

AmbientFrame frame_on_curve(const models::ModelSpec& spec, const AmbientFrame& q, const VecL& X, Real s) {
  return models::ambient_at(spec, models::graph_point(spec, q.x, q.normal, s * X));
}

// Fixed shear used by the second extension; any smooth choice works.
MatL shear(int N) {
  MatL k(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) k(i, j) = std::cos(Real(i * j + 1)) / N;
  return k;
}

}  // namespace

MatL shape_t(const AmbientFrame& q, Real t) {
  const int N = static_cast<int>(q.x.size());
  const MatL I = MatL::Identity(N, N);
  const Real c = std::cos(t), s = std::sin(t);
  MatL D = c * q.proj - s * q.shape + (I - q.proj);
  MatL num = s * q.proj + c * q.shape;
  return q.proj * num * D.partialPivLu().inverse() * q.proj;
}

MatL alpha_block_connection(const models::ModelSpec& spec, const AmbientFrame& q, const VecL& X,
                            const MatL& Ys, const MatL& Zs, const StepPolicy& policy, bool sheared) {
  const int N = static_cast<int>(q.x.size());
  const int k = static_cast<int>(Ys.cols());
  const MatL K = sheared ? shear(N) : MatL::Zero(N, N);
  auto field = [&](Real s) {
    AmbientFrame c = frame_on_curve(spec, q, X, s);
    MatL Yt = c.proj * (Ys + s * K * Ys);
    MatL out(N, 2 * k);
    out << c.shape * Yt, Yt;
    return out;
  };
  MatL D = numkit::fd_dir(field, Real(0), policy).value;
  MatL nablaAY = q.proj * D.leftCols(k) - q.shape * D.rightCols(k);
  return (Zs.transpose() * nablaAY).transpose();
}

MatL alpha_block_lift(const models::ModelSpec& spec, const AmbientFrame& q, const VecL& X, const MatL& Ys,
                      const MatL& Zs, const StepPolicy& policy) {
  const Real r = 1 / std::sqrt(Real(2));
  const CplxL I(0, 1);
  auto field = [&](Real s) -> CMatL {
    AmbientFrame c = frame_on_curve(spec, q, X, s);
    CMatL W = (c.proj.cast<CplxL>() - I * c.shape.cast<CplxL>()) * Zs.cast<CplxL>();
    return r * W;
  };
  CMatL D = numkit::fd_dir(field, Real(0), policy).value;
  CMatL iY = r * (I * Ys.cast<CplxL>() + (q.shape * Ys).cast<CplxL>());
  CMatL h = D.adjoint() * iY;  // (c, b)
  return Real(-2) * h.real().transpose();
}

MatL alpha_block_t(const models::ModelSpec& spec, const AmbientFrame& q, const VecL& X, const MatL& Ys,
                   const MatL& Zs, Real t, const StepPolicy& policy) {
  const int N = static_cast<int>(q.x.size());
  const int k = static_cast<int>(Ys.cols());
  const Real c = std::cos(t), s = std::sin(t);
  MatL Yt = (c * q.proj - s * q.shape) * Ys;
  MatL Zt = (c * q.proj - s * q.shape) * Zs;
  auto field = [&](Real u) {
    AmbientFrame cf = frame_on_curve(spec, q, X, u);
    MatL Ye = cf.proj * Yt;
    MatL out(N, 2 * k);
    out << shape_t(cf, t) * Ye, Ye;
    return out;
  };
  MatL D = numkit::fd_dir(field, Real(0), policy).value;
  MatL nabla = q.proj * D.leftCols(k) - shape_t(q, t) * D.rightCols(k);
  return (Zt.transpose() * nabla).transpose();
}

std::vector<Real> alpha_components(const models::ModelSpec& spec, const AmbientFrame& q, const MatL& frame,
                                   FieldRoute route, const StepPolicy& policy) {
  const int n = static_cast<int>(frame.cols());
  std::vector<Real> out(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    VecL X = frame.col(a);
    MatL blk = route == FieldRoute::lift
                   ? alpha_block_lift(spec, q, X, frame, frame, policy)
                   : alpha_block_connection(spec, q, X, frame, frame, policy, route == FieldRoute::sheared);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out[(static_cast<size_t>(a) * n + b) * n + c] = blk(b, c);
  }
  return out;
}

std::vector<Real> alpha_components_t(const models::ModelSpec& spec, const AmbientFrame& q, const MatL& frame,
                                     Real t, const StepPolicy& policy) {
  const int n = static_cast<int>(frame.cols());
  std::vector<Real> out(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    MatL blk = alpha_block_t(spec, q, frame.col(a), frame, frame, t, policy);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out[(static_cast<size_t>(a) * n + b) * n + c] = blk(b, c);
  }
  return out;
}

LocalChart::LocalChart(const models::ModelSpec& spec, const VecL& p, const VecL& nu, const MatL& frame)
    : spec_(spec), p_(p), nu_(nu), frame_(frame) {}

models::GraphEval LocalChart::eval(const VecL& u) const { return models::graph_eval(spec_, p_, nu_, frame_, u); }

MatL LocalChart::metric(const VecL& u, bool hat) const {
  models::GraphEval ge = eval(u);
  if (!hat) return ge.tangents.transpose() * ge.tangents;
  AmbientFrame af = models::ambient_at(spec_, ge.x);
  MatL G = Real(0.5) * ge.tangents.transpose() * (af.proj + af.shape * af.shape) * ge.tangents;
  return Real(0.5) * (G + G.transpose());
}

MatL LocalChart::shape_coords(const VecL& u) const {
  models::GraphEval ge = eval(u);
  AmbientFrame af = models::ambient_at(spec_, ge.x);
  const MatL& J = ge.tangents;
  return (J.transpose() * J).ldlt().solve(J.transpose() * af.shape * J);
}

CMatL LocalChart::b_coords(const VecL& u) const {
  MatL A = shape_coords(u);
  const int n = dim();
  CMatL Ac = A.cast<CplxL>();
  CMatL Id = CMatL::Identity(n, n);
  const CplxL I(0, 1);
  return (Ac + I * Id) * (Ac - I * Id).partialPivLu().inverse();
}

std::vector<Real> LocalChart::alpha_coords(const VecL& u, const StepPolicy& inner) const {
  models::GraphEval ge = eval(u);
  AmbientFrame af = models::ambient_at(spec_, ge.x);
  return alpha_components(spec_, af, ge.tangents, FieldRoute::connection, inner);
}

LocalChart::MetricJet LocalChart::metric_jet(bool hat, Real h) const {
  const int n = dim();
  MetricJet mj;
  const VecL zero = VecL::Zero(n);
  mj.G = metric(zero, hat);
  StepPolicy pol{2, static_cast<double>(h), true, false};
  for (int a = 0; a < n; ++a) {
    auto f = [&](Real s) {
      VecL u = VecL::Zero(n);
      u(a) = s;
      return metric(u, hat);
    };
    mj.dG.push_back(numkit::fd_dir(f, Real(0), pol).value);
  }
  // mixed second differences with steps h and 2h, combined by Richardson
  auto second = [&](int a, int b, Real step) {
    auto at = [&](Real sa, Real sb) {
      VecL u = VecL::Zero(n);
      u(a) += sa;
      u(b) += sb;
      return metric(u, hat);
    };
    MatL r = at(step, step) - at(step, -step) - at(-step, step) + at(-step, -step);
    return MatL(r / (4 * step * step));
  };
  mj.ddG.assign(n, std::vector<MatL>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      MatL d1 = second(a, b, h), d2 = second(a, b, 2 * h);
      mj.ddG[a][b] = (4 * d1 - d2) / 3;
      mj.ddG[b][a] = mj.ddG[a][b];
    }
  return mj;
}

std::vector<Real> LocalChart::christoffel(const MetricJet& mj) {
  const int n = static_cast<int>(mj.G.rows());
  MatL Ginv = mj.G.inverse();
  std::vector<Real> gam(static_cast<size_t>(n) * n * n, 0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Real acc = 0;
        for (int e = 0; e < n; ++e)
          acc += Ginv(k, e) * Real(0.5) * (mj.dG[i](e, j) + mj.dG[j](e, i) - mj.dG[e](i, j));
        gam[(static_cast<size_t>(k) * n + i) * n + j] = acc;
      }
  return gam;
}

std::vector<Real> LocalChart::riemann(const MetricJet& mj) {
  const int n = static_cast<int>(mj.G.rows());
  const size_t n3 = static_cast<size_t>(n) * n * n;
  MatL Ginv = mj.G.inverse();
  auto idx = [n](int k, int i, int j) { return (static_cast<size_t>(k) * n + i) * n + j; };
  std::vector<Real> gam = christoffel(mj);
  // lowered symbols and their derivatives
  std::vector<Real> low(n3), dlow(n3 * n);  // dlow[a * n3 + idx(e,b,c)] = d_a Gamma_{e,bc}
  for (int e = 0; e < n; ++e)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        low[idx(e, b, c)] = Real(0.5) * (mj.dG[b](e, c) + mj.dG[c](e, b) - mj.dG[e](b, c));
        for (int a = 0; a < n; ++a)
          dlow[a * n3 + idx(e, b, c)] =
              Real(0.5) * (mj.ddG[a][b](e, c) + mj.ddG[a][c](e, b) - mj.ddG[a][e](b, c));
      }
  // d_a Gamma^d_bc
  std::vector<Real> dgam(n3 * n, 0);
  for (int a = 0; a < n; ++a) {
    MatL dGinv = -Ginv * mj.dG[a] * Ginv;
    for (int d = 0; d < n; ++d)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Real acc = 0;
          for (int e = 0; e < n; ++e) acc += dGinv(d, e) * low[idx(e, b, c)] + Ginv(d, e) * dlow[a * n3 + idx(e, b, c)];
          dgam[a * n3 + idx(d, b, c)] = acc;
        }
  }
  std::vector<Real> R(n3 * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        VecL up(n);  // R^d_{cab}
        for (int d = 0; d < n; ++d) {
          Real v = dgam[a * n3 + idx(d, b, c)] - dgam[b * n3 + idx(d, a, c)];
          for (int e = 0; e < n; ++e) v += gam[idx(d, a, e)] * gam[idx(e, b, c)] - gam[idx(d, b, e)] * gam[idx(e, a, c)];
          up(d) = v;
        }
        for (int w = 0; w < n; ++w) {
          Real acc = 0;
          for (int d = 0; d < n; ++d) acc += up(d) * mj.G(d, w);
          R[idx(a, b, c) * n + w] = acc;
        }
      }
  return R;
}

std::vector<Real> LocalChart::alpha_derivative(const StepPolicy& outer, const StepPolicy& inner) const {
  const int n = dim();
  const size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Real> out(n3 * n);
  for (int d = 0; d < n; ++d) {
    auto f = [&](Real s) {
      VecL u = VecL::Zero(n);
      u(d) = s;
      std::vector<Real> v = alpha_coords(u, inner);
      return VecL(Eigen::Map<VecL>(v.data(), static_cast<Eigen::Index>(v.size())));
    };
    VecL dv = numkit::fd_dir(f, Real(0), outer).value;
    for (size_t i = 0; i < n3; ++i) out[d * n3 + i] = dv(static_cast<Eigen::Index>(i));
  }
  return out;
}

std::vector<CMatL> LocalChart::b_derivative(const StepPolicy& outer) const {
  const int n = dim();
  std::vector<CMatL> out;
  for (int a = 0; a < n; ++a) {
    auto f = [&](Real s) {
      VecL u = VecL::Zero(n);
      u(a) = s;
      return b_coords(u);
    };
    out.push_back(numkit::fd_dir(f, Real(0), outer).value);
  }
  return out;
}

}  // namespace isogeo::detail
