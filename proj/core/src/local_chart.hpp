#pragma once

// Extended-precision helpers shared by the quadric and identity checks:
// directional derivatives of frame fields along surface curves, and an
// intrinsic chart for curvature computations.

#include <vector>

#include "isogeo/models.hpp"
#include "isogeo/numkit.hpp"

namespace isogeo::detail {

using numkit::CMatL;
using numkit::CplxL;
using numkit::MatL;
using numkit::Real;
using numkit::StepPolicy;
using numkit::VecL;

// Y, Z are (N x k), (N x m) blocks of tangent vectors at q; result is k x m with
// entry (b, c) = alpha(X, Y_b, Z_c).
MatL alpha_block_connection(const models::ModelSpec& spec, const models::AmbientFrame& q, const VecL& X,
                            const MatL& Ys, const MatL& Zs, const StepPolicy& policy, bool sheared);
MatL alpha_block_lift(const models::ModelSpec& spec, const models::AmbientFrame& q, const VecL& X,
                      const MatL& Ys, const MatL& Zs, const StepPolicy& policy);
MatL alpha_block_t(const models::ModelSpec& spec, const models::AmbientFrame& q, const VecL& X,
                   const MatL& Ys, const MatL& Zs, Real t, const StepPolicy& policy);

enum class FieldRoute { lift, connection, sheared };
// n^3 components, index (a * n + b) * n + c.
std::vector<Real> alpha_components(const models::ModelSpec& spec, const models::AmbientFrame& q,
                                   const MatL& frame, FieldRoute route, const StepPolicy& policy);
std::vector<Real> alpha_components_t(const models::ModelSpec& spec, const models::AmbientFrame& q,
                                     const MatL& frame, Real t, const StepPolicy& policy);

MatL shape_t(const models::AmbientFrame& q, Real t);

// Graph chart at p over span(frame).
class LocalChart {
 public:
  LocalChart(const models::ModelSpec& spec, const VecL& p, const VecL& nu, const MatL& frame);

  int dim() const { return static_cast<int>(frame_.cols()); }
  models::GraphEval eval(const VecL& u) const;
  MatL metric(const VecL& u, bool hat) const;
  MatL shape_coords(const VecL& u) const;
  CMatL b_coords(const VecL& u) const;
  std::vector<Real> alpha_coords(const VecL& u, const StepPolicy& inner) const;

  struct MetricJet {
    MatL G;
    std::vector<MatL> dG;                // dG[a] = d_a G
    std::vector<std::vector<MatL>> ddG;  // ddG[a][b]
  };
  MetricJet metric_jet(bool hat, Real h) const;

  // Gamma^k_ij at (k * n + i) * n + j
  static std::vector<Real> christoffel(const MetricJet& mj);
  // R(d_a, d_b, d_c, d_d) = g(R(d_a, d_b) d_c, d_d), R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]
  static std::vector<Real> riemann(const MetricJet& mj);

  // d_d alpha_abc at u = 0, index ((d * n + a) * n + b) * n + c
  std::vector<Real> alpha_derivative(const StepPolicy& outer, const StepPolicy& inner) const;
  // d_a B at u = 0
  std::vector<CMatL> b_derivative(const StepPolicy& outer) const;

 private:
  const models::ModelSpec& spec_;
  VecL p_, nu_;
  MatL frame_;
};

inline VecL to_long(const numkit::Vec& v) { return v.cast<Real>(); }
inline MatL to_long(const numkit::RealMat& m) { return m.cast<Real>(); }

}  // namespace isogeo::detail
