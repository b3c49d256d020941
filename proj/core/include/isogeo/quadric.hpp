#pragma once

#include <complex>
#include <vector>

#include "isogeo/family.hpp"
#include "isogeo/models.hpp"
#include "isogeo/numkit.hpp"

namespace isogeo::quadric {

using numkit::CplxMat;
using numkit::CVec;
using numkit::RealMat;
using numkit::StepPolicy;
using numkit::Tensor3;
using numkit::Vec;

struct StiefelPoint {
  CVec z;
};

StiefelPoint lift(const family::ParallelState& state);
// max(|<z,z>_C|, ||z|_h - 1|)
double stiefel_residual(const StiefelPoint& p);

struct LagrangianJet {
  StiefelPoint base;
  CplxMat dF;  // (n+2) x n, lifted images of frame_f
  CplxMat N;   // (n+2) x n, N_i = -i dF e_i
};

LagrangianJet lagrangian_jet(const models::SurfaceJet& jet);
double horizontality_residual(const LagrangianJet& lj);
double lagrangian_residual(const LagrangianJet& lj);

// Metric hat g in frame_f coordinates.
RealMat ghat(const models::SurfaceJet& jet);
RealMat ghat_at_t(const models::SurfaceJet& jet, double t);
RealMat ghat_from_lift(const models::SurfaceJet& jet);

// Tangent vectors X, Y, Z are ambient vectors in R^{n+2} tangent at the jet's point.
double alpha_via_lift(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z,
                      const StepPolicy& policy = StepPolicy::first_derivative());

enum class Extension { projected_constant, projected_sheared };
double alpha_via_connection(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z,
                            const StepPolicy& policy = StepPolicy::first_derivative(),
                            Extension ext = Extension::projected_constant);
// alpha^t(X, Y, Z) evaluated on the parallel surface F_t.
double alpha_at_t(const models::SurfaceJet& jet, const Vec& X, const Vec& Y, const Vec& Z, double t,
                  const StepPolicy& policy = StepPolicy::first_derivative());

enum class Route { lift, connection, connection_sheared };
// Components alpha(F_a, F_b, F_c) for the columns of an ambient frame.
Tensor3 alpha_tensor(const models::SurfaceJet& jet, const RealMat& frame, Route route,
                     const StepPolicy& policy = StepPolicy::first_derivative());
Tensor3 alpha_tensor_at_t(const models::SurfaceJet& jet, const RealMat& frame, double t,
                          const StepPolicy& policy = StepPolicy::first_derivative());

// (At + i)(At - i)^{-1}, spectrally.
CplxMat b_operator(const RealMat& At);
// B_t from B_0 via the phase shift identity; valid at focal times too.
CplxMat b_shift(const CplxMat& B0, double t);

struct BIdentityResiduals {
  double eigenvalues = 0;  // spec(B_t) vs exp(2i(theta_j - t))
  double power = 0;        // B_t^g + exp(-2igt) I
  double conj_inverse = 0; // conj(B_t) - B_t^{-1}
  double shift = 0;        // B_{t+phi} - exp(-2i phi) B_t
  double trace = 0;        // only meaningful for equal multiplicities
  double tensor = 0;       // B_t (x) B_t^{-1} - B_0 (x) B_0^{-1}
};
BIdentityResiduals b_identities(const RealMat& A0, const family::AngleData& angles,
                                const std::vector<double>& ts);

// pi_j = (1/g) sum_k B_{theta_j}^k; j is 1-based. Throws if the sum is not real.
RealMat projector(const family::AngleData& angles, int j, const CplxMat& B_thetaj);

struct InvariantSet {
  family::AngleData angles;
  std::vector<int> labels;      // 0-based distribution per frame vector
  std::vector<double> lambdas;  // principal curvature per frame vector
  RealMat ghat;                 // e-frame, close to I
  Tensor3 alpha;                // e-frame
  CplxMat B0, b, bbar;
  std::vector<RealMat> projs;
  std::vector<std::complex<double>> mu;  // diagonal of B0 (adapted frame)

  int n() const { return static_cast<int>(labels.size()); }
  Vec e_scale() const;          // sqrt(2 / (1 + lambda^2)) per frame vector
  Tensor3 alpha_f() const;      // alpha in the g0-orthonormal frame
};

InvariantSet invariants(const models::SurfaceJet& jet, const StepPolicy& policy = StepPolicy::first_derivative(),
                        Route route = Route::lift);
// Fill B0, b, bbar, projs, mu from angles/labels/ghat; used for tabulated data too.
void complete_algebraic_part(InvariantSet& inv);

double t_tensor(const InvariantSet& inv, const Vec& X, const Vec& Y, const Vec& Z, const Vec& W);

// Curvature of the quadric at a lifted point; arguments must be horizontal at z.
double quadric_curvature(const CVec& z, const CVec& X, const CVec& Y, const CVec& Z, const CVec& W);

// Invariant-set consistency: symmetry, vanishing on D_j x D_j, trace-freeness,
// projector algebra, B0 unitarity. Values are max residuals.
struct InvariantChecks {
  double alpha_symmetry = 0;
  double alpha_same_distribution = 0;
  double alpha_trace = 0;
  double projector_sum = 0;
  double projector_products = 0;
  double projector_image = 0;
  double projector_tensor = 0;  // sum pi (x) pi vs (1/g) sum B^k (x) B^-k
  double b_unitary = 0;
  double b_power = 0;
  double b_conj_inverse = 0;
};
InvariantChecks check_invariants(const InvariantSet& inv);

}  // namespace isogeo::quadric
