#pragma once

#include <cstdint>
#include <vector>

#include "isogeo/family.hpp"
#include "isogeo/models.hpp"
#include "isogeo/quadric.hpp"
#include "isogeo/residual.hpp"

namespace isogeo::identities {

using numkit::StepPolicy;
using numkit::Vec;
using quadric::InvariantSet;

Residual cartan_identity(const family::AngleData& angles, double tol = 1e-12);

// Distribution indices i, j are 1-based. Vectors are coordinates in the
// g0-orthonormal frame f of the invariant set.
Residual classical_weyl(const InvariantSet& inv, int i, int j, const Vec& vi, const Vec& vj, double tol = 1e-5);
// Same, with ambient tangent vectors at the jet's point.
Residual classical_weyl(const models::SurfaceJet& jet, int i, int j, const Vec& vi, const Vec& vj,
                        double tol = 1e-5);
Residual polarized_weyl(const InvariantSet& inv, int i, int j, const Vec& vi, const Vec& vti, const Vec& vj,
                        const Vec& vtj, double tol = 1e-5);
// Max over all distribution pairs and frame vectors (classical form).
Residual classical_weyl_all(const InvariantSet& inv, double tol = 1e-5);

// Requires a ghat-orthonormal frame adapted to B0 (as produced by invariants()
// and by tabulated data).
Residual invariant_weyl(const InvariantSet& inv, double tol = 1e-10);

// Implication check: 0 when every Weyl residual fails or Cartan passes, 1 otherwise.
Residual weyl_implies_cartan(const std::vector<Residual>& weyl, const Residual& cartan);

struct ChartOptions {
  StepPolicy outer = StepPolicy::nested();
  StepPolicy inner = StepPolicy::first_derivative();
};

// Chart-based checks over all frame tuples, reported in the e-frame.
Residual codazzi_check(const models::SurfaceJet& jet, double tol = 1e-3, const ChartOptions& opt = {});
Residual gauss_check(const models::SurfaceJet& jet, double tol = 1e-3, const ChartOptions& opt = {});
Residual nabla_b_check(const models::SurfaceJet& jet, double tol = 1e-4, const ChartOptions& opt = {});
// Hypersurface Gauss equation in the sphere on (v_j, v_i, w_i, w_j) tuples.
Residual sphere_gauss_check(const models::SurfaceJet& jet, double tol = 1e-3, const ChartOptions& opt = {});
// Difference of the Levi-Civita connections of ghat and g0.
Residual connection_relation_check(const models::SurfaceJet& jet, double tol = 1e-5, const ChartOptions& opt = {});

Residual symmetry_check(const models::SurfaceJet& jet, int j, double tol = 1e-5,
                        const StepPolicy& policy = StepPolicy::first_derivative());
// alpha is preserved by tau_j1 o tau_j2.
Residual composition_symmetry_check(const models::SurfaceJet& jet, int j1, int j2, double tol = 1e-5,
                                    const StepPolicy& policy = StepPolicy::first_derivative());

// Random orthogonal change of frame inside each distribution.
models::SurfaceJet rotate_within_distributions(const models::SurfaceJet& jet, std::uint64_t seed);
InvariantSet rotate_within_distributions(const InvariantSet& inv, std::uint64_t seed);

}  // namespace isogeo::identities
