#pragma once

#include <optional>
#include <vector>

#include "isogeo/exact.hpp"
#include "isogeo/models.hpp"

namespace isogeo::family {

using numkit::RealMat;
using numkit::Vec;

struct AngleData {
  int g = 0;
  double phi = 0.0;
  std::vector<double> thetas;   // increasing in (0, pi)
  std::vector<double> lambdas;  // cot(theta), decreasing
  std::vector<int> multiplicities;

  // phi = pi / (2g); multiplicities default to 1
  static AngleData standard(int g, std::vector<int> multiplicities = {});
  static AngleData with_phi(int g, double phi, std::vector<int> multiplicities = {});
  static AngleData for_model(const models::ModelSpec& spec);
  void validate() const;
};

struct ParallelState {
  double t = 0.0;
  Vec Ft, nut;
  std::optional<RealMat> At;  // in the base frame_f; absent at focal times
  Vec singular_values;        // of cos t I - sin t A0
  int rank = 0;
};

ParallelState parallel(const models::SurfaceJet& jet, double t);

// (1 + cot t A0)(cot t - A0)^{-1}, computed spectrally.
RealMat shape_at_t(const RealMat& A0, double t, double guard = 1e-6);

// {cot((i - j) pi / g) : i != j}, descending; j is 1-based.
std::vector<double> focal_spectrum(int g, int j);
std::vector<exact::Surd> focal_spectrum_exact(int g, int j);

// count points per period pi, offset by half a step; points hitting a focal time move a quarter step.
std::vector<double> t_grid(const AngleData& angles, int count = 24, double guard = 1e-6);

struct Reflection {
  int j = 0;  // 1-based
  double theta = 0.0;
  models::SurfacePoint image;
  Vec image_normal;
  Vec expected_normal;   // -nu_{2 theta_j}(p)
  int normal_sign = 1;   // image_normal ~ normal_sign * expected_normal
  double normal_residual = 0.0;
  RealMat differential;  // (n+2) x n: d tau applied to frame_f columns, ambient vectors
  double membership_residual = 0.0;
  double isometry_residual = 0.0;     // ghat pulled back vs ghat at p
  double intertwining_residual = 0.0; // A0(tau p) d tau = -s d tau A_{2 theta}
};

Reflection reflection_tau(const models::SurfaceJet& jet, int j);
// tau_j applied to a point using the model normal there.
Vec tau_point(const models::ModelSpec& spec, const Vec& x, int j);
double involution_residual(const models::SurfaceJet& jet, int j);
// smallest k <= max_order with (tau_1 tau_2)^k p = p, or 0
int rotation_order(const models::SurfaceJet& jet, int max_order, double tol = 1e-8);

}  // namespace isogeo::family
