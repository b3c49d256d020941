#include "isogeo/numkit.hpp"

#include <algorithm>
#include <sstream>

namespace isogeo::numkit {

bool is_symmetric(const RealMat& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return true;
  return (m - m.transpose()).cwiseAbs().maxCoeff() < rel_tol * scale;
}

bool is_unitary(const CplxMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  CplxMat d = m.adjoint() * m - CplxMat::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

double Tensor3::max_abs() const {
  double best = 0.0;
  for (double v : data) best = std::max(best, std::abs(v));
  return best;
}

double Tensor3::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = (*this)(i, j, k);
        worst = std::max({worst, std::abs(v - (*this)(j, i, k)), std::abs(v - (*this)(i, k, j)),
                          std::abs(v - (*this)(k, j, i))});
      }
  return worst;
}

RealMat SpectralClusters::reconstruct() const {
  const auto n = basis.rows();
  RealMat out = RealMat::Zero(n, n);
  for (int k = 0; k < count(); ++k) out += values[k] * projector(k);
  return out;
}

SpectralClusters eig_sym(const RealMat& m, double cluster_tol) {
  if (!is_symmetric(m, 1e-12))
    throw InputError("eig_sym: matrix is not symmetric");
  if (!(cluster_tol > 0.0)) throw InputError("eig_sym: cluster_tol must be positive");
  const RealMat sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<RealMat> es(sym);
  if (es.info() != Eigen::Success) throw InputError("eig_sym: eigensolver failed");

  const int n = static_cast<int>(m.rows());
  SpectralClusters out;
  out.cluster_tol = cluster_tol;
  out.basis.resize(n, n);
  // Eigen returns ascending order; flip.
  for (int i = 0; i < n; ++i) {
    out.eigenvalues.push_back(es.eigenvalues()(n - 1 - i));
    out.basis.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  std::ostringstream warn;
  for (int i = 0; i < n; ++i) {
    const bool fresh = i == 0 || (out.eigenvalues[i - 1] - out.eigenvalues[i]) >= cluster_tol;
    if (i > 0) {
      const double gap = out.eigenvalues[i - 1] - out.eigenvalues[i];
      if (gap >= cluster_tol && gap < 10.0 * cluster_tol) {
        out.ambiguous = true;
        warn << "eigenvalue gap " << gap << " between " << out.eigenvalues[i] << " and "
             << out.eigenvalues[i - 1] << " is within [tol, 10 tol); ";
      }
    }
    if (fresh) {
      out.offsets.push_back(i);
      out.multiplicities.push_back(1);
      out.values.push_back(out.eigenvalues[i]);
    } else {
      auto& mult = out.multiplicities.back();
      out.values.back() = (out.values.back() * mult + out.eigenvalues[i]) / (mult + 1);
      ++mult;
    }
  }
  out.warning = warn.str();
  return out;
}

void StepPolicy::validate() const {
  if (order != 2) throw InputError("StepPolicy: only central differences (order 2) are supported");
  if (!(base_step >= 1e-8 && base_step <= 1e-2))
    throw InputError("StepPolicy: base_step must lie in [1e-8, 1e-2]");
}

double subspace_sin_angle(const RealMat& a, const RealMat& b) {
  if (a.rows() != b.rows()) throw InputError("subspace_sin_angle: dimension mismatch");
  if (a.cols() == 0 && b.cols() == 0) return 0.0;
  if (a.cols() != b.cols()) return 1.0;
  RealMat r = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<RealMat> svd(r);
  return svd.singularValues()(0);
}

}  // namespace isogeo::numkit
