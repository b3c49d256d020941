#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "isogeo/errors.hpp"

namespace isogeo::numkit {

using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

// Extended precision used inside the finite-difference kernels.
using Real = long double;
using MatL = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecL = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using CplxL = std::complex<Real>;
using CMatL = Eigen::Matrix<CplxL, Eigen::Dynamic, Eigen::Dynamic>;

bool is_symmetric(const RealMat& m, double rel_tol = 1e-12);
bool is_unitary(const CplxMat& m, double tol = 1e-10);

// Dense n x n x n array, row-major in (i, j, k).
struct Tensor3 {
  int n = 0;
  std::vector<double> data;

  Tensor3() = default;
  explicit Tensor3(int dim) : n(dim), data(static_cast<size_t>(dim) * dim * dim, 0.0) {}
  double& operator()(int i, int j, int k) { return data[(static_cast<size_t>(i) * n + j) * n + k]; }
  double operator()(int i, int j, int k) const { return data[(static_cast<size_t>(i) * n + j) * n + k]; }

  // Contraction with three coordinate vectors (real or complex).
  template <class V>
  auto eval(const V& x, const V& y, const V& z) const {
    using S = typename V::Scalar;
    S acc(0);
    for (int i = 0; i < n; ++i) {
      if (x(i) == S(0)) continue;
      for (int j = 0; j < n; ++j) {
        if (y(j) == S(0)) continue;
        S xy = x(i) * y(j);
        for (int k = 0; k < n; ++k) acc += xy * (*this)(i, j, k) * z(k);
      }
    }
    return acc;
  }

  double max_abs() const;
  // max over index permutations of |T_ijk - T_perm|
  double symmetry_defect() const;
};

// Kulkarni-Nomizu product of two symmetric bilinear forms, given as matrices
// with h(X, Y) = X^T h Y. Complex forms are allowed (bilinear, not hermitian).
template <class M1, class M2, class V>
auto kn_sym(const M1& h1, const M2& h2, const V& X, const V& Y, const V& Z, const V& W) {
  const auto n = X.size();
  if (h1.rows() != n || h1.cols() != n || h2.rows() != n || h2.cols() != n || Y.size() != n ||
      Z.size() != n || W.size() != n)
    throw InputError("kn_sym: dimension mismatch");
  auto f1 = [&](const V& a, const V& b) { return (a.transpose() * h1 * b).value(); };
  auto f2 = [&](const V& a, const V& b) { return (a.transpose() * h2 * b).value(); };
  return 0.5 * (f1(X, W) * f2(Y, Z) + f2(X, W) * f1(Y, Z) - f1(X, Z) * f2(Y, W) - f2(X, Z) * f1(Y, W));
}

template <class M, class V>
auto kn_skew(const M& w, const V& X, const V& Y, const V& Z, const V& W) {
  const auto n = X.size();
  if (w.rows() != n || w.cols() != n || Y.size() != n || Z.size() != n || W.size() != n)
    throw InputError("kn_skew: dimension mismatch");
  auto f = [&](const V& a, const V& b) { return (a.transpose() * w * b).value(); };
  return f(X, W) * f(Y, Z) - f(X, Z) * f(Y, W) - 2.0 * f(X, Y) * f(Z, W);
}

struct SpectralClusters {
  std::vector<double> values;      // descending
  std::vector<int> multiplicities;
  RealMat basis;                   // columns grouped by cluster, same order as values
  std::vector<int> offsets;        // first column of each cluster
  std::vector<double> eigenvalues; // all eigenvalues, descending
  double cluster_tol = 1e-6;
  bool ambiguous = false;
  std::string warning;

  int count() const { return static_cast<int>(values.size()); }
  RealMat cluster_basis(int k) const { return basis.middleCols(offsets[k], multiplicities[k]); }
  RealMat projector(int k) const {
    RealMat b = cluster_basis(k);
    return b * b.transpose();
  }
  RealMat reconstruct() const;
};

SpectralClusters eig_sym(const RealMat& m, double cluster_tol = 1e-6);

// Central differences; the stencil uses t0 +- h and t0 +- 2h.
struct StepPolicy {
  int order = 2;
  double base_step = 1e-5;
  bool richardson = true;
  bool scale_with_t = true;

  void validate() const;
  double step(double t0) const { return scale_with_t ? base_step * (1.0 + std::abs(t0)) : base_step; }

  static StepPolicy first_derivative() { return {}; }
  static StepPolicy nested() { return {2, 1e-3, true, false}; }
};

template <class T>
struct FdResult {
  T value;
  double error;
};

namespace detail {
template <class T>
double fd_norm(const T& v) {
  if constexpr (std::is_arithmetic_v<T>) {
    return static_cast<double>(std::abs(v));
  } else if constexpr (std::is_same_v<T, std::complex<double>> || std::is_same_v<T, CplxL>) {
    return static_cast<double>(std::abs(v));
  } else {
    return v.size() == 0 ? 0.0 : static_cast<double>(v.cwiseAbs().maxCoeff());
  }
}
}  // namespace detail

template <class F, class S>
auto fd_dir(F&& f, S t0, const StepPolicy& policy) {
  using T = std::decay_t<decltype(f(t0))>;
  policy.validate();
  const S h = static_cast<S>(policy.step(static_cast<double>(t0)));
  auto eval = [&](S t) -> T {
    try {
      return f(t);
    } catch (const std::exception& e) {
      throw StencilError("fd_dir: evaluation failed at stencil point t=" +
                         std::to_string(static_cast<double>(t)) + " (t0=" +
                         std::to_string(static_cast<double>(t0)) + "): " + e.what());
    }
  };
  T d1 = (eval(t0 + h) - eval(t0 - h)) / (S(2) * h);
  T d2 = (eval(t0 + S(2) * h) - eval(t0 - S(2) * h)) / (S(4) * h);
  T diff = d1 - d2;
  double err = detail::fd_norm(diff) / 3.0;
  if (!policy.richardson) return FdResult<T>{T(d1), err};
  T rich = d1 + diff / S(3);
  return FdResult<T>{T(rich), err};
}

// Principal angle metric between subspaces given by orthonormal column bases:
// ||(I - P_a) B||_2, i.e. the sine of the largest principal angle.
double subspace_sin_angle(const RealMat& a, const RealMat& b);

}  // namespace isogeo::numkit
