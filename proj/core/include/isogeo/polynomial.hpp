#pragma once

#include <vector>

#include <Eigen/Dense>

namespace isogeo::models {

struct Monomial {
  double coeff = 0.0;
  std::vector<int> exponents;
};

// Polynomial on R^dim stored as a monomial list; derivatives are exact.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int dim, std::vector<Monomial> terms);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_homogeneous() const { return homogeneous_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  template <class S>
  S value(const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const;
  template <class S>
  Eigen::Matrix<S, Eigen::Dynamic, 1> gradient(const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const;
  template <class S>
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> hessian(const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const;

 private:
  template <class S>
  static S ipow(S base, int e) {
    S r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }

  int dim_ = 0;
  int degree_ = 0;
  bool homogeneous_ = true;
  std::vector<Monomial> terms_;
};

template <class S>
S Polynomial::value(const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const {
  S total(0);
  for (const auto& t : terms_) {
    S v = static_cast<S>(t.coeff);
    for (int i = 0; i < dim_; ++i)
      if (t.exponents[i]) v *= ipow(x(i), t.exponents[i]);
    total += v;
  }
  return total;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, 1> Polynomial::gradient(const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const {
  Eigen::Matrix<S, Eigen::Dynamic, 1> g = Eigen::Matrix<S, Eigen::Dynamic, 1>::Zero(dim_);
  for (const auto& t : terms_) {
    for (int a = 0; a < dim_; ++a) {
      if (!t.exponents[a]) continue;
      S v = static_cast<S>(t.coeff) * S(t.exponents[a]);
      for (int i = 0; i < dim_; ++i) {
        const int e = t.exponents[i] - (i == a ? 1 : 0);
        if (e) v *= ipow(x(i), e);
      }
      g(a) += v;
    }
  }
  return g;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> Polynomial::hessian(
    const Eigen::Matrix<S, Eigen::Dynamic, 1>& x) const {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> h =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim_, dim_);
  for (const auto& t : terms_) {
    for (int a = 0; a < dim_; ++a) {
      if (!t.exponents[a]) continue;
      for (int b = a; b < dim_; ++b) {
        const int eb = t.exponents[b] - (a == b ? 1 : 0);
        if (eb <= 0) continue;
        S v = static_cast<S>(t.coeff) * S(t.exponents[a]) * S(eb);
        for (int i = 0; i < dim_; ++i) {
          const int e = t.exponents[i] - (i == a ? 1 : 0) - (i == b ? 1 : 0);
          if (e) v *= ipow(x(i), e);
        }
        h(a, b) += v;
        if (a != b) h(b, a) += v;
      }
    }
  }
  return h;
}

}  // namespace isogeo::models
