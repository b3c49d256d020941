#include "isogeo/polynomial.hpp"

#include <numeric>

#include "isogeo/errors.hpp"

namespace isogeo::models {

Polynomial::Polynomial(int dim, std::vector<Monomial> terms) : dim_(dim), terms_(std::move(terms)) {
  if (dim_ <= 0) throw InputError("Polynomial: dimension must be positive");
  bool first = true;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != dim_)
      throw InputError("Polynomial: monomial exponent list has wrong length");
    int deg = 0;
    for (int e : t.exponents) {
      if (e < 0) throw InputError("Polynomial: negative exponent");
      deg += e;
    }
    if (first) {
      degree_ = deg;
      first = false;
    } else if (deg != degree_) {
      homogeneous_ = false;
      degree_ = std::max(degree_, deg);
    }
  }
}

}  // namespace isogeo::models
