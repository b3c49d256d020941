#include <doctest.h>

#include <cmath>
#include <complex>

#include "isogeo/errors.hpp"
#include "isogeo/exact.hpp"

using namespace isogeo;
using namespace isogeo::exact;

TEST_CASE("surd parsing and rendering round trip") {
  for (const char* s : {"sqrt(3/2)", "-2*sqrt(3/2)", "1/3", "-sqrt(6)/2", "sqrt(2)", "1/sqrt(6)", "sqrt(2)/3"}) {
    Surd v = Surd::parse(s);
    CHECK(Surd::parse(v.to_string()) == v);
  }
  CHECK(Surd::parse("sqrt(3/2)").to_string() == "sqrt(3/2)");
  CHECK(Surd::parse("-2*sqrt(3/2)").to_string() == "-2*sqrt(3/2)");
  CHECK(Surd::parse("sqrt(3/2)") == Surd(0, 0, 0, Rational(1, 2)));
  CHECK(std::abs(Surd::parse("-sqrt(6)/2").to_double() + std::sqrt(6.0) / 2) < 1e-15);
  CHECK_THROWS_AS(Surd::parse("sqrt(5)"), InputError);
  CHECK_THROWS_AS(Surd::parse("abc"), InputError);
}

TEST_CASE("surd field arithmetic") {
  const Surd r2 = Surd::sqrt2(), r3 = Surd::sqrt3();
  CHECK(r2 * r3 == Surd::sqrt6());
  CHECK(r2 * r2 == Surd(2));
  Surd x = Surd(1) + r2 + r3;
  CHECK(x * x.inverse() == Surd(1));
  CHECK(std::abs((x / (r3 - Surd(1))).to_double() - (1 + std::sqrt(2.0) + std::sqrt(3.0)) / (std::sqrt(3.0) - 1)) < 1e-14);
  CHECK(Surd::sqrt_of(Rational(3, 2)) == Surd::parse("sqrt(3/2)"));
  CHECK(Surd::sqrt_of(Rational(9, 4)) == Surd(Rational(3, 2)));
  CHECK_THROWS(Surd().inverse());
}

TEST_CASE("twelfth-of-pi tables against the floating point trig functions") {
  for (int k = -23; k <= 23; ++k) {
    const long double a = k * 3.14159265358979323846264338327950288L / 12;
    const auto w = omega_pow(k);
    CHECK(std::abs(w.re.to_double() - std::cos(2 * static_cast<double>(a))) < 1e-14);
    CHECK(std::abs(w.im.to_double() - std::sin(2 * static_cast<double>(a))) < 1e-14);
    CHECK(std::abs(sqrt2_sin_pi12(k).to_long_double() - std::sqrt(2.0L) * std::sin(a)) < 1e-15L);
    if (k % 12 == 0) {
      CHECK_THROWS_AS(cot_pi12(k), UndefinedEntryError);
    } else {
      CHECK(std::abs(cot_pi12(k).to_long_double() - 1 / std::tan(a)) < 1e-14L);
    }
  }
}

TEST_CASE("exact complex products") {
  ExactComplex i{Surd(0), Surd(1)};
  CHECK(i * i == ExactComplex(Surd(-1)));
  ExactComplex acc;
  for (int j = 0; j < 12; ++j) acc += omega_pow(j);
  CHECK(acc.is_zero());
  CHECK(omega_pow(3) == i);
  CHECK(omega_pow(1).conj() == omega_pow(-1));
}
