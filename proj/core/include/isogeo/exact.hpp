#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace isogeo::exact {

using Rational = boost::rational<std::int64_t>;

// Element a + b sqrt2 + c sqrt3 + d sqrt6 of Q(sqrt2, sqrt3).
class Surd {
 public:
  Surd() = default;
  Surd(Rational a) : a_(a) {}  // NOLINT: implicit from rationals is intended
  Surd(std::int64_t a) : a_(a) {}  // NOLINT
  Surd(Rational a, Rational b, Rational c, Rational d) : a_(a), b_(b), c_(c), d_(d) {}

  static Surd sqrt2() { return {0, 1, 0, 0}; }
  static Surd sqrt3() { return {0, 0, 1, 0}; }
  static Surd sqrt6() { return {0, 0, 0, 1}; }
  // sqrt(p/q) for rationals whose square-free part lies in {1, 2, 3, 6}
  static Surd sqrt_of(Rational r);

  // Parses expressions such as "sqrt(3/2)", "-2*sqrt(3/2)", "1/3", "-sqrt(6)/2".
  static Surd parse(const std::string& text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == Rational(0) && b_ == Rational(0) && c_ == Rational(0) && d_ == Rational(0); }
  double to_double() const;
  long double to_long_double() const;
  // Canonical rendering; multiples of sqrt(3/2) come out as "k*sqrt(3/2)".
  std::string to_string() const;

  Surd operator-() const { return {-a_, -b_, -c_, -d_}; }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }
  Surd inverse() const;

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

// Complex numbers with both parts in Q(sqrt2, sqrt3).
struct ExactComplex {
  Surd re, im;

  ExactComplex() = default;
  ExactComplex(Surd r, Surd i = Surd()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ExactComplex conj() const { return {re, -im}; }
  friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) { return {x.re + y.re, x.im + y.im}; }
  friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) { return {x.re - y.re, x.im - y.im}; }
  friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const ExactComplex& x, const ExactComplex& y) { return x.re == y.re && x.im == y.im; }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
};

// exp(i k pi / 6)
ExactComplex omega_pow(int k);
// cot(k pi / 12); throws UndefinedEntryError when k is a multiple of 12
Surd cot_pi12(int k);
// sin(k pi / 12) * sqrt(2); all values lie in Q(sqrt3)
Surd sqrt2_sin_pi12(int k);

}  // namespace isogeo::exact
