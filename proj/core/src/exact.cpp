#include "isogeo/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "isogeo/errors.hpp"

namespace isogeo::exact {

namespace {

long double rat_ld(const Rational& r) {
  return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

// p + q sqrt2
struct Q2 {
  Rational p, q;
};
Q2 mul(const Q2& x, const Q2& y) { return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p}; }
Q2 sub(const Q2& x, const Q2& y) { return {x.p - y.p, x.q - y.q}; }
Q2 inv(const Q2& x) {
  Rational n = x.p * x.p - 2 * x.q * x.q;
  if (n == Rational(0)) throw InputError("Surd: division by zero");
  return {x.p / n, -x.q / n};
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Surd run() {
    Surd v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse surd expression '" + s_ + "': " + why);
  }
  Surd expr() {
    Surd v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Surd term() {
    Surd v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) {
        Surd d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  Surd factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      Surd v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip();
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      Surd arg = expr();
      if (!eat(')')) fail("missing ')'");
      if (arg.b() != Rational(0) || arg.c() != Rational(0) || arg.d() != Rational(0)) fail("sqrt of an irrational argument");
      return Surd::sqrt_of(arg.a());
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      return Surd(v);
    }
    fail("unexpected token");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Surd Surd::sqrt_of(Rational r) {
  if (r < Rational(0)) throw InputError("Surd::sqrt_of: negative argument");
  if (r == Rational(0)) return Surd();
  std::int64_t m = r.numerator() * r.denominator();
  std::int64_t square = 1, free = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      square *= p;
      m /= p * p;
    }
    if (m % p == 0) {
      free *= p;
      m /= p;
    }
  }
  free *= m;
  Rational coeff(square, r.denominator());
  switch (free) {
    case 1: return Surd(coeff);
    case 2: return {0, coeff, 0, 0};
    case 3: return {0, 0, coeff, 0};
    case 6: return {0, 0, 0, coeff};
    default:
      throw InputError("Surd::sqrt_of: sqrt(" + rat_str(r) + ") is outside Q(sqrt2, sqrt3)");
  }
}

Surd Surd::parse(const std::string& text) { return Parser(text).run(); }

Surd& Surd::operator+=(const Surd& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  // basis products: s2*s2 = 2, s3*s3 = 3, s6*s6 = 6, s2*s3 = s6, s2*s6 = 2 s3, s3*s6 = 3 s2
  const Rational a = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
  const Rational b = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
  const Rational c = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
  const Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = a;
  b_ = b;
  c_ = c;
  d_ = d;
  return *this;
}

Surd Surd::inverse() const {
  if (is_zero()) throw InputError("Surd: division by zero");
  // x = p + q sqrt3 with p, q in Q(sqrt2)
  const Q2 p{a_, b_}, q{c_, d_};
  Q2 n = sub(mul(p, p), mul(Q2{3, 0}, mul(q, q)));
  Q2 ni = inv(n);
  Q2 rp = mul(p, ni), rq = mul(Q2{-q.p, -q.q}, ni);
  return {rp.p, rp.q, rq.p, rq.q};
}

long double Surd::to_long_double() const {
  return rat_ld(a_) + rat_ld(b_) * std::sqrt(2.0L) + rat_ld(c_) * std::sqrt(3.0L) +
         rat_ld(d_) * std::sqrt(6.0L);
}

double Surd::to_double() const { return static_cast<double>(to_long_double()); }

std::string Surd::to_string() const {
  if (is_zero()) return "0";
  if (a_ == Rational(0) && b_ == Rational(0) && c_ == Rational(0)) {
    const Rational k = 2 * d_;  // d sqrt6 = 2d sqrt(3/2)
    if (k.denominator() == 1) {
      if (k == Rational(1)) return "sqrt(3/2)";
      if (k == Rational(-1)) return "-sqrt(3/2)";
      return std::to_string(k.numerator()) + "*sqrt(3/2)";
    }
  }
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& r, const char* root) {
    if (r == Rational(0)) return;
    Rational v = r;
    if (!first) {
      os << (v < Rational(0) ? " - " : " + ");
      if (v < Rational(0)) v = -v;
    } else if (v < Rational(0)) {
      os << "-";
      v = -v;
    }
    first = false;
    if (!root) {
      os << rat_str(v);
    } else if (v == Rational(1)) {
      os << root;
    } else {
      os << rat_str(v) << "*" << root;
    }
  };
  emit(a_, nullptr);
  emit(b_, "sqrt(2)");
  emit(c_, "sqrt(3)");
  emit(d_, "sqrt(6)");
  return os.str();
}

namespace {
Surd sin_pi12(int k) {
  k %= 24;
  if (k < 0) k += 24;
  if (k >= 12) return -sin_pi12(k - 12);
  if (k > 6) k = 12 - k;
  switch (k) {
    case 0: return Surd();
    case 1: return {0, Rational(-1, 4), 0, Rational(1, 4)};
    case 2: return Surd(Rational(1, 2));
    case 3: return {0, Rational(1, 2), 0, 0};
    case 4: return {0, 0, Rational(1, 2), 0};
    case 5: return {0, Rational(1, 4), 0, Rational(1, 4)};
    default: return Surd(1);
  }
}
Surd cos_pi12(int k) { return sin_pi12(6 - k); }
}  // namespace

ExactComplex omega_pow(int k) { return {cos_pi12(2 * k), sin_pi12(2 * k)}; }

Surd cot_pi12(int k) {
  Surd s = sin_pi12(k);
  if (s.is_zero()) throw UndefinedEntryError("cot(k pi/12) undefined for k=" + std::to_string(k));
  return cos_pi12(k) / s;
}

Surd sqrt2_sin_pi12(int k) { return Surd::sqrt2() * sin_pi12(k); }

}  // namespace isogeo::exact
