#pragma once
// Exact rational coefficients, backed by GMP's mpq layer. Values are kept
// canonical (lowest terms, positive denominator); zero is 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl3cv {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit for literal coefficients
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  // Accepts "p" or "p/q".
  static Rational from_string(const std::string& s) {
    Rational r;
    try {
      r.v_ = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const {
    Rational r = *this;
    if (sgn(r.v_) < 0) r.v_ = -r.v_;
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  double to_double() const { return v_.get_d(); }

  // "p" for integers, "p/q" otherwise; denominator always positive.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace sl3cv
