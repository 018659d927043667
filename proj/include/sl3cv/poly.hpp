#pragma once
// Sparse multivariate polynomials with exact rational coefficients in the
// nine trace coordinates t(1), t(-1), t(2), t(-2), t(3), t(-3), t(4), t(-4),
// t(5). This is the workhorse layer: everything symbolic in the project is
// ultimately a Poly or a pair of them.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "sl3cv/rational.hpp"

namespace sl3cv {

using Complex = std::complex<double>;

// A coordinate index. Admissible values are +-1..+-4 and +5 (the commutator
// trace has no inverse partner: tr of the inverse commutator is a polynomial
// in the other eight, which is exactly what the ring relation encodes).
// Storage slots run 1, -1, 2, -2, 3, -3, 4, -4, 5.
class VarIndex {
 public:
  static constexpr int kCount = 9;

  static VarIndex of(int value);     // throws std::invalid_argument
  static VarIndex at_slot(int slot);
  static const std::array<VarIndex, kCount>& all();

  int value() const { return value_; }
  int slot() const;
  bool has_partner() const { return value_ != 5; }
  VarIndex partner() const;  // t(i) <-> t(-i); throws for t(5)

  friend bool operator==(VarIndex a, VarIndex b) { return a.value_ == b.value_; }
  friend bool operator!=(VarIndex a, VarIndex b) { return a.value_ != b.value_; }
  friend bool operator<(VarIndex a, VarIndex b) { return a.slot() < b.slot(); }

  std::string str() const;  // "t(-3)"

 private:
  explicit VarIndex(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_;
};

// Shorthand used pervasively when spelling out formulas.
inline VarIndex var(int value) { return VarIndex::of(value); }

// An exponent vector over the nine coordinates. The empty monomial is 1.
class Monomial {
 public:
  Monomial() : e_{} {}

  static Monomial power(VarIndex v, unsigned e);

  unsigned exponent(VarIndex v) const { return e_[v.slot()]; }
  unsigned exponent_at_slot(int slot) const { return e_[slot]; }
  int degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const;

  // Graded order, ties broken lexicographically on the slot sequence with
  // larger exponents first, so t(1)^2 precedes t(1)*t(-1). Returns -1, 0, 1.
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string str() const;  // "t(1)^2*t(-2)", or "1" for the empty monomial

 private:
  std::array<std::uint16_t, VarIndex::kCount> e_;
};

// Strict weak order placing the leading term first in map iteration.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

// A numeric point: one complex value per coordinate, in slot order.
using Point9 = std::array<Complex, VarIndex::kCount>;

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;
  // Images of coordinate values (the map key is VarIndex::value()). Every
  // coordinate occurring in the polynomial must have an image.
  using Substitution = std::map<int, Poly>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: implicit constant embedding
  Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(VarIndex v);
  static Poly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;                // total degree; -1 for the zero polynomial
  int degree_in(VarIndex v) const;   // -1 for the zero polynomial
  bool contains(VarIndex v) const { return degree_in(v) > 0; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly partial(VarIndex v) const;
  // Coefficient of v^k as a polynomial in the remaining coordinates.
  Poly coefficient_of(VarIndex v, unsigned k) const;

  Poly substitute(const Substitution& images) const;

  Complex eval(const Point9& point) const;
  Rational eval_exact(const std::array<Rational, VarIndex::kCount>& point) const;

  // Canonical text form, e.g. "t(3) - 1/3 * t(1)*t(2)"; "0" when zero.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

}  // namespace sl3cv
