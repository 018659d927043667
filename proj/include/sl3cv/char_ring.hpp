#pragma once
// The coordinate ring of the SL(3,C) character variety of the rank-2 free
// group. Concretely: the polynomial ring in the nine trace coordinates
// modulo the single relation t(5)^2 - P*t(5) + Q, where P and Q are fixed
// polynomials in the first eight coordinates, together with the order-8
// dihedral symmetry generated by swapping the two group generators and
// inverting the first one.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sl3cv/poly.hpp"

namespace sl3cv {

// One symmetry of the coordinate system. The permutation part acts on the
// eight paired indices +-1..+-4; elements whose shortest expression in the
// two generators has odd length additionally rewrite t(5) -> P - t(5).
class D4Element {
 public:
  enum class Gen : std::uint8_t { SwapGens, InvFirst };

  VarIndex apply(VarIndex v) const {
    return v.value() == 5 ? v : VarIndex::at_slot(perm_[v.slot()]);
  }
  bool flips_t5() const { return flip_; }
  const std::string& name() const { return name_; }
  // Generator word realizing the element; rightmost factor acts first.
  const std::vector<Gen>& word() const { return word_; }

  friend bool operator==(const D4Element& a, const D4Element& b) {
    return a.perm_ == b.perm_ && a.flip_ == b.flip_;
  }
  friend bool operator!=(const D4Element& a, const D4Element& b) { return !(a == b); }

 private:
  friend class D4Group;
  std::array<std::int8_t, 8> perm_{};  // slot -> slot on the paired indices
  bool flip_ = false;
  std::string name_;
  std::vector<Gen> word_;
};

// The full symmetry group, built by closure from the two generators. Order 8.
class D4Group {
 public:
  D4Group();

  const std::vector<D4Element>& elements() const { return elements_; }

  const D4Element& identity() const { return elements_[0]; }
  const D4Element& swap_gens() const { return elements_[1]; }   // x1 <-> x2
  const D4Element& inv_first() const { return elements_[2]; }   // x1 -> x1^{-1}
  const D4Element& inv_second() const;
  const D4Element& inv_both() const;

  // Composition: apply h first, then g. Returns the canonical stored element.
  const D4Element& compose(const D4Element& g, const D4Element& h) const;
  const D4Element& canonical(const D4Element& g) const;
  int index_of(const D4Element& g) const;

 private:
  std::vector<D4Element> elements_;
};

// A formal rational-linear combination of symmetry-group elements, kept in
// the order written. Applying one to a ring element or to a wedge of
// coordinate directions distributes over the terms.
class GroupRingElement {
 public:
  struct Term {
    Rational coeff;
    D4Element element;
  };

  GroupRingElement() = default;
  GroupRingElement& add(const Rational& c, const D4Element& g) {
    terms_.push_back({c, g});
    return *this;
  }
  const std::vector<Term>& terms() const { return terms_; }

  GroupRingElement scaled(const Rational& c) const;

  // Convolution product (right factor applied first).
  GroupRingElement multiplied(const GroupRingElement& o, const D4Group& group) const;

  // Merge terms at equal group elements, drop zeros, order by the group's
  // element order. Mathematically a no-op for every application below.
  GroupRingElement collected(const D4Group& group) const;

 private:
  std::vector<Term> terms_;
};

// A residue a + b*t(5) of the quotient ring; a and b are t(5)-free.
class RingElement {
 public:
  RingElement() = default;
  RingElement(Poly a, Poly b);  // throws if either part involves t(5)

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  RingElement operator-() const { return RingElement(-a_, -b_); }
  RingElement& operator+=(const RingElement& o) { a_ += o.a_; b_ += o.b_; return *this; }
  RingElement& operator-=(const RingElement& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  RingElement scaled(const Rational& c) const { return RingElement(a_.scaled(c), b_.scaled(c)); }

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

  Poly lift() const;  // a + b*t(5) as a plain polynomial
  Complex eval(const Point9& point) const { return lift().eval(point); }
  std::string str() const { return lift().str(); }

 private:
  Poly a_, b_;
};

class CharRing {
 public:
  CharRing();

  const D4Group& group() const { return group_; }
  const Poly& P() const { return P_; }
  const Poly& Q() const { return Q_; }
  // t(5)^2 - P*t(5) + Q; the single defining equation of the variety.
  const Poly& relation() const { return relation_; }

  RingElement constant(const Rational& c) const { return RingElement(Poly(c), Poly()); }
  RingElement generator(VarIndex v) const;

  // Canonical residue of an arbitrary polynomial: rewrite every t(5)^n with
  // n >= 2 through t(5)^2 = P*t(5) - Q, top power first.
  RingElement reduce(const Poly& p) const;
  RingElement ring_mul(const RingElement& x, const RingElement& y) const;
  RingElement ring_pow(const RingElement& x, unsigned n) const;

  // Index action on a plain polynomial (t(5) -> P - t(5) for flipped g).
  Poly d4_apply_poly(const D4Element& g, const Poly& p) const;
  RingElement d4_apply(const D4Element& g, const RingElement& f) const;
  RingElement groupring_apply(const GroupRingElement& s, const RingElement& f) const;

  // |t(5)^2 - P*t(5) + Q| at the point, relative to 1 + |t(5)|^2.
  double relation_residual(const Point9& point) const;

  // Forgetting t(5) is 2-to-1 away from the branch locus P^2 = 4Q: the
  // result is the eight base coordinates plus the companion value P - t(5)
  // the other sheet would carry. Requires the relation to hold at the point.
  struct Projection {
    std::array<Complex, 8> base;
    Complex companion;
  };
  Projection branched_projection(const Point9& point, double tol = 1e-6) const;
  Complex discriminant(const Point9& point) const;  // P^2 - 4Q

 private:
  Poly symmetrized(const std::vector<std::pair<Rational, Poly>>&) const;

  D4Group group_;
  Poly P_, Q_, relation_;
};

}  // namespace sl3cv
