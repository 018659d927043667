#include "sl3cv/poisson.hpp"

#include <stdexcept>

#include "sl3cv/linalg.hpp"

namespace sl3cv {

void BiVector::accumulate(VarIndex i, VarIndex j, const RingElement& coeff) {
  if (i == j) throw std::invalid_argument("BiVector: wedge of a direction with itself");
  if (coeff.is_zero()) return;
  VarIndex a = i, b = j;
  RingElement c = coeff;
  if (b < a) {
    std::swap(a, b);
    c = -c;
  }
  PairKey key{a.slot(), b.slot()};
  auto it = pairs_.find(key);
  if (it == pairs_.end()) {
    pairs_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) pairs_.erase(it);
  }
}

RingElement BiVector::coefficient(VarIndex i, VarIndex j) const {
  if (i == j) return RingElement();
  VarIndex a = i, b = j;
  bool swapped = false;
  if (b < a) {
    std::swap(a, b);
    swapped = true;
  }
  auto it = pairs_.find(PairKey{a.slot(), b.slot()});
  if (it == pairs_.end()) return RingElement();
  return swapped ? -it->second : it->second;
}

Eigen::MatrixXcd BiVector::matrix_at(const Point9& point) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(VarIndex::kCount, VarIndex::kCount);
  for (const auto& [key, coeff] : pairs_) {
    Complex value = coeff.eval(point);
    m(key.first, key.second) = value;
    m(key.second, key.first) = -value;
  }
  return m;
}

void accumulate_wedge_orbit(BiVector& out, const CharRing& ring, const GroupRingElement& s,
                            VarIndex i, VarIndex j, const RingElement& coeff) {
  for (const auto& term : s.terms()) {
    const D4Element& g = term.element;
    out.accumulate(g.apply(i), g.apply(j), ring.d4_apply(g, coeff).scaled(term.coeff));
  }
}

BiVector build_bivector_pants(const CharRing& ring) {
  const D4Group& grp = ring.group();
  BiVector v;

  // {t(4), t(-4)} = P - 2 t(5).
  v.accumulate(var(4), var(-4), ring.reduce(ring.P() - Poly(2) * Poly::variable(var(5))));

  // The (t(4), t(5)) coefficient is the t(-4)-partial of Q - t(5) P; the
  // (t(-4), t(5)) one is its image under inverting both generators, with the
  // opposite orientation; both arise from one wedge orbit under e - i12.
  RingElement a45(ring.Q().partial(var(-4)), -ring.P().partial(var(-4)));
  GroupRingElement orbit;
  orbit.add(Rational(1), grp.identity()).add(Rational(-1), grp.inv_both());
  accumulate_wedge_orbit(v, ring, orbit, var(4), var(5), a45);
  return v;
}

BiVector build_bivector_torus(const CharRing& ring) {
  const D4Group& grp = ring.group();
  const Rational third(1, 3);

  auto tp = [](int v) { return Poly::variable(var(v)); };
  Poly a12 = tp(3) - (tp(1) * tp(2)).scaled(third);
  Poly a13 = (tp(1) * tp(3)).scaled(Rational(2, 3)) - tp(-1) * tp(2) + tp(-4);
  Poly a1m3 = -tp(-2) + (tp(1) * tp(-3)).scaled(third);
  Poly a34 = -(tp(1) * tp(1)) + tp(-1) - tp(-4) * tp(-2) - tp(2) * tp(-3) +
             tp(-1) * tp(2) * tp(-2) - (tp(3) * tp(4)).scaled(third);

  GroupRingElement sigma1;
  sigma1.add(Rational(1), grp.identity())
      .add(Rational(1), grp.inv_both())
      .add(Rational(-1), grp.inv_first())
      .add(Rational(-1), grp.inv_second());
  GroupRingElement sigma2;
  sigma2.add(Rational(1), grp.identity())
      .add(Rational(1), grp.inv_both())
      .add(Rational(-1), grp.swap_gens())
      .add(Rational(-1), grp.compose(grp.inv_both(), grp.swap_gens()));
  GroupRingElement mixed =
      sigma1.multiplied(sigma2, grp).scaled(Rational(1, 2)).collected(grp);

  BiVector v;
  accumulate_wedge_orbit(v, ring, sigma1, var(1), var(2), ring.reduce(a12));
  accumulate_wedge_orbit(v, ring, sigma2, var(3), var(4), ring.reduce(a34));
  accumulate_wedge_orbit(v, ring, mixed, var(1), var(3), ring.reduce(a13));
  accumulate_wedge_orbit(v, ring, mixed, var(1), var(-3), ring.reduce(a1m3));
  return v;
}

RingElement bracket(const CharRing& ring, const BiVector& v, const RingElement& f,
                    const RingElement& g) {
  return bracket(ring, v, f.lift(), g.lift());
}

RingElement bracket(const CharRing& ring, const BiVector& v, const Poly& f, const Poly& g) {
  Poly acc;
  for (const auto& [key, coeff] : v.pairs()) {
    VarIndex i = VarIndex::at_slot(key.first), j = VarIndex::at_slot(key.second);
    acc += coeff.lift() * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
  }
  return ring.reduce(acc);
}

bool casimir_check(const CharRing& ring, const BiVector& v, const RingElement& f) {
  for (VarIndex t : VarIndex::all())
    if (!bracket(ring, v, f, ring.generator(t)).is_zero()) return false;
  return true;
}

RingElement jacobi_defect(const CharRing& ring, const BiVector& v, const RingElement& f,
                          const RingElement& g, const RingElement& h) {
  return bracket(ring, v, f, bracket(ring, v, g, h)) +
         bracket(ring, v, g, bracket(ring, v, h, f)) +
         bracket(ring, v, h, bracket(ring, v, f, g));
}

int bivector_rank_at(const BiVector& v, const Point9& point, double tol) {
  return numeric_rank(v.matrix_at(point), tol);
}

}  // namespace sl3cv
