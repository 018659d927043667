#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sl3cv/poisson.hpp"
#include "sl3cv/trace_oracle.hpp"

using namespace sl3cv;

TEST_CASE("pants bi-vector: only the glued coordinates interact") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);

  std::vector<BiVector::PairKey> keys;
  for (const auto& [k, v] : pants.pairs())
    if (!v.is_zero()) keys.push_back(k);
  CHECK(keys == std::vector<BiVector::PairKey>{{6, 7}, {6, 8}, {7, 8}});

  RingElement expect =
      ring.reduce(ring.P() - Poly::variable(var(5)).scaled(Rational(2)));
  CHECK(pants.coefficient(var(4), var(-4)) == expect);
  CHECK(pants.coefficient(var(-4), var(4)) == -expect);
  CHECK(pants.coefficient(var(1), var(2)).is_zero());
  CHECK(pants.coefficient(var(4), var(4)).is_zero());

  for (int v : {1, -1, 2, -2, 3, -3})
    CHECK(casimir_check(ring, pants, ring.generator(var(v))));
  CHECK(!casimir_check(ring, pants, ring.generator(var(4))));
}

TEST_CASE("torus bi-vector: 24 t(5)-free coefficients with the pinned entry") {
  CharRing ring;
  BiVector torus = build_bivector_torus(ring);

  int nonzero = 0;
  for (const auto& [k, v] : torus.pairs()) {
    if (v.is_zero()) continue;
    ++nonzero;
    CHECK(v.b().is_zero());
    CHECK(!v.a().contains(var(5)));
  }
  CHECK(nonzero == 24);

  // The swap-the-first-index image of the seed coefficient, transported to
  // the (t(-1), t(2)) direction pair with the group-term sign -1.
  Poly expected = -(Poly::variable(var(-4)) -
                    (Poly::variable(var(-1)) * Poly::variable(var(2))).scaled(Rational(1, 3)));
  CHECK(torus.coefficient(var(-1), var(2)) == ring.reduce(expected));

  CHECK(casimir_check(ring, torus, ring.generator(var(5))));
  CHECK(casimir_check(ring, torus, ring.reduce(ring.P() - Poly::variable(var(5)))));
  CHECK(!casimir_check(ring, torus, ring.generator(var(1))));
}

TEST_CASE("bracket axioms hold exactly on sample triples") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);

  RingElement f = ring.generator(var(4));
  RingElement g = ring.generator(var(-4));
  RingElement h = ring.generator(var(5));

  for (const BiVector* biv : {&pants, &torus}) {
    CHECK((bracket(ring, *biv, f, g) + bracket(ring, *biv, g, f)).is_zero());
    RingElement leibniz = bracket(ring, *biv, f, ring.ring_mul(g, h)) -
                          ring.ring_mul(bracket(ring, *biv, f, g), h) -
                          ring.ring_mul(g, bracket(ring, *biv, f, h));
    CHECK(leibniz.is_zero());
    CHECK(jacobi_defect(ring, *biv, f, g, h).is_zero());
    // the relation is central, so the bracket descends to the quotient
    CHECK(bracket(ring, *biv, ring.relation(), Poly::variable(var(4))).is_zero());
    CHECK(bracket(ring, *biv, ring.relation(), Poly::variable(var(5))).is_zero());
  }
}

TEST_CASE("coefficient matrices are antisymmetric with even rank") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);
  CharacterPoint pt = sample_character_point(ring, 11, 0);

  for (const BiVector* biv : {&pants, &torus}) {
    Eigen::MatrixXcd m = biv->matrix_at(pt.coords);
    CHECK((m + m.transpose()).norm() == doctest::Approx(0.0));
  }
  CHECK(bivector_rank_at(pants, pt.coords, 1e-8) == 2);
  CHECK(bivector_rank_at(torus, pt.coords, 1e-8) == 6);
}
