#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "sl3cv/gluing.hpp"

using namespace sl3cv;

TEST_CASE("the certifying words come from the generator substitution") {
  CHECK(qstar_word(var(1)).str() == "a");
  CHECK(qstar_word(var(2)).str() == "bAB");
  CHECK(qstar_word(var(3)).str() == "abAB");
  CHECK(qstar_word(var(-3)).str() == "AbaB");
  CHECK(qstar_word(var(4)).str() == "abaB");
  CHECK(qstar_word(var(-4)).str() == "AbAB");
  CHECK(qstar_word(var(5)).str() == "abABAbaB");
}

TEST_CASE("the bundled image table certifies and has the structural images") {
  CharRing ring;
  QStarTable table = build_qstar(ring);
  CHECK(table.certification_residual <= 1e-8);

  CHECK(table.image(var(1)) == ring.generator(var(1)));
  CHECK(table.image(var(-1)) == ring.generator(var(-1)));
  CHECK(table.image(var(2)) == ring.generator(var(-1)));
  CHECK(table.image(var(-2)) == ring.generator(var(1)));
  CHECK(table.image(var(3)) == ring.generator(var(5)));
  CHECK(table.image(var(-3)) == ring.reduce(ring.P() - Poly::variable(var(5))));
  CHECK(!table.image(var(4)).a().contains(var(5)));
  CHECK(table.image(var(4)).b().is_zero());
  CHECK(table.image(var(5)).lift().term_count() == 41);
}

TEST_CASE("q* is a ring endomorphism killing the relation") {
  CharRing ring;
  QStarTable table = build_qstar(ring);

  Poly t3m3 = Poly::variable(var(3)) * Poly::variable(var(-3));
  CHECK(apply_qstar_poly(ring, table, t3m3) == ring.reduce(ring.Q()));
  CHECK(apply_qstar_poly(ring, table, ring.relation()).is_zero());

  RingElement f = ring.reduce(Poly::variable(var(4)) + Poly::variable(var(5)));
  RingElement g = ring.generator(var(-4));
  CHECK(apply_qstar(ring, table, ring.ring_mul(f, g)) ==
        ring.ring_mul(apply_qstar(ring, table, f), apply_qstar(ring, table, g)));
}

TEST_CASE("the anti-Poisson sign is uniform on a spot-checked pair") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);
  QStarTable table = build_qstar(ring);

  RingElement lhs =
      bracket(ring, torus, table.image(var(4)), table.image(var(-4)));
  RingElement rhs = apply_qstar(
      ring, table, bracket(ring, pants, ring.generator(var(4)), ring.generator(var(-4))));
  CHECK((lhs + rhs).is_zero());
  CHECK(!(lhs - rhs).is_zero());
}

TEST_CASE("fixture validation rejects broken tables") {
  CharRing ring;
  // missing images
  CHECK_THROWS_AS(build_qstar(ring, "t(1) -> t(1)\n", 10, 0, 1e-8), std::runtime_error);
  // flip one sign in the t(4) image: still parses, fails certification
  std::string text(embedded_qstar_fixture());
  std::string needle = "t(4) -> -";
  auto at = text.find(needle);
  REQUIRE(at != std::string::npos);
  std::string corrupted = text.substr(0, at) + "t(4) -> " + text.substr(at + needle.size());
  CHECK_THROWS_WITH_AS(build_qstar(ring, corrupted, 10, 0, 1e-8),
                       doctest::Contains("t(4)"), std::runtime_error);
}

TEST_CASE("the restricted bi-vector drops rank to 2") {
  CharRing ring;
  BiVector torus = build_bivector_torus(ring);
  QStarTable table = build_qstar(ring);
  RestrictedBiVector restricted = build_restricted_bivector(ring, torus, table);

  CharacterPoint pt = sample_character_point(ring, 19, 2);
  CHECK(restricted_bivector_rank(restricted, pt.coords, 1e-8) == 2);
  // {q* t4, q* t-4} is generically nonzero while the whole 3x3 is degenerate
  CHECK(!restricted.a.is_zero());
}
