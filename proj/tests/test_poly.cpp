#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sl3cv/poly.hpp"

using namespace sl3cv;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational half(1, 2), third(1, 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(-3, -6) == half);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK((half * third) == Rational(1, 6));
  CHECK((half - half).is_zero());
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(7, 2).sign() == 1);
  CHECK(Rational(-7, 2).sign() == -1);
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(6, 2).is_integer());
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("coordinate indices and partners") {
  CHECK(var(1).slot() == 0);
  CHECK(var(-1).slot() == 1);
  CHECK(var(5).slot() == 8);
  CHECK(var(4).partner() == var(-4));
  CHECK(var(-2).partner() == var(2));
  CHECK(!var(5).has_partner());
  CHECK_THROWS_AS(var(0), std::invalid_argument);
  CHECK_THROWS_AS(var(6), std::invalid_argument);
  CHECK_THROWS_AS(var(-5), std::invalid_argument);
  CHECK(var(-3).str() == "t(-3)");
  CHECK(VarIndex::at_slot(4) == var(3));
  CHECK(VarIndex::all().size() == 9);
}

TEST_CASE("monomial order: degree first, then slot-lex with larger powers first") {
  Monomial one;
  Monomial t1 = Monomial::power(var(1), 1);
  Monomial t1sq = Monomial::power(var(1), 2);
  Monomial t1t1m = t1 * Monomial::power(var(-1), 1);
  CHECK(Monomial::compare(t1sq, t1) < 0);
  CHECK(Monomial::compare(t1sq, t1t1m) < 0);  // t(1)^2 before t(1)*t(-1)
  CHECK(Monomial::compare(t1, one) < 0);
  CHECK(Monomial::compare(t1, t1) == 0);
  CHECK(t1sq.degree() == 2);
  CHECK((t1 * t1) == t1sq);
  CHECK(t1t1m.str() == "t(1)*t(-1)");
  CHECK(one.str() == "1");
  CHECK(one.is_constant());
}

TEST_CASE("polynomial arithmetic and printing") {
  Poly t1 = Poly::variable(var(1));
  Poly t2 = Poly::variable(var(2));

  Poly p = (t1 + t2).pow(2);
  CHECK(p.term_count() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(Monomial::power(var(1), 1) * Monomial::power(var(2), 1)) == Rational(2));
  CHECK(p.str() == "t(1)^2 + 2 * t(1)*t(2) + t(2)^2");

  CHECK((t1 - t1).is_zero());
  CHECK(Poly(0).str() == "0");
  CHECK(Poly(0).degree() == -1);
  CHECK((-t1 + Poly(Rational(1, 3))).str() == "-t(1) + 1/3");
  CHECK(t2.scaled(Rational(-1, 3)).str() == "-1/3 * t(2)");
}

TEST_CASE("partials, variable degrees, and coefficient extraction") {
  Poly t1 = Poly::variable(var(1));
  Poly t2 = Poly::variable(var(2));
  Poly q = t1 * t1 * t2;

  CHECK(q.partial(var(1)) == t1.scaled(Rational(2)) * t2);
  CHECK(q.partial(var(3)).is_zero());
  CHECK(q.degree_in(var(1)) == 2);
  CHECK(q.degree_in(var(2)) == 1);
  CHECK(q.contains(var(2)));
  CHECK(!q.contains(var(-4)));
  CHECK(q.coefficient_of(var(1), 2) == t2);
  CHECK(q.coefficient_of(var(1), 1).is_zero());
}

TEST_CASE("substitution and evaluation") {
  Poly t1 = Poly::variable(var(1));
  Poly t2 = Poly::variable(var(2));
  Poly q = t1 * t1 * t2;

  Poly::Substitution sub;
  sub[1] = t2 + Poly(1);
  sub[2] = t2;
  CHECK(q.substitute(sub) == (t2 + Poly(1)).pow(2) * t2);

  Point9 pt{};
  pt[0] = Complex(2.0, 0.0);
  pt[2] = Complex(0.0, 1.0);
  CHECK(q.eval(pt) == Complex(0.0, 4.0));

  std::array<Rational, VarIndex::kCount> rpt{};
  rpt[0] = Rational(3);
  rpt[2] = Rational(1, 2);
  CHECK(q.eval_exact(rpt) == Rational(9, 2));
}
