#include "doctest.h"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "support.hpp"
#include "error.hpp"

using namespace dvb;
using dvb::test::poly;
using dvb::test::q;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("poly_eval") {
  VarList x({"x"});
  VarList xy({"x1", "x2"});
  RatVec three{Rational(3)};
  CHECK(poly(x, "x^2").eval(three) == 9);
  CHECK(MultiPoly(x).eval(three) == 0);
  RatVec p13{Rational(1), Rational(3)};
  CHECK(poly(xy, "2*x1*x2 - 1/2").eval(p13) == Rational(11, 2));
  RatVec bad{Rational(1)};
  CHECK_THROWS_AS(poly(xy, "x1").eval(bad), Error);
}

TEST_CASE("poly_partial") {
  VarList xy({"x", "y"});
  CHECK(poly(xy, "x^2").partial("x") == poly(xy, "2*x"));
  CHECK(poly(xy, "x^2").partial("y").is_zero());
  CHECK(poly(xy, "x^2*y + 3*x").partial("x") == poly(xy, "2*x*y + 3"));
  CHECK_THROWS_AS(poly(xy, "x").partial("z"), Error);
}

TEST_CASE("poly_arith") {
  VarList x({"x"});
  CHECK((poly(x, "x") + poly(x, "-x")).is_zero());
  CHECK(poly(x, "x + 1") * poly(x, "x - 1") == poly(x, "x^2 - 1"));
  std::vector<MultiPoly> subs{poly(x, "x + 1")};
  CHECK(poly(x, "x^2").compose(subs) == poly(x, "x^2 + 2*x + 1"));
  CHECK(poly(x, "3*x").scaled(Rational(1, 3)) == poly(x, "x"));
  CHECK(poly(x, "x^3 - x").total_degree() == 3);
  CHECK(MultiPoly(x).total_degree() == -1);

  VarList y({"y"});
  CHECK_THROWS_AS(poly(x, "x") + poly(y, "y"), Error);
}

TEST_CASE("embed keeps values and rejects missing variables") {
  VarList x({"x"});
  VarList yx({"y", "x"});
  MultiPoly p = poly(x, "x^2 + 1").embed(yx);
  RatVec pt{Rational(5), Rational(2)};
  CHECK(p.eval(pt) == 5);
  CHECK_THROWS_AS(poly(yx, "y").embed(x), Error);
}

TEST_CASE("homogeneity and freeness") {
  VarList v({"x", "e1", "e2"});
  std::vector<std::size_t> e{1, 2};
  CHECK(poly(v, "x^2*e1 - e2").is_homogeneous_in(e, 1));
  CHECK_FALSE(poly(v, "e1*e2").is_homogeneous_in(e, 1));
  CHECK_FALSE(poly(v, "e1 + 1").is_homogeneous_in(e, 1));
  CHECK(poly(v, "x^3 + 2").is_free_of(e));
  CHECK_FALSE(poly(v, "x*e2").is_free_of(e));
}

TEST_CASE("mat_solve_at") {
  VarList x({"x"});
  RatVec pt{Rational(0)};
  PolyMatrix m1(1, 1, x);
  m1(0, 0) = poly(x, "2");
  CHECK(mat_solve_at(m1, pt, {Rational(6)}) == RatVec{Rational(3)});

  PolyMatrix id = PolyMatrix::identity(2, x);
  RatVec ab{q("2/7"), q("-5")};
  CHECK(mat_solve_at(id, pt, ab) == ab);

  PolyMatrix m(2, 2, x);
  m(0, 0) = poly(x, "1");
  m(0, 1) = poly(x, "1");
  m(1, 1) = poly(x, "2");
  CHECK(mat_solve_at(m, pt, {Rational(3), Rational(4)}) == RatVec{Rational(1), Rational(2)});

  PolyMatrix s(1, 1, x);
  s(0, 0) = poly(x, "x");
  CHECK_THROWS_AS(mat_solve_at(s, pt, {Rational(1)}), Error);
}

TEST_CASE("polynomial matrices") {
  VarList x({"x"});
  PolyMatrix u(2, 2, x);
  u(0, 0) = poly(x, "1");
  u(0, 1) = poly(x, "x^2 - 3");
  u(1, 1) = poly(x, "1");
  PolyMatrix inv = u.inverse_unimodular();
  CHECK(u * inv == PolyMatrix::identity(2, x));
  CHECK(inv(0, 1) == poly(x, "3 - x^2"));

  PolyMatrix nu(1, 1, x);
  nu(0, 0) = poly(x, "x + 1");
  CHECK_THROWS_AS(nu.inverse_unimodular(), Error);

  RatMatrix r{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(r.determinant() == 1);
  CHECK(r * r.inverse() == RatMatrix::identity(2));
}

TEST_CASE("ring axioms on random polynomials") {
  VarList v({"x1", "x2", "x3"});
  Sampler s(11);
  for (int t = 0; t < 50; ++t) {
    MultiPoly a = random_poly(v, s, 3, 4), b = random_poly(v, s, 3, 4), c = random_poly(v, s, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
  }
}

TEST_CASE("sampler is deterministic and bounded") {
  Sampler a(42, 5), b(42, 5);
  for (int i = 0; i < 200; ++i) {
    Rational r = a.rational();
    CHECK(r == b.rational());
    CHECK(abs(r.get_num()) <= 5);
    CHECK(r.get_den() <= 5);
    CHECK(a.nonzero() != 0);
    b.nonzero();
  }
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}
