#include "doctest.h"
#include "core/sampling.hpp"
#include "error.hpp"
#include "geomech/connection.hpp"
#include "geomech/fields.hpp"
#include "geomech/forms.hpp"
#include "geomech/lifts.hpp"
#include "geomech/poisson.hpp"
#include "support.hpp"

using namespace dvb;
using dvb::test::el;
using dvb::test::poly;

namespace {

RatVec r(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

VectorFieldOnE field(const TotalSpace& ts, std::vector<std::string> base, std::vector<std::string> fiber) {
  VectorFieldOnE X{ts, {}, {}};
  for (const auto& b : base) X.base.push_back(poly(ts.vars, b));
  for (const auto& f : fiber) X.fiber.push_back(poly(ts.vars, f));
  return X;
}

OneFormOnE form(const TotalSpace& ts, std::vector<std::string> dx, std::vector<std::string> de) {
  OneFormOnE t{ts, {}, {}};
  for (const auto& b : dx) t.dx.push_back(poly(ts.vars, b));
  for (const auto& f : de) t.de.push_back(poly(ts.vars, f));
  return t;
}

struct FieldVerdicts {
  bool shape, cotangent, morphism, functions;
};

FieldVerdicts judge(const VectorFieldOnE& X, Sampler& s) {
  return {is_degree_zero(X), vf_linearity_on_cotangent(X, s, 40).ok, vf_morphism_property(X, s, 40).ok,
          vf_preserves_linear_functions(X, s, 5).ok};
}

LinearConnection connection_1d(const std::string& gamma) {
  LinearConnection c = zero_connection(make_chart(1), 1);
  c.Gamma(0, 0, 0) = poly(c.chart, gamma);
  return c;
}

}  // namespace

TEST_CASE("linear vector fields: shape, cotangent linearity and morphism property agree") {
  TotalSpace ts(make_chart(1), 1);
  Sampler s(3);
  FieldVerdicts good = judge(field(ts, {"x1"}, {"2*e1"}), s);
  CHECK(good.shape);
  CHECK(good.cotangent);
  CHECK(good.morphism);
  CHECK(good.functions);
  for (auto X : {field(ts, {"e1"}, {"0"}), field(ts, {"0"}, {"1"}), field(ts, {"x1"}, {"e1^2"})}) {
    FieldVerdicts v = judge(X, s);
    CHECK_FALSE(v.shape);
    CHECK_FALSE(v.cotangent);
    CHECK_FALSE(v.morphism);
    CHECK_FALSE(v.functions);
  }
  FieldVerdicts zero = judge(field(ts, {"0"}, {"0"}), s);
  CHECK(zero.shape);
  CHECK(zero.cotangent);

  TotalSpace t2(make_chart(2), 3);
  for (int k = 0; k < 10; ++k) {
    VectorFieldOnE X = to_field(random_linear_field(t2.chart, 3, s));
    CHECK(is_degree_zero(X));
    CHECK(vf_linearity_on_cotangent(X, s, 20).ok);
    CHECK(as_linear(X).has_value());
  }
}

TEST_CASE("linear one-forms") {
  TotalSpace ts(make_chart(1), 1);
  Sampler s(4);
  OneFormOnE de = form(ts, {"0"}, {"1"});
  CHECK(is_linear_oneform(de));
  CHECK(oneform_linearity_on_tangent(de, s, 40).ok);
  CHECK(oneform_morphism_property(de, s, 40).ok);

  OneFormOnE e2dx = form(ts, {"e1^2"}, {"0"});
  CHECK_FALSE(is_linear_oneform(e2dx));
  CHECK_FALSE(oneform_linearity_on_tangent(e2dx, s, 40).ok);
  CHECK_FALSE(oneform_morphism_property(e2dx, s, 40).ok);

  OneFormOnE edx = form(ts, {"e1"}, {"0"});
  CHECK(is_linear_oneform(edx));
  CHECK(oneform_pairs_linearly(edx, s, 5).ok);
  // <x ∂_x + 2e ∂_e, e dx> = x e, fiber-linear.
  CHECK(contract(field(ts, {"x1"}, {"2*e1"}), edx) == poly(ts.vars, "x1*e1"));
}

TEST_CASE("lambda_sharp") {
  Bivector so3 = so3_lie_poisson();
  CHECK(so3.space.n() == 0);
  // (q; -; e) with q = (1,0,0), e = (0,1,0): ė = e × q.
  Element mu = el({}, r({1, 0, 0}), {}, r({0, 1, 0}));
  Element img = lambda_sharp(so3, mu);
  CHECK(img.c == r({0, 0, -1}));
  CHECK(img.e == mu.e);

  Bivector zero = zero_bivector(make_chart(2), 2);
  Element mu2 = el(r({1, 2}), r({3, 4}), r({5, 6}), r({7, 8}));
  Element z = lambda_sharp(zero, mu2);
  CHECK(is_zero(z.f));
  CHECK(is_zero(z.c));

  Sampler s(6);
  for (int k = 0; k < 30; ++k) {
    Element m = el({}, s.vec(3), {}, s.vec(3));
    Element w = lambda_sharp(so3, m);
    CHECK(dot(m.f, w.c) == 0);
  }
}

TEST_CASE("linear Poisson and Jacobi") {
  Sampler s(7);
  Bivector so3 = so3_lie_poisson();
  CHECK(is_linear_poisson(so3, s, 50).ok);
  CHECK(has_linear_shape(so3));
  std::vector<RatVec> pts{r({1, 2, 3}), r({0, -1, 5})};
  CHECK(check_jacobi(so3, pts));

  Bivector constant = zero_bivector(VarList(), 2);
  constant.L_ab(0, 1) = MultiPoly::constant(constant.space.vars, 1);
  constant.L_ab(1, 0) = MultiPoly::constant(constant.space.vars, -1);
  CHECK_FALSE(is_linear_poisson(constant, s, 50).ok);
  CHECK_FALSE(has_linear_shape(constant));

  Bivector zero = zero_bivector(make_chart(1), 2);
  CHECK(is_linear_poisson(zero, s, 20).ok);
  CHECK(check_jacobi(zero, {r({1, 2, 3})}));

  // [e1,e2] = e3, [e1,e3] = e1 breaks Jacobi.
  RatTensor3 k(3, 3, 3, Rational(0));
  k(0, 1, 2) = 1;
  k(1, 0, 2) = -1;
  k(0, 2, 0) = 1;
  k(2, 0, 0) = -1;
  Bivector bad = linear_bivector_from_constants(k);
  CHECK(is_linear_poisson(bad, s, 20).ok);
  CHECK_FALSE(check_jacobi(bad, pts));
}

TEST_CASE("omega_flat") {
  LinearTwoForm w = zero_two_form(make_chart(1), 1);
  w.omega_ia(0, 0) = MultiPoly::constant(w.chart, 1);
  Morphism m = omega_flat(w);
  // (ẋ; ė; e) -> (f; p; e) with f = ẋ, p = -ė.
  Element out = apply(m, el(r({2}), r({3}), r({5}), r({7})));
  CHECK(out == el(r({2}), r({3}), r({-5}), r({7})));

  Morphism z = omega_flat(zero_two_form(make_chart(2), 2));
  CHECK(z.L.is_zero());
  CHECK(z.C.is_zero());

  Sampler s(8);
  LinearTwoForm rw = random_linear_two_form(make_chart(2), 3, s, false);
  Morphism rm = omega_flat(rw);
  CHECK(rm.R == PolyMatrix::identity(3, rm.R.vars()));
  CHECK(rm.L == -rm.C.transpose());
}

TEST_CASE("closed linear two-forms") {
  VarList chart = make_chart(2);
  // ω_11 = (x1)^2, ω_21 = x1: closed exactly when ω_121 = ∂_2ω_11 - ∂_1ω_21 = -1.
  // Read as the coordinate x2 instead, ω_11 = x2 needs ω_121 = 1 - 1 = 0.
  for (auto [w11, w121] : {std::pair{"x1^2", -1}, std::pair{"x2", 0}}) {
    LinearTwoForm w = zero_two_form(chart, 1);
    w.omega_ia(0, 0) = poly(chart, w11);
    w.omega_ia(1, 0) = poly(chart, "x1");
    w.omega_ija(0, 1, 0) = MultiPoly::constant(chart, w121);
    w.omega_ija(1, 0, 0) = MultiPoly::constant(chart, -w121);
    CHECK(is_closed(w));
    CHECK(is_closed(assemble(w)));
    CHECK(omega_c_pullback(w) == w);

    LinearTwoForm open = w;
    open.omega_ija(0, 1, 0) = MultiPoly::constant(chart, w121 + 1);
    open.omega_ija(1, 0, 0) = MultiPoly::constant(chart, -w121 - 1);
    CHECK_FALSE(is_closed(open));
    CHECK_FALSE(is_closed(assemble(open)));
    LinearTwoForm pb = omega_c_pullback(open);
    CHECK_FALSE(pb.omega_ija == open.omega_ija);
    CHECK(pb.omega_ia == open.omega_ia);
  }
  LinearTwoForm zero = zero_two_form(chart, 2);
  CHECK(is_closed(zero));
  CHECK(omega_c_pullback(zero) == zero);

  Sampler s(10);
  for (int k = 0; k < 20; ++k) {
    LinearTwoForm w = random_linear_two_form(make_chart(2), 2, s, true);
    CHECK(is_closed(w));
    CHECK(is_closed(assemble(w)));
    CHECK(omega_c_pullback(w) == w);
  }
  LinearTwoForm asym = zero_two_form(chart, 1);
  asym.omega_ija(0, 1, 0) = MultiPoly::constant(chart, 1);
  CHECK_THROWS_AS(asym.validate(), Error);
}

TEST_CASE("vertical lifts") {
  VarList chart = make_chart(1);
  Bundle te = tangent_prolongation(chart, 2);
  CoreSection g{chart, {poly(chart, "3"), poly(chart, "x1 - 1")}};
  CHECK(vertical_lift(Side::Right, te, g, r({2}), r({5, 6})) == el(r({2}), r({0}), r({3, 1}), r({5, 6})));
  CHECK(vertical_lift(Side::Left, te, g, r({2}), r({4})) == el(r({2}), r({4}), r({3, 1}), r({0, 0})));
  CoreSection zero{chart, {MultiPoly(chart), MultiPoly(chart)}};
  CHECK(vertical_lift(Side::Right, te, zero, r({2}), r({5, 6})) == zero_right(r({2}), r({5, 6}), 1, 2));

  // On T*E the core is T*M: the right lift of θ is θ pulled back along E -> M.
  Bundle tse = cotangent_prolongation(chart, 1);
  CoreSection theta{chart, {poly(chart, "x1^2")}};
  CHECK(vertical_lift(Side::Right, tse, theta, r({3}), r({7})) == el(r({3}), r({0}), r({9}), r({7})));
  CHECK_THROWS_AS(vertical_lift(Side::Right, tse, theta, r({3}), r({7, 1})), Error);
}

TEST_CASE("dual linear sections") {
  VarList chart = make_chart(1);
  LinearSection X{chart, {poly(chart, "x1")}, PolyMatrix(1, 1, chart)};
  X.X(0, 0) = MultiPoly::constant(chart, 2);
  DualLinearSection Y = dual_linear_section(X);
  CHECK(Y.Y(0, 0) == MultiPoly::constant(chart, -2));
  CHECK(Y.xi == X.xi);
  Sampler s(13);
  CHECK(check_annihilates(X, Y, s, 50).ok);
  DualLinearSection wrong = Y;
  wrong.Y(0, 0) = MultiPoly::constant(chart, 2);
  CHECK_FALSE(check_annihilates(X, wrong, s, 50).ok);

  LinearSection Z{chart, {poly(chart, "1")}, PolyMatrix(2, 3, chart)};
  CHECK(dual_linear_section(Z).Y.is_zero());
}

TEST_CASE("complete lifts") {
  VarList chart({"x"});
  std::vector<MultiPoly> X{poly(chart, "x^2")};
  LinearVectorField t = complete_tangent_lift(chart, X);
  LinearVectorField c = complete_cotangent_lift(chart, X);
  CHECK(t.base[0] == X[0]);
  CHECK(t.fiber(0, 0) == poly(chart, "2*x"));
  CHECK(c.base[0] == X[0]);
  CHECK(c.fiber(0, 0) == poly(chart, "-2*x"));

  LinearVectorField k = complete_tangent_lift(chart, {poly(chart, "5")});
  CHECK(k.fiber.is_zero());

  VarList c2 = make_chart(2);
  Sampler s(14);
  std::vector<MultiPoly> Xr{random_poly(c2, s, 2, 3), random_poly(c2, s, 2, 3)};
  LinearVectorField tl = complete_tangent_lift(c2, Xr);
  DualLinearSection Y = dual_linear_section(field_as_section(tl));
  LinearVectorField dual = section_as_field(Y);
  LinearVectorField cl = complete_cotangent_lift(c2, Xr);
  CHECK(dual.base == cl.base);
  CHECK(dual.fiber == cl.fiber);
}

TEST_CASE("connection splitting") {
  LinearConnection c = connection_1d("x1 + 2");
  Morphism D = connection_splitting(c);
  CHECK(D.L == PolyMatrix::identity(1, D.L.vars()));
  CHECK(D.C == PolyMatrix::identity(1, D.C.vars()));
  CHECK(D.R == PolyMatrix::identity(1, D.R.vars()));
  // γ(3) = 5: (ẋ; ė; e) = (2; 7; 11) -> (2; 7 + 5·2·11; 11).
  CHECK(apply(D, el(r({3}), r({2}), r({7}), r({11}))) == el(r({3}), r({2}), r({117}), r({11})));
  CHECK(christoffel_from_splitting(D) == c);

  Morphism trivial = connection_splitting(zero_connection(make_chart(2), 2));
  Element v = el(r({1, 2}), r({3, 4}), r({5, 6}), r({7, 8}));
  CHECK(apply(trivial, v) == v);
}

TEST_CASE("dual connection") {
  LinearConnection c = connection_1d("x1^2 - 3");
  LinearConnection d = dual_connection(c);
  CHECK(d.Gamma(0, 0, 0) == poly(c.chart, "3 - x1^2"));
  Sampler s(15);
  CHECK(leibniz_check(c, d, s, 30).ok);
  LinearConnection wrong = c;
  CHECK_FALSE(leibniz_check(c, wrong, s, 30).ok);

  CHECK(dual_connection(zero_connection(make_chart(2), 2)) == zero_connection(make_chart(2), 2));

  for (int k = 0; k < 10; ++k) {
    LinearConnection g = random_connection(make_chart(2), 2, s, false);
    LinearConnection gd = dual_connection(g);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t b = 0; b < 2; ++b) CHECK(gd.Gamma(a, i, b) == -g.Gamma(b, i, a));
    CHECK(leibniz_check(g, gd, s, 10).ok);
  }
}

TEST_CASE("metric connections") {
  VarList chart = make_chart(2);
  Metric id{chart, PolyMatrix::identity(2, chart)};
  Sampler s(16);

  LinearConnection anti = zero_connection(chart, 2);
  anti.Gamma(0, 0, 1) = poly(chart, "x2");
  anti.Gamma(1, 0, 0) = poly(chart, "-x2");
  CHECK(is_metric_connection(anti, id, s, 30).ok);
  CHECK(metric_identity(anti, id));

  LinearConnection sym = zero_connection(chart, 2);
  sym.Gamma(0, 1, 1) = poly(chart, "1");
  sym.Gamma(1, 1, 0) = poly(chart, "1");
  CHECK_FALSE(is_metric_connection(sym, id, s, 30).ok);
  CHECK_FALSE(metric_identity(sym, id));

  Metric k{chart, PolyMatrix::constant(RatMatrix{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, chart)};
  CHECK(is_metric_connection(zero_connection(chart, 2), k, s, 30).ok);

  for (int t = 0; t < 10; ++t) {
    MetricPair good = random_metric_pair(chart, 2, s, true);
    CHECK(metric_identity(good.conn, good.g));
    CHECK(is_metric_connection(good.conn, good.g, s, 10).ok);
    MetricPair bad = random_metric_pair(chart, 2, s, false);
    CHECK_FALSE(metric_identity(bad.conn, bad.g));
    CHECK_FALSE(is_metric_connection(bad.conn, bad.g, s, 10).ok);
  }

  Metric degenerate{chart, PolyMatrix(2, 2, chart)};
  CHECK_THROWS_AS(is_metric_connection(anti, degenerate, s, 5), Error);
}

TEST_CASE("kappa_M and alpha_M") {
  VarList chart = make_chart(2);
  Element v = el(r({1, 2}), r({3, 4}), r({5, 6}), r({7, 8}));
  CHECK(kappa_M(kappa_M(v)) == v);
  CHECK(kappa_M(v) == el(r({1, 2}), r({7, 8}), r({5, 6}), r({3, 4})));
  CHECK(kappa_triple(v) == kappa_M(v));
  PointMorphism k = kappa_M_morphism(chart, v.x);
  CHECK(apply(k, v) == v);

  // α_M(x, p, ẋ, ṗ) = (x, ẋ, ṗ, p).
  PointMorphism a = alpha_M_morphism(chart, v.x);
  Sampler s(18);
  for (int t = 0; t < 20; ++t) {
    RatVec p = s.vec(2), xd = s.vec(2), pd = s.vec(2);
    RatVec raw = t_star_t_to_raw(apply(a, tt_star_from_raw(v.x, p, xd, pd)));
    RatVec expect = v.x;
    expect.insert(expect.end(), xd.begin(), xd.end());
    expect.insert(expect.end(), pd.begin(), pd.end());
    expect.insert(expect.end(), p.begin(), p.end());
    CHECK(raw == expect);
  }
}

TEST_CASE("symmetric connections") {
  VarList chart = make_chart(2);
  Sampler s(19);
  LinearConnection asym = zero_connection(chart, 2);
  asym.Gamma(0, 0, 1) = MultiPoly::constant(chart, 1);
  CHECK_FALSE(christoffel_symmetric(asym));
  CHECK_FALSE(is_symmetric_connection(asym, s, 30).ok);
  CHECK_FALSE(horizontal_lagrangian_check(asym, s, 30).ok);

  LinearConnection zero = zero_connection(chart, 2);
  CHECK(is_symmetric_connection(zero, s, 10).ok);
  CHECK(horizontal_lagrangian_check(zero, s, 10).ok);

  for (int t = 0; t < 50; ++t) {
    const bool want_sym = t % 2 == 0;
    LinearConnection g = random_connection(chart, 2, s, want_sym);
    const bool coords = christoffel_symmetric(g);
    if (want_sym) CHECK(coords);
    CHECK(is_symmetric_connection(g, s, 5).ok == coords);
    CHECK(horizontal_lagrangian_check(g, s, 5).ok == coords);
  }
  CHECK_THROWS_AS(is_symmetric_connection(zero_connection(chart, 3), s, 5), Error);
}

TEST_CASE("lifted symplectic form") {
  TwoForm w = lifted_symplectic_form(1);
  const VarList& v = w.vars;
  const std::size_t x = v.require_index("x1"), p = v.require_index("p1");
  const std::size_t dx = v.require_index("dx1"), dp = v.require_index("dp1");
  // dṗ∧dx + dp∧dẋ
  CHECK(w.omega(dp, x) == MultiPoly::constant(v, 1));
  CHECK(w.omega(x, dp) == MultiPoly::constant(v, -1));
  CHECK(w.omega(p, dx) == MultiPoly::constant(v, 1));
  CHECK(w.omega(x, p).is_zero());
  CHECK(w.omega(dx, dp).is_zero());
  CHECK(is_closed(w));
}
