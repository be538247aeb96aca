#include "doctest.h"
#include "core/sampling.hpp"
#include "duality/duality.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace dvb;
using dvb::test::el;
using dvb::test::scalar_morphism;

namespace {

const RatVec X{Rational(1, 2)};

RatVec r(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

PointMorphism random_iso_at(const Bundle& b, Sampler& s, const RatVec& x) {
  PointMorphism m = identity_morphism_at(b, x);
  for (std::size_t i = 0; i < b.nF; ++i)
    for (std::size_t j = i + 1; j < b.nF; ++j) m.L(i, j) = s.rational();
  for (std::size_t i = 0; i < b.nC; ++i) {
    m.C(i, i) = s.nonzero();
    for (std::size_t j = i + 1; j < b.nC; ++j) m.C(i, j) = s.rational();
  }
  for (std::size_t i = 0; i < b.nE; ++i)
    for (std::size_t j = 0; j < i; ++j) m.R(i, j) = s.rational();
  m.Psi = RatTensor3(b.nC, b.nE, b.nF, Rational(0));
  for (std::size_t g = 0; g < b.nC; ++g)
    for (std::size_t a = 0; a < b.nE; ++a)
      for (std::size_t A = 0; A < b.nF; ++A) m.Psi(g, a, A) = s.rational();
  return m;
}

}  // namespace

TEST_CASE("right_dual and left_dual ranks") {
  Bundle b = make_bundle(1, 2, 3, 4);
  Bundle d = right_dual(b);
  CHECK(d.nF == 4);
  CHECK(d.nC == 2);
  CHECK(d.nE == 3);
  CHECK(d.F == "E");
  CHECK(d.C == "F*");
  CHECK(d.E == "C*");
  Bundle d3 = right_dual(right_dual(d));
  CHECK(d3.nF == 2);
  CHECK(d3.nC == 3);
  CHECK(d3.nE == 4);
  CHECK(d3.F == "F");
  CHECK(d3.C == "C");
  CHECK(d3.E == "E");

  Bundle l = left_dual(b);
  CHECK(l.nF == 3);
  CHECK(l.nC == 4);
  CHECK(l.nE == 2);
  CHECK(l.F == "C*");
  CHECK(l.E == "F");
  Bundle rl = left_dual(right_dual(b));
  CHECK(rl.same_shape(b));

  Bundle te = tangent_prolongation(make_chart(2), 3);
  Bundle tse = cotangent_prolongation(make_chart(2), 3);
  CHECK(right_dual(te).same_shape(tse));
}

TEST_CASE("pair_r") {
  Element v = el(X, r({2}), r({3}), r({4}));
  Element a = el(X, r({4}), r({5}), r({7}));
  CHECK(pair_r(v, a) == 31);
  CHECK(pair_r(v, el(X, r({4}), r({0}), r({0}))) == 0);
  CHECK_THROWS_AS(pair_r(v, el(X, r({1}), r({5}), r({7}))), Error);
  CHECK_THROWS_AS(pair_r(v, el(r({0}), r({4}), r({5}), r({7}))), Error);

  Element v2 = el(X, r({2}), r({1}), r({-1}));
  Element a1 = el(X, r({4}), r({5}), r({7}));
  Element b1 = el(X, r({-1}), r({2}), r({7}));
  // <v +_l v', a +_r b> = <v, a> + <v', b>
  CHECK(pair_r(fiber_add(Side::Left, v, v2), fiber_add(Side::Right, a1, b1)) == pair_r(v, a1) + pair_r(v2, b1));
}

TEST_CASE("pair_l mirrors pair_r") {
  Element v = el(X, r({4}), r({3}), r({2}));
  Element b = el(X, r({7}), r({5}), r({4}));
  CHECK(pair_l(v, b) == 31);
  CHECK(pair_l(v, b) == pair_r(flip(v), flip(b)));
  CHECK(pair_l(v, el(X, r({0}), r({0}), r({4}))) == 0);
  Element v2 = el(X, r({-1}), r({1}), r({2}));
  Element b2 = el(X, r({7}), r({2}), r({-1}));
  CHECK(pair_l(fiber_add(Side::Right, v, v2), fiber_add(Side::Left, b, b2)) == pair_l(v, b) + pair_l(v2, b2));
}

TEST_CASE("right_dual_morphism of the scalar morphism") {
  PointMorphism m = evaluate(scalar_morphism(1, 2, 3, 5, 7), X);
  PointMorphism d = right_dual_morphism(m);
  CHECK(d.L(0, 0) == Rational(1, 5));
  CHECK(d.C(0, 0) == 2);
  CHECK(d.R(0, 0) == 3);
  CHECK(d.Psi(0, 0, 0) == Rational(7, 5));

  // Adjoint identity <Φv, a'> = <v, Φ* a'> with a' over Φ(v).e.
  Sampler s(8);
  for (int t = 0; t < 50; ++t) {
    Element v = random_element(m.source, s, X);
    Element w = apply(m, v);
    Element a = el(X, w.e, s.vec(1), s.vec(1));
    Element da = apply(d, a);
    CHECK(da.f == v.e);
    CHECK(pair_r(w, a) == pair_r(v, da));
    // Both sides equal 2p'f + 3q'c + 7q'fe.
    CHECK(pair_r(w, a) == 2 * a.c[0] * v.f[0] + 3 * a.e[0] * v.c[0] + 7 * a.e[0] * v.f[0] * v.e[0]);
  }

  PointMorphism id = identity_morphism_at(m.source, X);
  CHECK(right_dual_morphism(id) == identity_morphism_at(right_dual(m.source), X));
}

TEST_CASE("right_dual_morphism is contravariant and adjoint on random isomorphisms") {
  Bundle b = make_bundle(2, 2, 3, 2);
  Sampler s(17);
  for (int t = 0; t < 10; ++t) {
    RatVec x = s.vec(2);
    PointMorphism m1 = random_iso_at(b, s, x), m2 = random_iso_at(b, s, x);
    CHECK(right_dual_morphism(compose(m2, m1)) == compose(right_dual_morphism(m1), right_dual_morphism(m2)));
    PointMorphism d = right_dual_morphism(m1);
    for (int k = 0; k < 10; ++k) {
      Element v = random_element(b, s, x);
      Element w = apply(m1, v);
      Element a = el(x, w.e, s.vec(b.nF), s.vec(b.nC));
      CHECK(pair_r(w, a) == pair_r(v, apply(d, a)));
    }
    PointMorphism ld = left_dual_morphism(m1);
    for (int k = 0; k < 10; ++k) {
      Element v = random_element(b, s, x);
      Element w = apply(m1, v);
      Element bb = el(x, s.vec(b.nC), s.vec(b.nE), w.f);
      CHECK(pair_l(w, bb) == pair_l(v, apply(ld, bb)));
    }
  }
}

TEST_CASE("canonical_R variants") {
  Element v = el(X, r({1}), r({2}), r({3}));
  CHECK(canonical_R(RVariant::R, v) == el(X, r({1}), r({-2}), r({3})));
  CHECK(canonical_R(RVariant::Equal, v) == el(X, r({-1}), r({-2}), r({-3})));
  CHECK(canonical_R(RVariant::PlusMinus, v) == canonical_R(RVariant::R, fiber_scale(Side::Left, -1, v)));
  CHECK(canonical_R(RVariant::MinusPlus, v) == canonical_R(RVariant::R, fiber_scale(Side::Right, -1, v)));
  CHECK(canonical_R(RVariant::Equal, v) ==
        canonical_R(RVariant::R, fiber_scale(Side::Left, -1, fiber_scale(Side::Right, -1, v))));
}

TEST_CASE("R relation on a small grid") {
  // a = (e; p; q) over v, α = (q; k; φ.f) over a.
  for (RVariant var : {RVariant::R, RVariant::PlusMinus, RVariant::MinusPlus, RVariant::Equal}) {
    bool perturbed_fails = false;
    for (long f = -1; f <= 1; ++f)
      for (long c = -1; c <= 1; ++c)
        for (long e = -1; e <= 1; ++e) {
          Element v = el(X, r({f}), r({c}), r({e}));
          Element phi = canonical_R(var, v);
          Element bad = phi;
          bad.c[0] += 1;
          for (long p = -1; p <= 1; ++p)
            for (long qq = -1; qq <= 1; ++qq)
              for (long k = -2; k <= 2; ++k) {
                Element a = el(X, r({e}), r({p}), r({qq}));
                Element alpha = el(X, r({qq}), r({k}), phi.f);
                CHECK(R_relation_holds(var, v, a, alpha, phi));
                if (!R_relation_holds(var, v, a, alpha, bad)) perturbed_fails = true;
              }
        }
    CHECK(perturbed_fails);
  }
  Element v0 = el(X, r({2}), r({0}), r({-1}));
  Element a = el(X, r({-1}), r({3}), r({1}));
  Element alpha = el(X, r({1}), r({5}), r({2}));
  CHECK(R_relation_holds(RVariant::R, v0, a, alpha, v0));
  CHECK_THROWS_AS(R_relation_holds(RVariant::R, v0, el(X, r({1}), r({3}), r({1})), alpha, v0), Error);
}

TEST_CASE("third_dual_transport") {
  PointMorphism m = evaluate(scalar_morphism(1, 2, 3, 5, 7), X);
  PointMorphism t = third_dual_transport(m);
  CHECK(t == inverse(m));
  CHECK(t.L(0, 0) == Rational(1, 2));
  CHECK(t.C(0, 0) == Rational(1, 3));
  CHECK(t.R(0, 0) == Rational(1, 5));
  CHECK(t.Psi(0, 0, 0) == Rational(-7, 30));
  CHECK_FALSE(third_dual_transport(m, true) == inverse(m));

  PointMorphism id = identity_morphism_at(m.source, X);
  CHECK(third_dual_transport(id) == id);

  Bundle b = make_bundle(2, 3, 2, 2);
  Sampler s(31);
  for (int t2 = 0; t2 < 10; ++t2) {
    RatVec x = s.vec(2);
    PointMorphism g = random_iso_at(b, s, x);
    CHECK(third_dual_transport(g) == inverse(g));
    PointMorphism g0 = g;
    g0.Psi = RatTensor3(b.nC, b.nE, b.nF, Rational(0));
    // Without Ψ the naive identification still lands on the inverse.
    CHECK(third_dual_transport(g0, true) == inverse(g0));
  }
}

TEST_CASE("dual bundles stay double vector bundles") {
  Bundle d = right_dual(make_bundle(1, 2, 2, 3));
  Sampler s(12);
  for (int t = 0; t < 50; ++t) {
    RatVec x = s.vec(1);
    RatVec f1 = s.vec(d.nF), f2 = s.vec(d.nF), e1 = s.vec(d.nE), e2 = s.vec(d.nE);
    Element a = el(x, f1, s.vec(d.nC), e1), b = el(x, f2, s.vec(d.nC), e1);
    Element c = el(x, f1, s.vec(d.nC), e2), e = el(x, f2, s.vec(d.nC), e2);
    CHECK(fiber_add(Side::Left, fiber_add(Side::Right, a, b), fiber_add(Side::Right, c, e)) ==
          fiber_add(Side::Right, fiber_add(Side::Left, a, c), fiber_add(Side::Left, b, e)));
  }
}
