#include "harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "core/sampling.hpp"
#include "duality/duality.hpp"
#include "error.hpp"

namespace dvb {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const PropertyResult& r) { return r.status == s; }));
}

std::string Report::replay_command(const PropertyResult& r) const {
  std::string cmd;
  if (suite.rfind("connection-", 0) == 0)
    cmd = "dvb connection check " + suite.substr(11);
  else
    cmd = "dvb check " + suite;
  cmd += source.empty() ? " --random --seed " + std::to_string(seed) : " --scenario " + source;
  cmd += " --samples " + std::to_string(samples);
  if (!replay_args.empty()) cmd += " " + replay_args;
  if (naive_identification) cmd += " --naive-identification";
  cmd += " --property " + r.id;
  return cmd;
}

std::uint64_t property_seed(std::uint64_t scenario_seed, const std::string& id) { return scenario_seed ^ fnv1a(id); }

namespace {

struct Skip {
  std::string why;
};

struct Context {
  const Scenario& sc;
  Sampler& s;
  int samples;
  bool naive;
};

using Outcome = std::variant<Verdict, Skip>;
using PropertyFn = std::function<Outcome(Context&)>;

struct Property {
  std::string id;
  std::string suite;
  PropertyFn fn;
};

std::string yn(bool b) { return b ? "true" : "false"; }

/// Fails with a listing when the named predicates disagree.
Verdict agreement(const std::string& instance, const std::vector<std::pair<std::string, bool>>& preds) {
  for (const auto& p : preds)
    if (p.second != preds.front().second) {
      std::string msg = instance + ": predicates disagree:";
      for (const auto& q : preds) msg += " " + q.first + "=" + yn(q.second);
      return Verdict::fail(msg);
    }
  return Verdict::pass();
}

// ---------------------------------------------------------------- ring

Outcome ring_axioms(Context& c) {
  const VarList& v = c.sc.bundle.chart;
  const int trials = std::min(c.samples, 25);
  for (int t = 0; t < trials; ++t) {
    const MultiPoly p = random_poly(v, c.s, 2, 3), q = random_poly(v, c.s, 2, 3), r = random_poly(v, c.s, 2, 3);
    if (!((p * q) * r == p * (q * r))) return Verdict::fail("associativity fails for p=" + p.to_string());
    if (!(p * (q + r) == p * q + p * r)) return Verdict::fail("distributivity fails for p=" + p.to_string());
    if (!(p * q == q * p)) return Verdict::fail("commutativity fails for p=" + p.to_string());
  }
  return Verdict::pass();
}

Outcome ring_derivation(Context& c) {
  const VarList& v = c.sc.bundle.chart;
  if (v.size() == 0) return Skip{"chart has no coordinates"};
  const int trials = std::min(c.samples, 25);
  for (int t = 0; t < trials; ++t) {
    const MultiPoly p = random_poly(v, c.s, 3, 3), q = random_poly(v, c.s, 3, 3);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!((p * q).partial(i) == p * q.partial(i) + q * p.partial(i)))
        return Verdict::fail("Leibniz rule fails in " + v[i] + " for p=" + p.to_string() + " q=" + q.to_string());
  }
  return Verdict::pass();
}

Outcome ring_eval_compose(Context& c) {
  const VarList& v = c.sc.bundle.chart;
  const int trials = std::min(c.samples, 25);
  for (int t = 0; t < trials; ++t) {
    const MultiPoly p = random_poly(v, c.s, 3, 3);
    std::vector<MultiPoly> subs;
    for (std::size_t i = 0; i < v.size(); ++i) subs.push_back(random_poly(v, c.s, 2, 2));
    const RatVec x = c.s.vec(v.size());
    RatVec inner;
    for (const auto& q : subs) inner.push_back(q.eval(x));
    if (p.compose(subs).eval(x) != p.eval(inner))
      return Verdict::fail("eval∘compose differs for p=" + p.to_string() + " at x=" + to_string(x));
  }
  return Verdict::pass();
}

Outcome ring_solve(Context& c) {
  for (int t = 0; t < c.samples; ++t) {
    const auto k = static_cast<std::size_t>(c.s.integer(1, 4));
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = c.s.rational();
    const RatVec rhs = c.s.vec(k);
    if (m.determinant() == 0) continue;
    if (m.apply(m.solve(rhs)) != rhs) return Verdict::fail("solve round trip fails for rhs=" + to_string(rhs));
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------- core

Verdict interchange_on(const Bundle& b, Sampler& s, int samples) {
  for (int t = 0; t < samples; ++t) {
    const RatVec x = s.vec(b.n());
    const RatVec f1 = s.vec(b.nF), f2 = s.vec(b.nF), e1 = s.vec(b.nE), e2 = s.vec(b.nE);
    const Element a{x, f1, s.vec(b.nC), e1}, bb{x, f2, s.vec(b.nC), e1};
    const Element cc{x, f1, s.vec(b.nC), e2}, d{x, f2, s.vec(b.nC), e2};
    const Element lhs = fiber_add(Side::Left, fiber_add(Side::Right, a, bb), fiber_add(Side::Right, cc, d));
    const Element rhs = fiber_add(Side::Right, fiber_add(Side::Left, a, cc), fiber_add(Side::Left, bb, d));
    if (lhs != rhs)
      return Verdict::fail("interchange law fails on " + b.describe() + ": a=" + to_string(a) + " b=" + to_string(bb) +
                           " c=" + to_string(cc) + " d=" + to_string(d));
    const Rational r = s.rational();
    if (fiber_scale(Side::Right, r, fiber_add(Side::Left, a, cc)) !=
        fiber_add(Side::Left, fiber_scale(Side::Right, r, a), fiber_scale(Side::Right, r, cc)))
      return Verdict::fail("right scaling is not left-additive at r=" + r.get_str() + " a=" + to_string(a));
    if (fiber_scale(Side::Left, r, fiber_add(Side::Right, a, bb)) !=
        fiber_add(Side::Right, fiber_scale(Side::Left, r, a), fiber_scale(Side::Left, r, bb)))
      return Verdict::fail("left scaling is not right-additive at r=" + r.get_str() + " a=" + to_string(a));
    const Rational r2 = s.rational();
    if (fiber_scale(Side::Right, r, fiber_scale(Side::Left, r2, a)) !=
        fiber_scale(Side::Left, r2, fiber_scale(Side::Right, r, a)))
      return Verdict::fail("scalar actions do not commute at a=" + to_string(a));
  }
  return Verdict::pass();
}

Outcome core_interchange(Context& c) { return interchange_on(c.sc.bundle, c.s, c.samples); }

Outcome core_agreement(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element k1 = core_embed(x, c.s.vec(b.nC), b.nF, b.nE), k2 = core_embed(x, c.s.vec(b.nC), b.nF, b.nE);
    if (fiber_add(Side::Right, k1, k2) != fiber_add(Side::Left, k1, k2))
      return Verdict::fail("additions differ on the core: " + to_string(k1) + ", " + to_string(k2));
    const Rational r = c.s.rational();
    if (fiber_scale(Side::Right, r, k1) != fiber_scale(Side::Left, r, k1))
      return Verdict::fail("scalar actions differ on the core at r=" + r.get_str() + ": " + to_string(k1));
  }
  return Verdict::pass();
}

Outcome core_kernel_split(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element v{x, c.s.vec(b.nF), c.s.vec(b.nC), zeros(b.nE)};
    const KernelSplit sp = kernel_split(v);
    if (fiber_add(Side::Right, sp.f_part, sp.c_part) != v)
      return Verdict::fail("Q_F + Q_C != id at v=" + to_string(v));
    if (kernel_split(sp.f_part).f_part != sp.f_part || kernel_split(sp.c_part).c_part != sp.c_part)
      return Verdict::fail("projectors are not idempotent at v=" + to_string(v));
    const Element zero{x, zeros(b.nF), zeros(b.nC), zeros(b.nE)};
    if (kernel_split(sp.c_part).f_part != zero || kernel_split(sp.f_part).c_part != zero)
      return Verdict::fail("Q_F Q_C != 0 at v=" + to_string(v));
    // Mirror statement on ker τ_l through the flip.
    const Element w{x, zeros(b.nF), c.s.vec(b.nC), c.s.vec(b.nE)};
    const KernelSplit fs = kernel_split(flip(w));
    if (fiber_add(Side::Left, flip(fs.f_part), flip(fs.c_part)) != w)
      return Verdict::fail("flipped splitting does not recombine under +_l at w=" + to_string(w));
  }
  return Verdict::pass();
}

Outcome core_unique_difference(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element u = random_element(b, c.s, x);
    Element v = random_element(b, c.s, x);
    v.f = u.f;
    v.e = u.e;
    const Element dr = fiber_add(Side::Right, v, fiber_scale(Side::Right, -1, u));
    const Element dl = fiber_add(Side::Left, v, fiber_scale(Side::Left, -1, u));
    if (!is_zero(dr.f) || !is_zero(dl.e) || dr.c != dl.c)
      return Verdict::fail("core differences disagree: right " + to_string(dr) + " left " + to_string(dl));
    const RatVec& k = dr.c;
    if (fiber_add(Side::Right, u, Element{x, zeros(b.nF), k, u.e}) != v ||
        fiber_add(Side::Left, u, Element{x, u.f, k, zeros(b.nE)}) != v)
      return Verdict::fail("core element k=" + to_string(k) + " does not recover v=" + to_string(v));
  }
  return Verdict::pass();
}

Outcome core_flip(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    auto [u, v] = random_pair(Side::Right, b, c.s, x);
    if (flip(flip(u)) != u) return Verdict::fail("flip is not an involution at " + to_string(u));
    if (flip(fiber_add(Side::Right, u, v)) != fiber_add(Side::Left, flip(u), flip(v)))
      return Verdict::fail("flip does not exchange the additions at u=" + to_string(u) + " v=" + to_string(v));
  }
  return Verdict::pass();
}

Outcome core_morphism_linear(Context& c) {
  if (!c.sc.morphism) return Skip{"scenario has no morphism"};
  const Morphism& m = *c.sc.morphism;
  Verdict v = check_map_linear(m.source, m.target, [&](const Element& u) { return apply(m, u); }, c.s, c.samples);
  if (!v) return v;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(m.source.n());
    Element u = random_element(m.source, c.s, x);
    u.e = zeros(m.source.nE);
    if (!is_zero(apply(m, u).e)) return Verdict::fail("ker τ_r is not preserved at " + to_string(u));
  }
  return Verdict::pass();
}

/// Evaluates at random points until every block is invertible.
std::optional<std::pair<PointMorphism, PointMorphism>> invertible_sample(const Morphism& m, Sampler& s) {
  for (int tries = 0; tries < 50; ++tries) {
    const PointMorphism pm = evaluate(m, s.vec(m.source.n()));
    try {
      return std::make_pair(pm, inverse(pm));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }
  }
  return std::nullopt;
}

Outcome core_morphism_inverse(Context& c) {
  if (!c.sc.morphism) return Skip{"scenario has no morphism"};
  const Morphism& m = *c.sc.morphism;
  if (!m.source.same_shape(m.target)) return Skip{"morphism changes ranks"};
  const int points = std::min(c.samples, 10);
  for (int t = 0; t < points; ++t) {
    const auto pair = invertible_sample(m, c.s);
    if (!pair) return Skip{"no point with invertible blocks found"};
    const auto& [pm, inv] = *pair;
    const PointMorphism id = identity_morphism_at(m.source, pm.x);
    if (!(compose(inv, pm) == id) || !(compose(pm, inv) == id))
      return Verdict::fail("Φ⁻¹∘Φ != id at x=" + to_string(pm.x));
    const PointMorphism sq = compose(pm, pm);
    for (int k = 0; k < 5; ++k) {
      const Element v = random_element(m.source, c.s, pm.x);
      if (apply(sq, v) != apply(pm, apply(pm, v)) || apply(inv, apply(pm, v)) != v)
        return Verdict::fail("block composition disagrees with application at v=" + to_string(v));
    }
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------- duality

Outcome dual_is_dvb(Context& c) {
  Verdict v = interchange_on(right_dual(c.sc.bundle), c.s, c.samples);
  if (!v) return v;
  return interchange_on(left_dual(c.sc.bundle), c.s, c.samples);
}

Element dual_over(const Bundle& b, Sampler& s, const RatVec& x, const RatVec& e) {
  return {x, e, s.vec(b.nF), s.vec(b.nC)};
}

Outcome dual_pairing_bilinear(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    auto [v, v2] = random_pair(Side::Right, b, c.s, x);
    const Element a = dual_over(b, c.s, x, v.e);
    if (pair_r(fiber_add(Side::Right, v, v2), a) != pair_r(v, a) + pair_r(v2, a))
      return Verdict::fail("pairing not additive in v at v=" + to_string(v) + " v'=" + to_string(v2));
    const Element a2 = dual_over(b, c.s, x, v.e);
    if (pair_r(v, fiber_add(Side::Left, a, a2)) != pair_r(v, a) + pair_r(v, a2))
      return Verdict::fail("pairing not additive in a at a=" + to_string(a) + " a'=" + to_string(a2));
    const Rational r = c.s.rational();
    if (pair_r(fiber_scale(Side::Right, r, v), a) != r * pair_r(v, a) ||
        pair_r(v, fiber_scale(Side::Left, r, a)) != r * pair_r(v, a))
      return Verdict::fail("pairing not homogeneous at r=" + r.get_str());
    // <v +_l w, a +_r b> = <v, a> + <w, b> over matching projections.
    Element w = random_element(b, c.s, x);
    w.f = v.f;
    const Element bw = dual_over(b, c.s, x, w.e);
    Element aq = a;
    aq.e = bw.e;
    if (pair_r(fiber_add(Side::Left, v, w), fiber_add(Side::Right, aq, bw)) != pair_r(v, aq) + pair_r(w, bw))
      return Verdict::fail("mixed bilinearity fails at v=" + to_string(v) + " w=" + to_string(w));
  }
  return Verdict::pass();
}

Outcome dual_prop8(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    auto [v, v2] = random_pair(Side::Left, b, c.s, x);
    const RatVec k = c.s.vec(b.nC);
    const Element u = fiber_add(Side::Right, v, Element{x, zeros(b.nF), k, v.e});
    const Element u2 = fiber_add(Side::Right, v2, Element{x, zeros(b.nF), vneg(k), v2.e});
    const Element w = fiber_add(Side::Left, v, v2);
    if (fiber_add(Side::Left, u, u2) != w) return Verdict::fail("core shift changes the sum at v=" + to_string(v));
    const RatVec q = c.s.vec(b.nC);
    const Element a{x, v.e, c.s.vec(b.nF), q}, a2{x, v2.e, c.s.vec(b.nF), q};
    const Rational lhs = pair_r(v, a) + pair_r(v2, a2);
    if (lhs != pair_r(u, a) + pair_r(u2, a2) || lhs != pair_r(w, fiber_add(Side::Right, a, a2)))
      return Verdict::fail("pairing-defined addition is not single-valued at v=" + to_string(v) +
                           " v'=" + to_string(v2) + " k=" + to_string(k));
  }
  return Verdict::pass();
}

Outcome dual_prop12(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element v = random_element(b, c.s, x);
    const RatVec fstar = c.s.vec(b.nF);
    if (pair_r(v, Element{x, v.e, fstar, zeros(b.nC)}) != dot(v.f, fstar))
      return Verdict::fail("<v, (e, f*)> != <τ_l v, f*> at v=" + to_string(v));
    const Element k{x, zeros(b.nF), c.s.vec(b.nC), c.s.vec(b.nE)};
    const Element bb = dual_over(b, c.s, x, k.e);
    if (pair_r(k, bb) != dot(k.c, bb.e))
      return Verdict::fail("<(e, c), b> != <c, π_r b> at b=" + to_string(bb));
  }
  return Verdict::pass();
}

Outcome dual_prop15(Context& c) {
  const Bundle& b = c.sc.bundle;
  const Bundle dd = left_dual(right_dual(b));
  if (!dd.same_shape(b)) return Verdict::fail("(K^{*r})^{*l} has shape " + dd.describe());
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element w = random_element(b, c.s, x);
    const Element a = dual_over(b, c.s, x, w.e);
    if (pair_l(a, w) != pair_r(w, a))
      return Verdict::fail("left pairing on the double dual differs at w=" + to_string(w) + " a=" + to_string(a));
  }
  return Verdict::pass();
}

Outcome dual_adjoint(Context& c) {
  if (!c.sc.morphism) return Skip{"scenario has no morphism"};
  const Morphism& m = *c.sc.morphism;
  const int points = std::max(1, c.samples / 10);
  for (int t = 0; t < points; ++t) {
    const auto pair = invertible_sample(m, c.s);
    if (!pair) return Skip{"no point with invertible blocks found"};
    const PointMorphism& pm = pair->first;
    const PointMorphism rd = right_dual_morphism(pm);
    const PointMorphism ld = left_dual_morphism(pm);
    for (int k = 0; k < 10; ++k) {
      const Element v = random_element(m.source, c.s, pm.x);
      const Element mv = apply(pm, v);
      const Element a{pm.x, mv.e, c.s.vec(m.target.nF), c.s.vec(m.target.nC)};
      if (pair_r(mv, a) != pair_r(v, apply(rd, a)))
        return Verdict::fail("right adjoint contract fails at x=" + to_string(pm.x) + " v=" + to_string(v) +
                             " a'=" + to_string(a));
      const Bundle tl = left_dual(m.target);
      Element bl = random_element(tl, c.s, pm.x);
      bl.e = mv.f;
      if (pair_l(mv, bl) != pair_l(v, apply(ld, bl)))
        return Verdict::fail("left adjoint contract fails at x=" + to_string(pm.x) + " v=" + to_string(v) +
                             " b'=" + to_string(bl));
    }
    if (m.source.same_shape(m.target)) {
      const PointMorphism lhs = right_dual_morphism(compose(pm, pm));
      const PointMorphism rhs = compose(rd, rd);
      if (!(lhs == rhs)) return Verdict::fail("(ΦΦ)^{*r} != Φ^{*r}Φ^{*r} at x=" + to_string(pm.x));
    }
  }
  return Verdict::pass();
}

PointMorphism scalar_morphism(const Rational& l, const Rational& cc, const Rational& r, const Rational& psi,
                              const RatVec& x) {
  const Bundle b = make_bundle(x.size(), 1, 1, 1);
  PointMorphism m = identity_morphism_at(b, x);
  m.L(0, 0) = l;
  m.C(0, 0) = cc;
  m.R(0, 0) = r;
  m.Psi(0, 0, 0) = psi;
  return m;
}

Outcome dual_scalar_example(Context& c) {
  const PointMorphism m = scalar_morphism(2, 3, 5, 7, c.s.vec(1));
  const PointMorphism d = right_dual_morphism(m);
  const PointMorphism expect = scalar_morphism(Rational(1, 5), 2, 3, Rational(7, 5), m.x);
  if (!(d == expect)) return Verdict::fail("dual of (2,3,5,7) is " + to_string(d));
  return Verdict::pass();
}

Outcome dual_sign_identities(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element v = random_element(b, c.s, x);
    const Element a = dual_over(b, c.s, x, v.e);
    const Rational p = pair_r(v, a);
    if (pair_r(fiber_scale(Side::Right, -1, v), a) != -p || pair_r(v, fiber_scale(Side::Left, -1, a)) != -p)
      return Verdict::fail("sign identities fail at v=" + to_string(v) + " a=" + to_string(a));
  }
  return Verdict::pass();
}

constexpr RVariant kVariants[] = {RVariant::R, RVariant::PlusMinus, RVariant::MinusPlus, RVariant::Equal};

/// Random (a, α) compatible with v and φ.
std::pair<Element, Element> relation_sample(const Bundle& b, Sampler& s, const Element& v, const Element& phi) {
  const Element a{v.x, v.e, s.vec(b.nF), s.vec(b.nC)};
  const Element alpha{v.x, a.e, s.vec(b.nE), phi.f};
  return {a, alpha};
}

Outcome dual_R_relation(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (RVariant var : kVariants) {
    bool perturbed_caught = b.nC == 0 || b.nC + b.nE == 0;
    for (int t = 0; t < c.samples; ++t) {
      const RatVec x = c.s.vec(b.n());
      const Element v = random_element(b, c.s, x);
      const Element phi = canonical_R(var, v);
      const auto [a, alpha] = relation_sample(b, c.s, v, phi);
      if (!R_relation_holds(var, v, a, alpha, phi))
        return Verdict::fail(std::string(variant_name(var)) + " relation fails at v=" + to_string(v) +
                             " a=" + to_string(a) + " α=" + to_string(alpha));
      if (!perturbed_caught) {
        Element bad = phi;
        bad.c[0] += 1;
        if (!R_relation_holds(var, v, a, alpha, bad)) perturbed_caught = true;
      }
    }
    if (!perturbed_caught)
      return Verdict::fail(std::string(variant_name(var)) + ": perturbed core slot was never rejected");
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------- third dual

Outcome third_transport(Context& c) {
  if (!c.sc.morphism) return Skip{"scenario has no morphism"};
  const Morphism& m = *c.sc.morphism;
  for (int t = 0; t < 10; ++t) {
    const auto pair = invertible_sample(m, c.s);
    if (!pair) return Skip{"no point with invertible blocks found"};
    const auto& [pm, inv] = *pair;
    const PointMorphism got = third_dual_transport(pm, false);
    if (!(got == inv))
      return Verdict::fail("R⁻¹∘Φ^{*r*r*r}∘R != Φ⁻¹ at x=" + to_string(pm.x) + ": " + to_string(got) + " vs " +
                           to_string(inv));
  }
  return Verdict::pass();
}

Outcome third_naive(Context& c) {
  if (!c.sc.morphism) return Skip{"scenario has no morphism"};
  const Morphism& m = *c.sc.morphism;
  bool psi_zero = true;
  for (const auto& p : m.Psi.data()) psi_zero = psi_zero && p.is_zero();
  if (psi_zero) return Skip{"Ψ = 0, the naive identification is not expected to fail"};
  for (int t = 0; t < 10; ++t) {
    const auto pair = invertible_sample(m, c.s);
    if (!pair) return Skip{"no point with invertible blocks found"};
    const auto& [pm, inv] = *pair;
    if (!(third_dual_transport(pm, true) == inv))
      return Verdict{true, "naive identification disagrees with Φ⁻¹ at x=" + to_string(pm.x) + " as expected"};
  }
  return Verdict::fail("naive identification matched Φ⁻¹ at every sampled point");
}

Outcome third_scalar_example(Context& c) {
  const PointMorphism m = scalar_morphism(2, 3, 5, 7, c.s.vec(1));
  const PointMorphism expect = scalar_morphism(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(-7, 30), m.x);
  const PointMorphism got = third_dual_transport(m, false);
  if (!(got == expect)) return Verdict::fail("transport of (2,3,5,7) is " + to_string(got));
  if (!(inverse(m) == expect)) return Verdict::fail("inverse of (2,3,5,7) is " + to_string(inverse(m)));
  return Verdict::pass();
}

Outcome third_prop17(Context& c) {
  const Bundle& b = c.sc.bundle;
  for (int t = 0; t < c.samples; ++t) {
    const Element v = random_element(b, c.s, c.s.vec(b.n()));
    const Element l = fiber_scale(Side::Left, -1, v), r = fiber_scale(Side::Right, -1, v);
    if (canonical_R(RVariant::PlusMinus, v) != canonical_R(RVariant::R, l))
      return Verdict::fail("R+-(v) != R((-1)·_l v) at v=" + to_string(v));
    if (canonical_R(RVariant::MinusPlus, v) != canonical_R(RVariant::R, r))
      return Verdict::fail("R-+(v) != R((-1)·_r v) at v=" + to_string(v));
    if (canonical_R(RVariant::Equal, v) != canonical_R(RVariant::R, fiber_scale(Side::Left, -1, r)))
      return Verdict::fail("R=(v) != R((-1)·_l (-1)·_r v) at v=" + to_string(v));
  }
  return Verdict::pass();
}

/// Exhaustive check over the grid {-2..2} for ranks (1,1,1): R satisfies the
/// relation, and it is the only grid candidate that does.
Verdict R_grid_check() {
  const RatVec x;
  std::vector<Rational> grid;
  for (int k = -2; k <= 2; ++k) grid.emplace_back(k);
  for (RVariant var : kVariants) {
    long mismatches = 0;
    for (const auto& f : grid)
      for (const auto& cc : grid)
        for (const auto& e : grid) {
          const Element v{x, {f}, {cc}, {e}};
          const Element phi = canonical_R(var, v);
          int survivors = 0;
          for (const auto& pf : grid)
            for (const auto& pc : grid)
              for (const auto& pe : grid) {
                const Element cand{x, {pf}, {pc}, {pe}};
                bool holds = true;
                for (const auto& p : grid)
                  for (const auto& q : grid)
                    for (const auto& ac : grid) {
                      if (!holds) break;
                      const Element a{x, {e}, {p}, {q}};
                      const Element alpha{x, {q}, {ac}, {pf}};
                      holds = R_relation_holds(var, v, a, alpha, cand);
                    }
                if (holds) {
                  ++survivors;
                  if (cand != phi) ++mismatches;
                }
              }
          if (survivors != 1 || mismatches != 0)
            return Verdict::fail(std::string(variant_name(var)) + ": " + std::to_string(survivors) +
                                 " grid candidates satisfy the relation at v=" + to_string(v));
        }
  }
  return Verdict::pass();
}

Outcome third_R_grid(Context&) { return R_grid_check(); }

// ---------------------------------------------------------------- geometry

Outcome geo_vector_field(Context& c) {
  const TotalSpace sp(c.sc.bundle.chart, c.sc.bundle.nE);
  std::vector<std::pair<std::string, VectorFieldOnE>> cases;
  const VectorFieldOnE X =
      c.sc.vector_field ? *c.sc.vector_field : to_field(random_linear_field(sp.chart, sp.nE, c.s));
  cases.emplace_back("input", X);
  if (sp.n() > 0 && sp.nE > 0) {
    VectorFieldOnE bad = X;
    bad.base[0] += sp.e(0);
    cases.emplace_back("X + e1 ∂x1", bad);
  }
  if (sp.nE > 0) {
    VectorFieldOnE bad = X;
    bad.fiber[0] += MultiPoly::constant(sp.vars, 1);
    cases.emplace_back("X + ∂e1", bad);
    bad = X;
    bad.fiber[0] += sp.e(0) * sp.e(0);
    cases.emplace_back("X + e1² ∂e1", bad);
  }
  for (const auto& [name, Y] : cases) {
    const bool shape = is_degree_zero(Y);
    const bool morph = vf_morphism_property(Y, c.s, c.samples).ok;
    const bool tilde = vf_linearity_on_cotangent(Y, c.s, c.samples).ok;
    const bool funcs = vf_preserves_linear_functions(Y, c.s, 3).ok;
    Verdict v = agreement(name, {{"shape", shape}, {"morphism", morph}, {"tilde_linear", tilde}, {"linear_functions", funcs}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_one_form(Context& c) {
  const TotalSpace sp(c.sc.bundle.chart, c.sc.bundle.nE);
  std::vector<std::pair<std::string, OneFormOnE>> cases;
  const OneFormOnE th = c.sc.one_form ? *c.sc.one_form : to_form(random_linear_oneform(sp.chart, sp.nE, c.s));
  cases.emplace_back("input", th);
  if (sp.n() > 0 && sp.nE > 0) {
    OneFormOnE bad = th;
    bad.dx[0] += sp.e(0) * sp.e(0);
    cases.emplace_back("θ + e1² dx1", bad);
    bad = th;
    bad.dx[0] += MultiPoly::constant(sp.vars, 1);
    cases.emplace_back("θ + dx1", bad);
  }
  if (sp.nE > 0) {
    OneFormOnE bad = th;
    bad.de[0] += sp.e(0);
    cases.emplace_back("θ + e1 de1", bad);
  }
  for (const auto& [name, t] : cases) {
    const bool shape = is_linear_oneform(t);
    const bool morph = oneform_morphism_property(t, c.s, c.samples).ok;
    const bool tilde = oneform_linearity_on_tangent(t, c.s, c.samples).ok;
    const bool pairs = oneform_pairs_linearly(t, c.s, 3).ok;
    Verdict v = agreement(name, {{"shape", shape}, {"morphism", morph}, {"tilde_linear", tilde}, {"pairs_linearly", pairs}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_linear_poisson(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  const std::size_t n = chart.size(), nE = c.sc.bundle.nE;
  std::vector<std::pair<std::string, Bivector>> cases;
  if (c.sc.bivector) cases.emplace_back("input", *c.sc.bivector);
  cases.emplace_back("so(3)", so3_lie_poisson());
  Bivector constant = zero_bivector(VarList(), 2);
  constant.L_ab(0, 1) = MultiPoly::constant(constant.space.vars, 1);
  constant.L_ab(1, 0) = MultiPoly::constant(constant.space.vars, -1);
  cases.emplace_back("constant L_ab", constant);
  if (n >= 2) {
    Bivector b = c.sc.bivector ? *c.sc.bivector : zero_bivector(chart, nE);
    b.L_ij(0, 1) += MultiPoly::constant(b.space.vars, 1);
    b.L_ij(1, 0) -= MultiPoly::constant(b.space.vars, 1);
    cases.emplace_back("with L_12 = 1", b);
  }
  if (n >= 1 && nE >= 1) {
    Bivector b = c.sc.bivector ? *c.sc.bivector : zero_bivector(chart, nE);
    b.L_ia(0, 0) += b.space.e(0);
    cases.emplace_back("with L_1,e1 = e1", b);
  }
  for (const auto& [name, lam] : cases) {
    Verdict v = agreement(name, {{"shape", has_linear_shape(lam)}, {"morphism", is_linear_poisson(lam, c.s, c.samples).ok}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_jacobi(Context& c) {
  if (!c.sc.bivector) return Skip{"scenario has no bivector"};
  const Bivector& lam = *c.sc.bivector;
  std::vector<RatVec> pts;
  for (int t = 0; t < std::min(c.samples, 20); ++t) pts.push_back(c.s.vec(lam.space.dim()));
  if (!check_jacobi(lam, pts)) {
    const PolyTensor3 sch = schouten_self(lam);
    for (std::size_t i = 0; i < sch.dim0(); ++i)
      for (std::size_t j = 0; j < sch.dim1(); ++j)
        for (std::size_t k = 0; k < sch.dim2(); ++k)
          if (!sch(i, j, k).is_zero())
            return Verdict::fail("[Λ,Λ]^{" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) +
                                 "} = " + sch(i, j, k).to_string());
    return Verdict::fail("Schouten bracket does not vanish");
  }
  return Verdict::pass();
}

Outcome geo_closed_two_form(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  const std::size_t nE = c.sc.bundle.nE;
  std::vector<std::pair<std::string, LinearTwoForm>> cases;
  if (c.sc.two_form) cases.emplace_back("input", *c.sc.two_form);
  cases.emplace_back("random closed", random_linear_two_form(chart, nE, c.s, true));
  cases.emplace_back("random", random_linear_two_form(chart, nE, c.s, false));
  for (const auto& [name, w] : cases) {
    Verdict v = agreement(name, {{"closed_shape", is_closed(w)},
                                 {"pullback_identity", omega_c_pullback(w) == w},
                                 {"formal_d", is_closed(assemble(w))}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_omega_flat_blocks(Context& c) {
  const LinearTwoForm w = c.sc.two_form ? *c.sc.two_form
                                        : random_linear_two_form(c.sc.bundle.chart, c.sc.bundle.nE, c.s, c.s.coin());
  const Morphism m = omega_flat(w);
  if (!(m.R == PolyMatrix::identity(m.R.rows(), m.R.vars())))
    return Verdict::fail("ω̃_r is not the identity");
  if (!(m.L == -m.C.transpose())) return Verdict::fail("ω̃_l != -ω̃_c^*");
  return Verdict::pass();
}

Outcome geo_dual_section(Context& c) {
  const Bundle& b = c.sc.bundle;
  LinearSection X;
  if (c.sc.linear_section) {
    X = *c.sc.linear_section;
  } else {
    X = {b.chart, {}, PolyMatrix(b.nC, b.nF, b.chart)};
    for (std::size_t a = 0; a < b.nE; ++a) X.xi.push_back(random_poly(b.chart, c.s, 2, 2));
    for (std::size_t i = 0; i < b.nC; ++i)
      for (std::size_t j = 0; j < b.nF; ++j) X.X(i, j) = random_poly(b.chart, c.s, 2, 2);
  }
  const DualLinearSection Y = dual_linear_section(X);
  if (Verdict v = check_annihilates(X, Y, c.s, c.samples); !v) return v;
  for (std::size_t i = 0; i < Y.Y.rows(); ++i)
    for (std::size_t j = 0; j < Y.Y.cols(); ++j) {
      DualLinearSection other = Y;
      other.Y(i, j) += MultiPoly::constant(b.chart, 1);
      if (check_annihilates(X, other, c.s, c.samples))
        return Verdict::fail("perturbing Y(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") still annihilates X");
    }
  return Verdict::pass();
}

Outcome geo_complete_lifts(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  std::vector<MultiPoly> X;
  if (c.sc.base_field)
    X = *c.sc.base_field;
  else
    for (std::size_t i = 0; i < chart.size(); ++i) X.push_back(random_poly(chart, c.s, 2, 2));
  const LinearVectorField tl = complete_tangent_lift(chart, X);
  const LinearVectorField cl = complete_cotangent_lift(chart, X);
  const LinearSection sec = field_as_section(tl);
  const LinearVectorField back = section_as_field(dual_linear_section(sec));
  if (!(back.fiber == cl.fiber) || back.base != cl.base)
    return Verdict::fail("dual section of d_T X differs from the complete cotangent lift");
  return check_annihilates(sec, dual_linear_section(sec), c.s, c.samples);
}

Outcome geo_vertical_lift(Context& c) {
  const Bundle& b = c.sc.bundle;
  CoreSection g;
  if (c.sc.core_section) {
    g = *c.sc.core_section;
  } else {
    g.chart = b.chart;
    for (std::size_t a = 0; a < b.nC; ++a) g.gamma.push_back(random_poly(b.chart, c.s, 2, 2));
  }
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(b.n());
    const Element r = vertical_lift(Side::Right, b, g, x, c.s.vec(b.nE));
    const Element l = vertical_lift(Side::Left, b, g, x, c.s.vec(b.nF));
    if (!is_zero(r.f) || !is_zero(l.e) || r.c != l.c)
      return Verdict::fail("vertical lifts leave the kernels at x=" + to_string(x));
    const Element r0 = vertical_lift(Side::Right, b, g, x, zeros(b.nE));
    const Element l0 = vertical_lift(Side::Left, b, g, x, zeros(b.nF));
    if (r0 != l0 || r0 != core_embed(x, r.c, b.nF, b.nE))
      return Verdict::fail("vertical lifts over zero differ from the core value at x=" + to_string(x));
  }
  return Verdict::pass();
}

LinearConnection scenario_connection(Context& c) {
  if (c.sc.connection) return *c.sc.connection;
  return random_connection(c.sc.bundle.chart, c.sc.bundle.nE, c.s, false);
}

Outcome geo_dual_connection(Context& c) {
  const LinearConnection conn = scenario_connection(c);
  const LinearConnection dual = dual_connection(conn);
  if (Verdict v = leibniz_check(conn, dual, c.s, c.samples); !v) return v;
  const Morphism poly = dual_splitting(conn);
  for (int t = 0; t < std::min(c.samples, 10); ++t) {
    const RatVec x = c.s.vec(conn.chart.size());
    if (!(evaluate(poly, x) == dual_splitting_at(conn, x)))
      return Verdict::fail("polynomial and pointwise dual splittings differ at x=" + to_string(x));
  }
  for (std::size_t a = 0; a < conn.nE; ++a)
    for (std::size_t i = 0; i < conn.chart.size(); ++i)
      for (std::size_t b = 0; b < conn.nE; ++b)
        if (!(dual.Gamma(a, i, b) == -conn.Gamma(b, i, a)))
          return Verdict::fail("Γ* is not the negated transpose at (" + std::to_string(a + 1) + "," +
                               std::to_string(i + 1) + "," + std::to_string(b + 1) + ")");
  return Verdict::pass();
}

Outcome geo_metric(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  const std::size_t nE = c.sc.bundle.nE;
  std::vector<std::pair<std::string, MetricPair>> cases;
  if (c.sc.connection && c.sc.metric) cases.emplace_back("input", MetricPair{*c.sc.connection, *c.sc.metric});
  cases.emplace_back("random compatible", random_metric_pair(chart, nE, c.s, true));
  cases.emplace_back("random perturbed", random_metric_pair(chart, nE, c.s, false));
  for (const auto& [name, mp] : cases) {
    bool diagram;
    try {
      diagram = is_metric_connection(mp.conn, mp.g, c.s, c.samples).ok;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularMetric && name == "input") continue;
      throw;
    }
    Verdict v = agreement(name, {{"diagram", diagram}, {"identity", metric_identity(mp.conn, mp.g)}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_symmetry(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  const std::size_t n = chart.size();
  std::vector<std::pair<std::string, LinearConnection>> cases;
  if (c.sc.connection && c.sc.connection->nE == n) cases.emplace_back("input", *c.sc.connection);
  cases.emplace_back("random symmetric", random_connection(chart, n, c.s, true));
  cases.emplace_back("random", random_connection(chart, n, c.s, false));
  for (const auto& [name, conn] : cases) {
    Verdict v = agreement(name, {{"diagram", is_symmetric_connection(conn, c.s, c.samples).ok},
                                 {"lagrangian", horizontal_lagrangian_check(conn, c.s, c.samples).ok},
                                 {"christoffel", christoffel_symmetric(conn)}});
    if (!v) return v;
  }
  return Verdict::pass();
}

Outcome geo_kappa_alpha(Context& c) {
  const VarList& chart = c.sc.bundle.chart;
  const std::size_t n = chart.size();
  for (int t = 0; t < c.samples; ++t) {
    const RatVec x = c.s.vec(n), p = c.s.vec(n), xd = c.s.vec(n), pd = c.s.vec(n);
    const Element v{x, c.s.vec(n), c.s.vec(n), c.s.vec(n)};
    if (kappa_M(kappa_M(v)) != v) return Verdict::fail("κ_M is not an involution at " + to_string(v));
    const RatVec raw = t_star_t_to_raw(apply(alpha_M_morphism(chart, x), tt_star_from_raw(x, p, xd, pd)));
    RatVec expect = x;
    for (const RatVec* part : {&xd, &pd, &p}) expect.insert(expect.end(), part->begin(), part->end());
    if (raw != expect)
      return Verdict::fail("α_M(x,p,ẋ,ṗ) = " + to_string(raw) + ", expected " + to_string(expect));
  }
  return Verdict::pass();
}

Outcome geo_lifted_symplectic(Context& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.bundle.n(), 1);
  const TwoForm w = lifted_symplectic_form(n);
  PolyMatrix expect(4 * n, 4 * n, w.vars);
  const MultiPoly one = MultiPoly::constant(w.vars, 1);
  for (std::size_t i = 0; i < n; ++i) {
    expect(3 * n + i, i) = one;  // dṗ ∧ dx
    expect(i, 3 * n + i) = -one;
    expect(n + i, 2 * n + i) = one;  // dp ∧ dẋ
    expect(2 * n + i, n + i) = -one;
  }
  if (!(w.omega == expect)) return Verdict::fail("lifted form is not dṗ∧dx + dp∧dẋ");
  if (!is_closed(w)) return Verdict::fail("lifted form is not closed");
  return Verdict::pass();
}

// ---------------------------------------------------------------- connection checks

const LinearConnection& need_connection(const Context& c) {
  if (!c.sc.connection) throw Error(ErrorCode::InconsistentScenario, "scenario has no connection section");
  return *c.sc.connection;
}

Outcome conn_metric(Context& c) {
  if (!c.sc.metric) throw Error(ErrorCode::InconsistentScenario, "scenario has no metric section");
  return is_metric_connection(need_connection(c), *c.sc.metric, c.s, c.samples);
}

Outcome conn_symmetric(Context& c) {
  const LinearConnection& conn = need_connection(c);
  if (conn.nE != conn.chart.size()) throw Error(ErrorCode::InconsistentScenario, "symmetry needs n_E = n");
  return is_symmetric_connection(conn, c.s, c.samples);
}

Outcome conn_lagrangian(Context& c) {
  const LinearConnection& conn = need_connection(c);
  if (conn.nE != conn.chart.size()) throw Error(ErrorCode::InconsistentScenario, "lagrangian check needs n_E = n");
  return horizontal_lagrangian_check(conn, c.s, c.samples);
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"ring.axioms", "axioms", ring_axioms},
      {"ring.derivation", "axioms", ring_derivation},
      {"ring.eval_compose", "axioms", ring_eval_compose},
      {"ring.solve_roundtrip", "axioms", ring_solve},
      {"core.interchange", "axioms", core_interchange},
      {"core.core_agreement", "axioms", core_agreement},
      {"core.kernel_split", "axioms", core_kernel_split},
      {"core.unique_core_difference", "axioms", core_unique_difference},
      {"core.flip", "axioms", core_flip},
      {"core.morphism_linear", "axioms", core_morphism_linear},
      {"core.morphism_inverse", "axioms", core_morphism_inverse},
      {"duality.dual_is_dvb", "duality", dual_is_dvb},
      {"duality.pairing_bilinear", "duality", dual_pairing_bilinear},
      {"duality.single_valued_addition", "duality", dual_prop8},
      {"duality.special_pairings", "duality", dual_prop12},
      {"duality.double_dual_pairing", "duality", dual_prop15},
      {"duality.adjoint", "duality", dual_adjoint},
      {"duality.scalar_example", "duality", dual_scalar_example},
      {"duality.sign_identities", "duality", dual_sign_identities},
      {"duality.R_relation", "duality", dual_R_relation},
      {"third_dual.transport", "third-dual", third_transport},
      {"third_dual.naive_identification", "third-dual", third_naive},
      {"third_dual.scalar_example", "third-dual", third_scalar_example},
      {"third_dual.variant_identities", "third-dual", third_prop17},
      {"third_dual.R_grid", "third-dual", third_R_grid},
      {"geometry.vector_field", "geometry", geo_vector_field},
      {"geometry.one_form", "geometry", geo_one_form},
      {"geometry.linear_poisson", "geometry", geo_linear_poisson},
      {"geometry.jacobi", "geometry", geo_jacobi},
      {"geometry.closed_two_form", "geometry", geo_closed_two_form},
      {"geometry.omega_flat_blocks", "geometry", geo_omega_flat_blocks},
      {"geometry.dual_section", "geometry", geo_dual_section},
      {"geometry.complete_lifts", "geometry", geo_complete_lifts},
      {"geometry.vertical_lift", "geometry", geo_vertical_lift},
      {"geometry.dual_connection", "geometry", geo_dual_connection},
      {"geometry.metric_criterion", "geometry", geo_metric},
      {"geometry.symmetric_connection", "geometry", geo_symmetry},
      {"geometry.kappa_alpha", "geometry", geo_kappa_alpha},
      {"geometry.lifted_symplectic_form", "geometry", geo_lifted_symplectic},
      {"connection.metric", "connection-metric", conn_metric},
      {"connection.symmetric", "connection-symmetric", conn_symmetric},
      {"connection.lagrangian", "connection-lagrangian", conn_lagrangian},
  };
  return props;
}

bool in_suite(const Property& p, const std::string& suite, bool naive) {
  if (p.id == "third_dual.naive_identification" && !naive) return false;
  if (p.id == "third_dual.transport" && naive) return false;
  if (suite == "all") return p.suite.rfind("connection-", 0) != 0;
  return p.suite == suite;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",           "duality",
                                                 "third-dual",       "geometry",
                                                 "all",              "connection-metric",
                                                 "connection-symmetric", "connection-lagrangian"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::string> property_ids(const std::string& suite, bool naive) {
  std::vector<std::string> out;
  for (const auto& p : registry())
    if (in_suite(p, suite, naive)) out.push_back(p.id);
  std::sort(out.begin(), out.end());
  return out;
}

Report run_suite(const std::string& suite, const Scenario& scenario, const RunOptions& options) {
  if (!is_suite(suite)) throw Error(ErrorCode::Unsupported, "unknown suite '" + suite + "'");
  Report rep;
  rep.suite = suite;
  rep.source = options.scenario_path;
  rep.seed = scenario.sampling.seed;
  rep.samples = options.samples > 0 ? options.samples : scenario.sampling.samples;
  rep.naive_identification = options.naive_identification;
  rep.replay_args = options.replay_args;

  std::vector<const Property*> selected;
  for (const auto& p : registry())
    if (in_suite(p, suite, options.naive_identification) && (options.only.empty() || options.only == p.id))
      selected.push_back(&p);
  if (selected.empty()) throw Error(ErrorCode::Unsupported, "suite '" + suite + "' has no property '" + options.only + "'");
  std::sort(selected.begin(), selected.end(), [](const Property* a, const Property* b) { return a->id < b->id; });

  for (const Property* p : selected) {
    PropertyResult r;
    r.id = p->id;
    r.seed = property_seed(scenario.sampling.seed, p->id);
    Sampler s(r.seed, scenario.sampling.bound);
    Context ctx{scenario, s, rep.samples, options.naive_identification};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = p->fn(ctx);
      if (const auto* v = std::get_if<Verdict>(&out)) {
        r.status = v->ok ? Status::Pass : Status::Fail;
        r.detail = v->detail;
      } else {
        r.status = Status::Skip;
        r.detail = std::get<Skip>(out).why;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InconsistentScenario) throw;
      r.status = Status::Fail;
      r.detail = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace dvb
