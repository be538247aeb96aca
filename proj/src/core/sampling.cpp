#include "core/sampling.hpp"

#include "error.hpp"

namespace dvb {

Element random_element(const Bundle& b, Sampler& s, const RatVec& x) {
  Element v;
  v.x = x;
  v.f = s.vec(b.nF);
  v.c = s.vec(b.nC);
  v.e = s.vec(b.nE);
  return v;
}

std::pair<Element, Element> random_pair(Side side, const Bundle& b, Sampler& s, const RatVec& x) {
  Element u = random_element(b, s, x);
  Element v = random_element(b, s, x);
  if (side == Side::Right) v.e = u.e;
  else v.f = u.f;
  return {u, v};
}

const char* side_name(Side side) { return side == Side::Right ? "right" : "left"; }

Verdict check_function_linear(const Bundle& b, const ScalarFn& fn, Sampler& s, int samples,
                              std::initializer_list<Side> sides) {
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(b.n());
    for (Side side : sides) {
      auto [u, v] = random_pair(side, b, s, x);
      const Rational lhs = fn(fiber_add(side, u, v));
      const Rational rhs = fn(u) + fn(v);
      if (lhs != rhs)
        return Verdict::fail(std::string(side_name(side)) + " additivity fails: u=" + to_string(u) +
                             " v=" + to_string(v) + " F(u+v)=" + lhs.get_str() + " F(u)+F(v)=" + rhs.get_str());
      const Rational r = s.rational();
      if (fn(fiber_scale(side, r, u)) != r * fn(u))
        return Verdict::fail(std::string(side_name(side)) + " homogeneity fails: r=" + r.get_str() +
                             " u=" + to_string(u));
    }
  }
  return Verdict::pass();
}

Verdict check_map_linear(const Bundle& source, const Bundle& target, const ElementMap& g, Sampler& s, int samples,
                         std::initializer_list<Side> sides) {
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(source.n());
    for (Side side : sides) {
      auto [u, v] = random_pair(side, source, s, x);
      const Element gu = g(u), gv = g(v);
      check_member(target, gu);
      if (gu.x != u.x) return Verdict::fail("base point moved: " + to_string(u) + " -> " + to_string(gu));
      Element sum;
      try {
        sum = fiber_add(side, gu, gv);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::FiberMismatch) throw;
        return Verdict::fail(std::string("images of a ") + side_name(side) + "-compatible pair are not compatible: " +
                             to_string(u) + ", " + to_string(v) + " -> " + to_string(gu) + ", " + to_string(gv));
      }
      const Element lhs = g(fiber_add(side, u, v));
      if (lhs != sum)
        return Verdict::fail(std::string(side_name(side)) + " additivity fails: u=" + to_string(u) +
                             " v=" + to_string(v) + " G(u+v)=" + to_string(lhs) + " G(u)+G(v)=" + to_string(sum));
      const Rational r = s.rational();
      const Element scaled = g(fiber_scale(side, r, u));
      if (scaled != fiber_scale(side, r, gu))
        return Verdict::fail(std::string(side_name(side)) + " homogeneity fails: r=" + r.get_str() +
                             " u=" + to_string(u) + " G(r·u)=" + to_string(scaled));
    }
  }
  return Verdict::pass();
}

}  // namespace dvb
