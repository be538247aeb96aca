#pragma once

#include <string>

#include "harness/scenario.hpp"

namespace dvb::test {

inline MultiPoly poly(const VarList& vars, const std::string& expr) {
  return parse_poly("\"" + expr + "\"", vars);
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace dvb::test

#include "core/morphism.hpp"

namespace dvb::test {

/// Rank-(1,1,1) morphism with constant blocks over an n-dimensional chart.
inline Morphism scalar_morphism(std::size_t n, const Rational& l, const Rational& c, const Rational& r,
                                const Rational& psi) {
  Bundle b = make_bundle(n, 1, 1, 1);
  Morphism m;
  m.source = b;
  m.target = b;
  m.L = PolyMatrix::constant(RatMatrix{{l}}, b.chart);
  m.C = PolyMatrix::constant(RatMatrix{{c}}, b.chart);
  m.R = PolyMatrix::constant(RatMatrix{{r}}, b.chart);
  m.Psi = PolyTensor3(1, 1, 1, MultiPoly::constant(b.chart, psi));
  return m;
}

inline Element el(RatVec x, RatVec f, RatVec c, RatVec e) {
  return Element{std::move(x), std::move(f), std::move(c), std::move(e)};
}

}  // namespace dvb::test
