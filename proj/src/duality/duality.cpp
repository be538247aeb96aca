#include "duality/duality.hpp"

#include "error.hpp"

namespace dvb {

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

Bundle right_dual(const Bundle& b) {
  Bundle out;
  out.chart = b.chart;
  out.nF = b.nE;
  out.nC = b.nF;
  out.nE = b.nC;
  out.F = b.E;
  out.C = dual_label(b.F);
  out.E = dual_label(b.C);
  return out;
}

Bundle left_dual(const Bundle& b) { return flip(right_dual(flip(b))); }

Rational pair_r(const Element& v, const Element& a) {
  if (v.x != a.x) throw Error(ErrorCode::BaseMismatch, "pairing across different base points");
  if (v.e != a.f)
    throw Error(ErrorCode::ProjectionMismatch, "dual element lies over " + to_string(a.f) + ", not " + to_string(v.e));
  if (a.c.size() != v.f.size() || a.e.size() != v.c.size())
    throw Error(ErrorCode::ShapeMismatch, "dual element has wrong ranks");
  return dot(a.c, v.f) + dot(a.e, v.c);
}

Rational pair_l(const Element& v, const Element& b) { return pair_r(flip(v), flip(b)); }

PointMorphism right_dual_morphism(const PointMorphism& m) {
  m.validate();
  if (!m.R.is_square()) throw Error(ErrorCode::Singular, "R block is not square");
  const RatMatrix rinv = m.R.inverse();
  PointMorphism out;
  out.source = right_dual(m.target);
  out.target = right_dual(m.source);
  out.x = m.x;
  out.L = rinv;
  out.C = m.L.transpose();
  out.R = m.C.transpose();
  const std::size_t nF = m.source.nF, nCt = m.target.nC, nEt = m.target.nE, nE = m.source.nE;
  out.Psi = RatTensor3(nF, nCt, nEt, Rational(0));
  for (std::size_t A = 0; A < nF; ++A)
    for (std::size_t g = 0; g < nCt; ++g)
      for (std::size_t ap = 0; ap < nEt; ++ap) {
        Rational acc = 0;
        for (std::size_t a = 0; a < nE; ++a) acc += m.Psi(g, a, A) * rinv(a, ap);
        out.Psi(A, g, ap) = acc;
      }
  return out;
}

PointMorphism left_dual_morphism(const PointMorphism& m) { return flip(right_dual_morphism(flip(m))); }

Morphism right_dual_morphism(const Morphism& m) {
  m.validate();
  const PolyMatrix rinv = m.R.inverse_unimodular();
  const VarList& vars = m.source.chart;
  Morphism out;
  out.source = right_dual(m.target);
  out.target = right_dual(m.source);
  out.L = rinv;
  out.C = m.L.transpose();
  out.R = m.C.transpose();
  const std::size_t nF = m.source.nF, nCt = m.target.nC, nEt = m.target.nE, nE = m.source.nE;
  out.Psi = PolyTensor3(nF, nCt, nEt, MultiPoly(vars));
  for (std::size_t A = 0; A < nF; ++A)
    for (std::size_t g = 0; g < nCt; ++g)
      for (std::size_t ap = 0; ap < nEt; ++ap) {
        MultiPoly acc(vars);
        for (std::size_t a = 0; a < nE; ++a)
          if (!m.Psi(g, a, A).is_zero()) acc += m.Psi(g, a, A) * rinv(a, ap);
        out.Psi(A, g, ap) = std::move(acc);
      }
  return out;
}

Morphism left_dual_morphism(const Morphism& m) { return flip(right_dual_morphism(flip(m))); }

PointMorphism third_right_dual(const PointMorphism& m) {
  return right_dual_morphism(right_dual_morphism(right_dual_morphism(m)));
}

const char* variant_name(RVariant v) {
  switch (v) {
    case RVariant::R: return "R";
    case RVariant::PlusMinus: return "R+-";
    case RVariant::MinusPlus: return "R-+";
    case RVariant::Equal: return "R=";
  }
  return "?";
}

std::pair<int, int> variant_signs(RVariant v) {
  switch (v) {
    case RVariant::R: return {1, 1};
    case RVariant::PlusMinus: return {1, -1};
    case RVariant::MinusPlus: return {-1, 1};
    case RVariant::Equal: return {-1, -1};
  }
  return {1, 1};
}

namespace {

struct SlotSigns {
  int f, c, e;
};

SlotSigns slot_signs(RVariant v) {
  switch (v) {
    case RVariant::R: return {1, -1, 1};
    case RVariant::PlusMinus: return {1, 1, -1};
    case RVariant::MinusPlus: return {-1, 1, 1};
    case RVariant::Equal: return {-1, -1, -1};
  }
  return {1, 1, 1};
}

}  // namespace

Element canonical_R(RVariant variant, const Element& v) {
  const SlotSigns s = slot_signs(variant);
  return {v.x, vscale(s.f, v.f), vscale(s.c, v.c), vscale(s.e, v.e)};
}

PointMorphism canonical_R_morphism(RVariant variant, const Bundle& b, const RatVec& x) {
  const SlotSigns s = slot_signs(variant);
  PointMorphism m;
  m.source = b;
  m.target = right_dual(right_dual(right_dual(b)));
  m.x = x;
  m.L = RatMatrix::scalar(b.nF, s.f);
  m.C = RatMatrix::scalar(b.nC, s.c);
  m.R = RatMatrix::scalar(b.nE, s.e);
  m.Psi = RatTensor3(b.nC, b.nE, b.nF, Rational(0));
  return m;
}

bool R_relation_holds(RVariant variant, const Element& v, const Element& a, const Element& alpha, const Element& phi) {
  const auto [s1, s2] = variant_signs(variant);
  return pair_r(a, alpha) == s1 * pair_r(v, a) + s2 * pair_r(alpha, phi);
}

PointMorphism third_dual_transport(const PointMorphism& m, bool naive) {
  const PointMorphism t = third_right_dual(m);
  PointMorphism into_target, out_of_source;
  if (naive) {
    into_target = identity_morphism_at(m.target, m.x);
    into_target.target = t.source;
    out_of_source = identity_morphism_at(t.target, m.x);
    out_of_source.target = m.source;
  } else {
    into_target = canonical_R_morphism(RVariant::R, m.target, m.x);
    out_of_source = inverse(canonical_R_morphism(RVariant::R, m.source, m.x));
  }
  return compose(out_of_source, compose(t, into_target));
}

}  // namespace dvb
