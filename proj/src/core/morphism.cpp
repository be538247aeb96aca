#include "core/morphism.hpp"

#include "error.hpp"

namespace dvb {

namespace {

void check_block(const char* name, std::size_t rows, std::size_t cols, std::size_t want_rows, std::size_t want_cols) {
  if (rows != want_rows || cols != want_cols)
    throw Error(ErrorCode::ShapeMismatch, std::string("block ") + name + " is " + std::to_string(rows) + "x" +
                                              std::to_string(cols) + ", expected " + std::to_string(want_rows) + "x" +
                                              std::to_string(want_cols));
}

void check_psi(std::size_t d0, std::size_t d1, std::size_t d2, const Bundle& s, const Bundle& t) {
  if (d0 != t.nC || d1 != s.nE || d2 != s.nF)
    throw Error(ErrorCode::ShapeMismatch, "Psi has shape (" + std::to_string(d0) + "," + std::to_string(d1) + "," +
                                              std::to_string(d2) + "), expected (" + std::to_string(t.nC) + "," +
                                              std::to_string(s.nE) + "," + std::to_string(s.nF) + ")");
}

}  // namespace

void Morphism::validate() const {
  if (!(source.chart == target.chart)) throw Error(ErrorCode::ShapeMismatch, "source and target charts differ");
  check_block("L", L.rows(), L.cols(), target.nF, source.nF);
  check_block("C", C.rows(), C.cols(), target.nC, source.nC);
  check_block("R", R.rows(), R.cols(), target.nE, source.nE);
  check_psi(Psi.dim0(), Psi.dim1(), Psi.dim2(), source, target);
}

void PointMorphism::validate() const {
  if (!(source.chart == target.chart)) throw Error(ErrorCode::ShapeMismatch, "source and target charts differ");
  if (x.size() != source.n()) throw Error(ErrorCode::ArityMismatch, "base point has wrong dimension");
  check_block("L", L.rows(), L.cols(), target.nF, source.nF);
  check_block("C", C.rows(), C.cols(), target.nC, source.nC);
  check_block("R", R.rows(), R.cols(), target.nE, source.nE);
  check_psi(Psi.dim0(), Psi.dim1(), Psi.dim2(), source, target);
}

namespace {

std::string matrix_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const PointMorphism& m) {
  std::string out = "L=" + matrix_string(m.L) + " C=" + matrix_string(m.C) + " R=" + matrix_string(m.R) + " Psi=[";
  bool first = true;
  for (std::size_t g = 0; g < m.Psi.dim0(); ++g)
    for (std::size_t a = 0; a < m.Psi.dim1(); ++a)
      for (std::size_t A = 0; A < m.Psi.dim2(); ++A) {
        if (!first) out += ", ";
        first = false;
        out += m.Psi(g, a, A).get_str();
      }
  return out + "]";
}

Morphism identity_morphism(const Bundle& b) {
  Morphism m;
  m.source = m.target = b;
  m.L = PolyMatrix::identity(b.nF, b.chart);
  m.C = PolyMatrix::identity(b.nC, b.chart);
  m.R = PolyMatrix::identity(b.nE, b.chart);
  m.Psi = PolyTensor3(b.nC, b.nE, b.nF, MultiPoly(b.chart));
  return m;
}

PointMorphism identity_morphism_at(const Bundle& b, const RatVec& x) {
  PointMorphism m;
  m.source = m.target = b;
  m.x = x;
  m.L = RatMatrix::identity(b.nF);
  m.C = RatMatrix::identity(b.nC);
  m.R = RatMatrix::identity(b.nE);
  m.Psi = RatTensor3(b.nC, b.nE, b.nF, Rational(0));
  return m;
}

PointMorphism evaluate(const Morphism& m, std::span<const Rational> x) {
  m.validate();
  if (x.size() != m.source.n()) throw Error(ErrorCode::ArityMismatch, "base point has wrong dimension");
  PointMorphism p;
  p.source = m.source;
  p.target = m.target;
  p.x.assign(x.begin(), x.end());
  p.L = m.L.eval(x);
  p.C = m.C.eval(x);
  p.R = m.R.eval(x);
  p.Psi = RatTensor3(m.Psi.dim0(), m.Psi.dim1(), m.Psi.dim2(), Rational(0));
  for (std::size_t g = 0; g < m.Psi.dim0(); ++g)
    for (std::size_t a = 0; a < m.Psi.dim1(); ++a)
      for (std::size_t A = 0; A < m.Psi.dim2(); ++A) p.Psi(g, a, A) = m.Psi(g, a, A).eval(x);
  return p;
}

RatVec contract_psi(const RatTensor3& psi, const RatVec& f, const RatVec& e) {
  RatVec out(psi.dim0(), Rational(0));
  for (std::size_t g = 0; g < psi.dim0(); ++g)
    for (std::size_t a = 0; a < psi.dim1(); ++a) {
      if (e[a] == 0) continue;
      for (std::size_t A = 0; A < psi.dim2(); ++A) out[g] += psi(g, a, A) * e[a] * f[A];
    }
  return out;
}

Element apply(const PointMorphism& m, const Element& v) {
  check_member(m.source, v);
  if (v.x != m.x) throw Error(ErrorCode::BaseMismatch, "element is not over the morphism's base point");
  return {v.x, m.L.apply(v.f), vadd(m.C.apply(v.c), contract_psi(m.Psi, v.f, v.e)), m.R.apply(v.e)};
}

Element apply(const Morphism& m, const Element& v) {
  check_member(m.source, v);
  return apply(evaluate(m, v.x), v);
}

namespace {

void require_composable(const Bundle& mid_out, const Bundle& mid_in) {
  if (!mid_out.same_shape(mid_in))
    throw Error(ErrorCode::ShapeMismatch, "target of the first morphism is not the source of the second");
}

}  // namespace

Morphism compose(const Morphism& second, const Morphism& first) {
  first.validate();
  second.validate();
  require_composable(first.target, second.source);
  Morphism out;
  out.source = first.source;
  out.target = second.target;
  out.L = second.L * first.L;
  out.C = second.C * first.C;
  out.R = second.R * first.R;
  const VarList& vars = first.source.chart;
  const std::size_t nC2 = second.target.nC, nE = first.source.nE, nF = first.source.nF;
  out.Psi = PolyTensor3(nC2, nE, nF, MultiPoly(vars));
  for (std::size_t g = 0; g < nC2; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        MultiPoly acc(vars);
        for (std::size_t d = 0; d < first.target.nC; ++d) acc += second.C(g, d) * first.Psi(d, a, A);
        for (std::size_t b = 0; b < first.target.nE; ++b)
          for (std::size_t B = 0; B < first.target.nF; ++B)
            if (!second.Psi(g, b, B).is_zero()) acc += second.Psi(g, b, B) * first.R(b, a) * first.L(B, A);
        out.Psi(g, a, A) = std::move(acc);
      }
  return out;
}

PointMorphism compose(const PointMorphism& second, const PointMorphism& first) {
  require_composable(first.target, second.source);
  if (first.x != second.x) throw Error(ErrorCode::BaseMismatch, "morphisms are evaluated at different base points");
  PointMorphism out;
  out.source = first.source;
  out.target = second.target;
  out.x = first.x;
  out.L = second.L * first.L;
  out.C = second.C * first.C;
  out.R = second.R * first.R;
  const std::size_t nC2 = second.target.nC, nE = first.source.nE, nF = first.source.nF;
  out.Psi = RatTensor3(nC2, nE, nF, Rational(0));
  for (std::size_t g = 0; g < nC2; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        Rational acc = 0;
        for (std::size_t d = 0; d < first.target.nC; ++d) acc += second.C(g, d) * first.Psi(d, a, A);
        for (std::size_t b = 0; b < first.target.nE; ++b)
          for (std::size_t B = 0; B < first.target.nF; ++B) acc += second.Psi(g, b, B) * first.R(b, a) * first.L(B, A);
        out.Psi(g, a, A) = acc;
      }
  return out;
}

PointMorphism inverse(const PointMorphism& m) {
  m.validate();
  if (!m.L.is_square() || !m.C.is_square() || !m.R.is_square())
    throw Error(ErrorCode::Singular, "non-square block cannot be inverted");
  PointMorphism out;
  out.source = m.target;
  out.target = m.source;
  out.x = m.x;
  out.L = m.L.inverse();
  out.C = m.C.inverse();
  out.R = m.R.inverse();
  // Psi' = -C^{-1} Psi(L^{-1} ., R^{-1} .)
  const std::size_t nC = m.source.nC, nE = m.source.nE, nF = m.source.nF;
  RatTensor3 pulled(nC, nE, nF, Rational(0));
  for (std::size_t g = 0; g < nC; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        Rational acc = 0;
        for (std::size_t b = 0; b < nE; ++b)
          for (std::size_t B = 0; B < nF; ++B) acc += m.Psi(g, b, B) * out.R(b, a) * out.L(B, A);
        pulled(g, a, A) = acc;
      }
  out.Psi = RatTensor3(nC, nE, nF, Rational(0));
  for (std::size_t g = 0; g < nC; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        Rational acc = 0;
        for (std::size_t d = 0; d < nC; ++d) acc -= out.C(g, d) * pulled(d, a, A);
        out.Psi(g, a, A) = acc;
      }
  return out;
}

PointMorphism inverse_at(const Morphism& m, std::span<const Rational> x) { return inverse(evaluate(m, x)); }

Morphism inverse_unimodular(const Morphism& m) {
  m.validate();
  Morphism out;
  out.source = m.target;
  out.target = m.source;
  out.L = m.L.inverse_unimodular();
  out.C = m.C.inverse_unimodular();
  out.R = m.R.inverse_unimodular();
  const VarList& vars = m.source.chart;
  const std::size_t nC = m.source.nC, nE = m.source.nE, nF = m.source.nF;
  PolyTensor3 pulled(nC, nE, nF, MultiPoly(vars));
  for (std::size_t g = 0; g < nC; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        MultiPoly acc(vars);
        for (std::size_t b = 0; b < nE; ++b)
          for (std::size_t B = 0; B < nF; ++B)
            if (!m.Psi(g, b, B).is_zero()) acc += m.Psi(g, b, B) * out.R(b, a) * out.L(B, A);
        pulled(g, a, A) = std::move(acc);
      }
  out.Psi = PolyTensor3(nC, nE, nF, MultiPoly(vars));
  for (std::size_t g = 0; g < nC; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) {
        MultiPoly acc(vars);
        for (std::size_t d = 0; d < nC; ++d) acc -= out.C(g, d) * pulled(d, a, A);
        out.Psi(g, a, A) = std::move(acc);
      }
  return out;
}

Morphism flip(const Morphism& m) {
  Morphism out;
  out.source = flip(m.source);
  out.target = flip(m.target);
  out.L = m.R;
  out.C = m.C;
  out.R = m.L;
  out.Psi = PolyTensor3(m.Psi.dim0(), m.Psi.dim2(), m.Psi.dim1(), MultiPoly(m.source.chart));
  for (std::size_t g = 0; g < m.Psi.dim0(); ++g)
    for (std::size_t a = 0; a < m.Psi.dim1(); ++a)
      for (std::size_t A = 0; A < m.Psi.dim2(); ++A) out.Psi(g, A, a) = m.Psi(g, a, A);
  return out;
}

PointMorphism flip(const PointMorphism& m) {
  PointMorphism out;
  out.source = flip(m.source);
  out.target = flip(m.target);
  out.x = m.x;
  out.L = m.R;
  out.C = m.C;
  out.R = m.L;
  out.Psi = RatTensor3(m.Psi.dim0(), m.Psi.dim2(), m.Psi.dim1(), Rational(0));
  for (std::size_t g = 0; g < m.Psi.dim0(); ++g)
    for (std::size_t a = 0; a < m.Psi.dim1(); ++a)
      for (std::size_t A = 0; A < m.Psi.dim2(); ++A) out.Psi(g, A, a) = m.Psi(g, a, A);
  return out;
}

}  // namespace dvb
