#include "geomech/connection.hpp"

#include <map>

#include "core/bundle.hpp"
#include "duality/duality.hpp"
#include "error.hpp"

namespace dvb {

void LinearConnection::validate() const {
  if (Gamma.dim0() != nE || Gamma.dim1() != chart.size() || Gamma.dim2() != nE)
    throw Error(ErrorCode::ShapeMismatch, "Christoffel array must have shape (nE, n, nE)");
}

LinearConnection zero_connection(const VarList& chart, std::size_t nE) {
  return {chart, nE, PolyTensor3(nE, chart.size(), nE, MultiPoly(chart))};
}

LinearConnection random_connection(const VarList& chart, std::size_t nE, Sampler& s, bool symmetric) {
  LinearConnection conn = zero_connection(chart, nE);
  const std::size_t n = chart.size();
  for (std::size_t a = 0; a < nE; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < nE; ++b) conn.Gamma(a, i, b) = random_poly(chart, s, 1, 2);
  if (symmetric) {
    if (nE != n) throw Error(ErrorCode::ShapeMismatch, "symmetry needs E = TM");
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) conn.Gamma(a, j, i) = conn.Gamma(a, i, j);
  }
  return conn;
}

Morphism connection_splitting(const LinearConnection& conn) {
  conn.validate();
  const Bundle te = tangent_prolongation(conn.chart, conn.nE);
  Morphism D = identity_morphism(te);
  for (std::size_t a = 0; a < conn.nE; ++a)
    for (std::size_t b = 0; b < conn.nE; ++b)
      for (std::size_t i = 0; i < conn.chart.size(); ++i) D.Psi(a, b, i) = conn.Gamma(a, i, b);
  return D;
}

LinearConnection christoffel_from_splitting(const Morphism& D) {
  D.validate();
  const std::size_t n = D.source.n(), nE = D.source.nE;
  if (D.source.nF != n || D.source.nC != nE || !D.source.same_shape(D.target))
    throw Error(ErrorCode::Unsupported, "not a splitting of a tangent prolongation");
  if (!(D.L == PolyMatrix::identity(n, D.source.chart)) || !(D.C == PolyMatrix::identity(nE, D.source.chart)) ||
      !(D.R == PolyMatrix::identity(nE, D.source.chart)))
    throw Error(ErrorCode::Unsupported, "splitting has non-identity induced maps");
  LinearConnection conn = zero_connection(D.source.chart, nE);
  for (std::size_t a = 0; a < nE; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < nE; ++b) conn.Gamma(a, i, b) = D.Psi(a, b, i);
  return conn;
}

Morphism dual_splitting(const LinearConnection& conn) {
  return flip(inverse_unimodular(left_dual_morphism(connection_splitting(conn))));
}

PointMorphism dual_splitting_at(const LinearConnection& conn, const RatVec& x) {
  return flip(inverse(left_dual_morphism(evaluate(connection_splitting(conn), x))));
}

LinearConnection dual_connection(const LinearConnection& conn) {
  Morphism Dstar = dual_splitting(conn);
  Dstar.source.F = Dstar.target.F = "TM";
  return christoffel_from_splitting(Dstar);
}

Verdict leibniz_check(const LinearConnection& conn, const LinearConnection& dual, Sampler& s, int samples) {
  const Morphism D = connection_splitting(conn);
  const Morphism Dstar = connection_splitting(dual);
  const std::size_t n = conn.chart.size(), nE = conn.nE;
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(n), xdot = s.vec(n);
    const RatVec e = s.vec(nE), edot = s.vec(nE);
    const RatVec p = s.vec(nE), pdot = s.vec(nE);
    const Element de = apply(D, Element{x, xdot, edot, e});
    const Element dp = apply(Dstar, Element{x, xdot, pdot, p});
    const Rational lhs = dot(de.c, p) + dot(e, dp.c);
    const Rational rhs = dot(edot, p) + dot(e, pdot);
    if (lhs != rhs)
      return Verdict::fail("Leibniz rule fails at x=" + to_string(x) + " xdot=" + to_string(xdot) + " e=" + to_string(e) +
                           " p=" + to_string(p) + ": " + lhs.get_str() + " != " + rhs.get_str());
  }
  return Verdict::pass();
}

void Metric::validate() const {
  if (g.rows() != g.cols()) throw Error(ErrorCode::ShapeMismatch, "metric must be square");
  if (!(g == g.transpose())) throw Error(ErrorCode::ShapeMismatch, "metric is not symmetric");
}

Element metric_tangent(const Metric& g, const Element& v) {
  const RatMatrix gx = g.g.eval(v.x);
  RatVec c = gx.apply(v.c);
  for (std::size_t i = 0; i < v.x.size(); ++i) {
    if (v.f[i] == 0) continue;
    PolyMatrix di(g.g.rows(), g.g.cols(), g.chart);
    for (std::size_t a = 0; a < g.g.rows(); ++a)
      for (std::size_t b = 0; b < g.g.cols(); ++b) di(a, b) = g.g(a, b).partial(i);
    c = vadd(c, vscale(v.f[i], di.eval(v.x).apply(v.e)));
  }
  return {v.x, v.f, c, gx.apply(v.e)};
}

Verdict is_metric_connection(const LinearConnection& conn, const Metric& g, Sampler& s, int samples) {
  conn.validate();
  g.validate();
  if (g.g.rows() != conn.nE) throw Error(ErrorCode::ShapeMismatch, "metric rank differs from the connection's");
  const Morphism D = connection_splitting(conn);
  const Bundle te = tangent_prolongation(conn.chart, conn.nE);
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(conn.chart.size());
    const RatMatrix gx = g.g.eval(x);
    if (gx.determinant() == 0) throw Error(ErrorCode::SingularMetric, "det g vanishes at x=" + to_string(x));
    const PointMorphism Dstar = dual_splitting_at(conn, x);
    Element v{x, s.vec(te.nF), s.vec(te.nC), s.vec(te.nE)};
    const Element dv = apply(D, v);
    const Element lhs{x, dv.f, gx.apply(dv.c), gx.apply(dv.e)};
    const Element rhs = apply(Dstar, metric_tangent(g, v));
    if (lhs != rhs)
      return Verdict::fail("metric diagram fails at v=" + to_string(v) + ": " + to_string(lhs) + " vs " + to_string(rhs));
  }
  return Verdict::pass();
}

bool metric_identity(const LinearConnection& conn, const Metric& g) {
  conn.validate();
  const std::size_t n = conn.chart.size(), nE = conn.nE;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t b = 0; b < nE; ++b) {
        MultiPoly rhs(conn.chart);
        for (std::size_t c = 0; c < nE; ++c) rhs += g.g(a, c) * conn.Gamma(c, i, b) + conn.Gamma(c, i, a) * g.g(c, b);
        if (!(g.g(a, b).partial(i) == rhs)) return false;
      }
  return true;
}

MetricPair random_metric_pair(const VarList& chart, std::size_t nE, Sampler& s, bool compatible) {
  const std::size_t n = chart.size();
  PolyMatrix P = PolyMatrix::identity(nE, chart);
  for (std::size_t a = 0; a < nE; ++a)
    for (std::size_t b = a + 1; b < nE; ++b) P(a, b) = random_poly(chart, s, 1, 2);
  const PolyMatrix Pinv = P.inverse_unimodular();
  const PolyMatrix g = P.transpose() * P;
  const PolyMatrix ginv = Pinv * Pinv.transpose();
  MetricPair out{zero_connection(chart, nE), Metric{chart, g}};
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix dP(nE, nE, chart), A(nE, nE, chart);
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t b = 0; b < nE; ++b) dP(a, b) = P(a, b).partial(i);
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t b = a + 1; b < nE; ++b) {
        A(a, b) = random_poly(chart, s, 1, 1);
        A(b, a) = -A(a, b);
      }
    const PolyMatrix Gi = Pinv * dP + ginv * A;
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t b = 0; b < nE; ++b) out.conn.Gamma(a, i, b) = Gi(a, b);
  }
  if (!compatible && n > 0 && nE > 0) {
    const auto a = static_cast<std::size_t>(s.integer(0, static_cast<long>(nE) - 1));
    const auto i = static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 1));
    out.conn.Gamma(a, i, a) += MultiPoly::constant(chart, s.nonzero());
  }
  return out;
}

Element kappa_M(const Element& v) { return flip(v); }

PointMorphism kappa_M_morphism(const VarList& chart, const RatVec& x) {
  const Bundle ttm = tangent_prolongation(chart, chart.size());
  PointMorphism m = identity_morphism_at(ttm, x);
  m.target = flip(ttm);
  return m;
}

Element kappa_triple(const Element& v) { return flip(v); }

PointMorphism alpha_M_morphism(const VarList& chart, const RatVec& x) {
  return right_dual_morphism(kappa_M_morphism(chart, x));
}

Element tt_star_from_raw(const RatVec& x, const RatVec& p, const RatVec& xdot, const RatVec& pdot) {
  return {x, xdot, pdot, p};
}

RatVec t_star_t_to_raw(const Element& v) {
  RatVec out = v.x;
  out.insert(out.end(), v.f.begin(), v.f.end());
  out.insert(out.end(), v.c.begin(), v.c.end());
  out.insert(out.end(), v.e.begin(), v.e.end());
  return out;
}

Verdict is_symmetric_connection(const LinearConnection& conn, Sampler& s, int samples) {
  conn.validate();
  if (conn.nE != conn.chart.size()) throw Error(ErrorCode::ShapeMismatch, "symmetry needs E = TM");
  const Morphism D = connection_splitting(conn);
  const std::size_t n = conn.chart.size();
  for (int k = 0; k < samples; ++k) {
    const Element v{s.vec(n), s.vec(n), s.vec(n), s.vec(n)};
    const Element lhs = kappa_triple(apply(D, v));
    const Element rhs = apply(D, kappa_M(v));
    if (lhs != rhs)
      return Verdict::fail("κ∘D != J(D)∘κ_M at v=" + to_string(v) + ": " + to_string(lhs) + " vs " + to_string(rhs));
  }
  return Verdict::pass();
}

bool christoffel_symmetric(const LinearConnection& conn) {
  conn.validate();
  if (conn.nE != conn.chart.size()) throw Error(ErrorCode::ShapeMismatch, "symmetry needs E = TM");
  const std::size_t n = conn.nE;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(conn.Gamma(l, i, j) == conn.Gamma(l, j, i))) return false;
  return true;
}

TwoForm lifted_symplectic_form(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  const VarList vars(std::move(names));
  OneForm liouville{vars, std::vector<MultiPoly>(2 * n, MultiPoly(vars))};
  for (std::size_t i = 0; i < n; ++i) liouville.coeffs[i] = MultiPoly::variable(vars, n + i);
  return exterior_derivative(tangent_lift(liouville));
}

Verdict horizontal_lagrangian_check(const LinearConnection& conn, Sampler& s, int samples) {
  conn.validate();
  if (conn.nE != conn.chart.size()) throw Error(ErrorCode::ShapeMismatch, "lagrangian test needs E = TM");
  const std::size_t n = conn.nE;
  static thread_local std::map<std::size_t, TwoForm> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, lifted_symplectic_form(n)).first;
  const TwoForm& omega = it->second;
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(n), p = s.vec(n);
    const PointMorphism Dstar = dual_splitting_at(conn, x);
    const RatMatrix Cinv = Dstar.C.inverse();
    // Horizontal lift of ∂_k: covariant part of D*(e_k; pdot; p) vanishes.
    std::vector<RatVec> basis;
    for (std::size_t kk = 0; kk < n; ++kk) {
      RatVec xdot = zeros(n);
      xdot[kk] = 1;
      const RatVec pdot = vneg(Cinv.apply(contract_psi(Dstar.Psi, xdot, p)));
      RatVec u = xdot;
      u.insert(u.end(), pdot.begin(), pdot.end());
      basis.push_back(std::move(u));
    }
    RatVec point = x;
    point.insert(point.end(), p.begin(), p.end());
    point.resize(4 * n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        RatVec vert = zeros(2 * n), hor = basis[b];
        vert.insert(vert.end(), basis[a].begin(), basis[a].end());
        hor.resize(4 * n, Rational(0));
        const Rational val = evaluate(omega, point, vert, hor);
        if (val != 0)
          return Verdict::fail("ω(h_" + std::to_string(a + 1) + ", h_" + std::to_string(b + 1) + ") = " + val.get_str() +
                               " at x=" + to_string(x) + " p=" + to_string(p));
      }
  }
  return Verdict::pass();
}

}  // namespace dvb
