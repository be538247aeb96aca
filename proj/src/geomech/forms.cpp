#include "geomech/forms.hpp"

#include "error.hpp"

namespace dvb {

VarList tangent_vars(const VarList& vars) {
  std::vector<std::string> names = vars.names();
  for (const auto& n : vars.names()) names.push_back("d" + n);
  return VarList(std::move(names));
}

OneForm tangent_lift(const OneForm& theta) {
  const std::size_t N = theta.vars.size();
  const VarList lifted = tangent_vars(theta.vars);
  OneForm out{lifted, std::vector<MultiPoly>(2 * N, MultiPoly(lifted))};
  for (std::size_t I = 0; I < N; ++I) {
    const MultiPoly t = theta.coeffs[I].embed(lifted);
    MultiPoly acc(lifted);
    for (std::size_t J = 0; J < N; ++J) acc += t.partial(J) * MultiPoly::variable(lifted, N + J);
    out.coeffs[I] = std::move(acc);
    out.coeffs[N + I] = t;
  }
  return out;
}

TwoForm exterior_derivative(const OneForm& theta) {
  const std::size_t N = theta.vars.size();
  if (theta.coeffs.size() != N) throw Error(ErrorCode::ShapeMismatch, "1-form needs one coefficient per coordinate");
  TwoForm out{theta.vars, PolyMatrix(N, N, theta.vars)};
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = 0; J < N; ++J) out.omega(I, J) = theta.coeffs[J].partial(I) - theta.coeffs[I].partial(J);
  return out;
}

bool is_closed(const TwoForm& w) {
  const std::size_t N = w.vars.size();
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = I + 1; J < N; ++J)
      for (std::size_t K = J + 1; K < N; ++K) {
        const MultiPoly cyc = w.omega(J, K).partial(I) + w.omega(K, I).partial(J) + w.omega(I, J).partial(K);
        if (!cyc.is_zero()) return false;
      }
  return true;
}

Rational evaluate(const TwoForm& w, const RatVec& point, const RatVec& u, const RatVec& v) {
  const RatMatrix m = w.omega.eval(point);
  return dot(u, m.apply(v));
}

void LinearTwoForm::validate() const {
  const std::size_t n = chart.size();
  if (omega_ija.dim0() != n || omega_ija.dim1() != n || omega_ija.dim2() != nE)
    throw Error(ErrorCode::ShapeMismatch, "omega_ija must have shape (n, n, nE)");
  if (omega_ia.rows() != n || omega_ia.cols() != nE) throw Error(ErrorCode::ShapeMismatch, "omega_ia must be n x nE");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < nE; ++a)
        if (!(omega_ija(i, j, a) == -omega_ija(j, i, a)))
          throw Error(ErrorCode::ShapeMismatch, "omega_ija is not antisymmetric in (i, j)");
}

LinearTwoForm zero_two_form(const VarList& chart, std::size_t nE) {
  const std::size_t n = chart.size();
  return {chart, nE, PolyTensor3(n, n, nE, MultiPoly(chart)), PolyMatrix(n, nE, chart)};
}

LinearTwoForm random_linear_two_form(const VarList& chart, std::size_t nE, Sampler& s, bool closed) {
  LinearTwoForm w = zero_two_form(chart, nE);
  const std::size_t n = chart.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < nE; ++a) w.omega_ia(i, a) = random_poly(chart, s, 2, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t a = 0; a < nE; ++a) {
        MultiPoly p = closed ? w.omega_ia(i, a).partial(j) - w.omega_ia(j, a).partial(i) : random_poly(chart, s, 1, 2);
        w.omega_ija(j, i, a) = -p;
        w.omega_ija(i, j, a) = std::move(p);
      }
  return w;
}

TwoForm assemble(const LinearTwoForm& w) {
  w.validate();
  const TotalSpace sp(w.chart, w.nE);
  const std::size_t n = sp.n();
  TwoForm out{sp.vars, PolyMatrix(sp.dim(), sp.dim(), sp.vars)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly acc = sp.zero();
      for (std::size_t a = 0; a < w.nE; ++a) acc += sp.lift(w.omega_ija(i, j, a)) * sp.e(a);
      out.omega(i, j) = std::move(acc);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < w.nE; ++a) {
      out.omega(i, n + a) = sp.lift(w.omega_ia(i, a));
      out.omega(n + a, i) = -out.omega(i, n + a);
    }
  return out;
}

Morphism omega_flat(const LinearTwoForm& w) {
  w.validate();
  const std::size_t n = w.chart.size(), nE = w.nE;
  Morphism m;
  m.source = tangent_prolongation(w.chart, nE);
  m.target = cotangent_prolongation(w.chart, nE);
  m.L = PolyMatrix(nE, n, w.chart);
  m.C = PolyMatrix(n, nE, w.chart);
  m.R = PolyMatrix::identity(nE, w.chart);
  m.Psi = PolyTensor3(n, nE, n, MultiPoly(w.chart));
  for (std::size_t b = 0; b < nE; ++b)
    for (std::size_t i = 0; i < n; ++i) m.L(b, i) = w.omega_ia(i, b);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < nE; ++a) m.C(j, a) = -w.omega_ia(j, a);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t i = 0; i < n; ++i) m.Psi(j, a, i) = w.omega_ija(i, j, a);
  return m;
}

bool is_closed(const LinearTwoForm& w) {
  w.validate();
  const std::size_t n = w.chart.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < w.nE; ++a)
        if (!(w.omega_ija(i, j, a) == w.omega_ia(i, a).partial(j) - w.omega_ia(j, a).partial(i))) return false;
  return true;
}

LinearTwoForm omega_c_pullback(const LinearTwoForm& w) {
  w.validate();
  const TotalSpace sp(w.chart, w.nE);
  const std::size_t n = sp.n();
  // ω_M = d(p_i dx^i), so the pull-back is d of p_i(x, e) dx^i.
  OneForm pulled{sp.vars, std::vector<MultiPoly>(sp.dim(), sp.zero())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < w.nE; ++a) pulled.coeffs[i] -= sp.lift(w.omega_ia(i, a)) * sp.e(a);
  const TwoForm d = exterior_derivative(pulled);
  LinearTwoForm out = zero_two_form(w.chart, w.nE);
  for (std::size_t a = 0; a < w.nE; ++a)
    for (std::size_t b = 0; b < w.nE; ++b)
      if (!d.omega(n + a, n + b).is_zero()) throw Error(ErrorCode::Unsupported, "pull-back has a de∧de part");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sp.e_linear(d.omega(i, j))) throw Error(ErrorCode::Unsupported, "pull-back is not linear in e");
      for (std::size_t a = 0; a < w.nE; ++a) out.omega_ija(i, j, a) = sp.e_coefficient(d.omega(i, j), a);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < w.nE; ++a) {
      const MultiPoly& c = d.omega(i, n + a);
      if (!sp.e_free(c)) throw Error(ErrorCode::Unsupported, "pull-back has e-dependent mixed part");
      out.omega_ia(i, a) = sp.restrict_to_zero_section(c);
    }
  return out;
}

}  // namespace dvb
