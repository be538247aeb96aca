#include "geomech/fields.hpp"

#include "core/sampling.hpp"
#include "error.hpp"

namespace dvb {

namespace {

Bundle bundle_of_E(const TotalSpace& sp) {
  Bundle b;
  b.chart = sp.chart;
  b.nE = sp.nE;
  return b;
}

RatVec eval_all(const std::vector<MultiPoly>& ps, const RatVec& pt) {
  RatVec out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.eval(pt));
  return out;
}

void check_sizes(const TotalSpace& sp, std::size_t base, std::size_t fiber) {
  if (base != sp.n() || fiber != sp.nE) throw Error(ErrorCode::ShapeMismatch, "component count does not match the chart");
}

}  // namespace

VectorFieldOnE to_field(const LinearVectorField& X) {
  const std::size_t nE = X.fiber.rows();
  VectorFieldOnE out{TotalSpace(X.chart, nE), {}, {}};
  if (X.base.size() != X.chart.size() || X.fiber.cols() != nE)
    throw Error(ErrorCode::ShapeMismatch, "linear vector field has inconsistent shape");
  for (const auto& p : X.base) out.base.push_back(out.space.lift(p));
  for (std::size_t b = 0; b < nE; ++b) {
    MultiPoly acc = out.space.zero();
    for (std::size_t a = 0; a < nE; ++a) acc += out.space.lift(X.fiber(b, a)) * out.space.e(a);
    out.fiber.push_back(std::move(acc));
  }
  return out;
}

bool is_degree_zero(const VectorFieldOnE& X) {
  check_sizes(X.space, X.base.size(), X.fiber.size());
  for (const auto& p : X.base)
    if (!X.space.e_free(p)) return false;
  for (const auto& p : X.fiber)
    if (!X.space.e_linear(p)) return false;
  return true;
}

std::optional<LinearVectorField> as_linear(const VectorFieldOnE& X) {
  if (!is_degree_zero(X)) return std::nullopt;
  const auto& sp = X.space;
  LinearVectorField out{sp.chart, {}, PolyMatrix(sp.nE, sp.nE, sp.chart)};
  for (const auto& p : X.base) out.base.push_back(sp.restrict_to_zero_section(p));
  for (std::size_t b = 0; b < sp.nE; ++b)
    for (std::size_t a = 0; a < sp.nE; ++a) out.fiber(b, a) = sp.e_coefficient(X.fiber[b], a);
  return out;
}

LinearVectorField random_linear_field(const VarList& chart, std::size_t nE, Sampler& s) {
  LinearVectorField X{chart, {}, PolyMatrix(nE, nE, chart)};
  for (std::size_t i = 0; i < chart.size(); ++i) X.base.push_back(random_poly(chart, s, 2, 2));
  for (std::size_t b = 0; b < nE; ++b)
    for (std::size_t a = 0; a < nE; ++a) X.fiber(b, a) = random_poly(chart, s, 2, 2);
  return X;
}

Element field_value(const VectorFieldOnE& X, const RatVec& x, const RatVec& e) {
  const RatVec pt = X.space.point(x, e);
  return {x, eval_all(X.base, pt), eval_all(X.fiber, pt), e};
}

Rational field_tilde(const VectorFieldOnE& X, const Element& mu) {
  const RatVec pt = X.space.point(mu.x, mu.e);
  return dot(mu.c, eval_all(X.base, pt)) + dot(mu.f, eval_all(X.fiber, pt));
}

Verdict vf_linearity_on_cotangent(const VectorFieldOnE& X, Sampler& s, int samples) {
  const Bundle shell = cotangent_prolongation(X.space.chart, X.space.nE);
  return check_function_linear(shell, [&](const Element& mu) { return field_tilde(X, mu); }, s, samples);
}

Verdict vf_morphism_property(const VectorFieldOnE& X, Sampler& s, int samples) {
  const Bundle source = bundle_of_E(X.space);
  const Bundle target = tangent_prolongation(X.space.chart, X.space.nE);
  return check_map_linear(source, target, [&](const Element& v) { return field_value(X, v.x, v.e); }, s, samples,
                          {Side::Left});
}

namespace {

/// X applied to a function on E.
MultiPoly derive(const VectorFieldOnE& X, const MultiPoly& f) {
  MultiPoly out = X.space.zero();
  for (std::size_t i = 0; i < X.space.n(); ++i) out += X.base[i] * f.partial(X.space.x_idx[i]);
  for (std::size_t a = 0; a < X.space.nE; ++a) out += X.fiber[a] * f.partial(X.space.e_idx[a]);
  return out;
}

}  // namespace

Verdict vf_preserves_linear_functions(const VectorFieldOnE& X, Sampler& s, int trials) {
  const auto& sp = X.space;
  std::vector<MultiPoly> probes;
  // Coordinate probes e^a and x^i e^a catch most violations deterministically.
  for (std::size_t a = 0; a < sp.nE; ++a) {
    probes.push_back(sp.e(a));
    for (std::size_t i = 0; i < sp.n(); ++i) probes.push_back(sp.x(i) * sp.e(a));
  }
  for (int t = 0; t < trials; ++t) {
    MultiPoly f = sp.zero();
    for (std::size_t a = 0; a < sp.nE; ++a) f += sp.lift(random_poly(sp.chart, s, 2, 3)) * sp.e(a);
    probes.push_back(std::move(f));
  }
  for (const auto& f : probes) {
    const MultiPoly xf = derive(X, f);
    if (!sp.e_linear(xf)) return Verdict::fail("X(f) is not fiber-linear for f = " + f.to_string() + ": X(f) = " + xf.to_string());
  }
  return Verdict::pass();
}

OneFormOnE to_form(const LinearOneForm& theta) {
  const std::size_t nE = theta.theta_a.size();
  if (theta.theta_ia.rows() != theta.chart.size() || theta.theta_ia.cols() != nE)
    throw Error(ErrorCode::ShapeMismatch, "linear 1-form has inconsistent shape");
  OneFormOnE out{TotalSpace(theta.chart, nE), {}, {}};
  for (const auto& p : theta.theta_a) out.de.push_back(out.space.lift(p));
  for (std::size_t i = 0; i < theta.chart.size(); ++i) {
    MultiPoly acc = out.space.zero();
    for (std::size_t a = 0; a < nE; ++a) acc += out.space.lift(theta.theta_ia(i, a)) * out.space.e(a);
    out.dx.push_back(std::move(acc));
  }
  return out;
}

bool is_linear_oneform(const OneFormOnE& theta) {
  check_sizes(theta.space, theta.dx.size(), theta.de.size());
  for (const auto& p : theta.de)
    if (!theta.space.e_free(p)) return false;
  for (const auto& p : theta.dx)
    if (!theta.space.e_linear(p)) return false;
  return true;
}

LinearOneForm random_linear_oneform(const VarList& chart, std::size_t nE, Sampler& s) {
  LinearOneForm th{chart, {}, PolyMatrix(chart.size(), nE, chart)};
  for (std::size_t a = 0; a < nE; ++a) th.theta_a.push_back(random_poly(chart, s, 2, 2));
  for (std::size_t i = 0; i < chart.size(); ++i)
    for (std::size_t a = 0; a < nE; ++a) th.theta_ia(i, a) = random_poly(chart, s, 2, 2);
  return th;
}

Element oneform_value(const OneFormOnE& theta, const RatVec& x, const RatVec& e) {
  const RatVec pt = theta.space.point(x, e);
  return {x, eval_all(theta.de, pt), eval_all(theta.dx, pt), e};
}

Rational oneform_tilde(const OneFormOnE& theta, const Element& v) {
  const RatVec pt = theta.space.point(v.x, v.e);
  return dot(eval_all(theta.dx, pt), v.f) + dot(eval_all(theta.de, pt), v.c);
}

MultiPoly contract(const VectorFieldOnE& X, const OneFormOnE& theta) {
  if (!(X.space.vars == theta.space.vars)) throw Error(ErrorCode::VariableMismatch, "field and form live on different spaces");
  MultiPoly out = X.space.zero();
  for (std::size_t i = 0; i < X.space.n(); ++i) out += X.base[i] * theta.dx[i];
  for (std::size_t a = 0; a < X.space.nE; ++a) out += X.fiber[a] * theta.de[a];
  return out;
}

Verdict oneform_linearity_on_tangent(const OneFormOnE& theta, Sampler& s, int samples) {
  const Bundle shell = tangent_prolongation(theta.space.chart, theta.space.nE);
  return check_function_linear(shell, [&](const Element& v) { return oneform_tilde(theta, v); }, s, samples);
}

Verdict oneform_morphism_property(const OneFormOnE& theta, Sampler& s, int samples) {
  const Bundle source = bundle_of_E(theta.space);
  const Bundle target = cotangent_prolongation(theta.space.chart, theta.space.nE);
  return check_map_linear(source, target, [&](const Element& v) { return oneform_value(theta, v.x, v.e); }, s,
                          samples, {Side::Left});
}

Verdict oneform_pairs_linearly(const OneFormOnE& theta, Sampler& s, int trials) {
  const auto& sp = theta.space;
  std::vector<VectorFieldOnE> probes;
  // Unit fields ∂_i, e^a ∂_{e^b}, plus random degree-zero fields.
  for (std::size_t i = 0; i < sp.n(); ++i) {
    LinearVectorField X{sp.chart, std::vector<MultiPoly>(sp.n(), MultiPoly(sp.chart)), PolyMatrix(sp.nE, sp.nE, sp.chart)};
    X.base[i] = MultiPoly::constant(sp.chart, 1);
    probes.push_back(to_field(X));
  }
  for (std::size_t b = 0; b < sp.nE; ++b)
    for (std::size_t a = 0; a < sp.nE; ++a) {
      LinearVectorField X{sp.chart, std::vector<MultiPoly>(sp.n(), MultiPoly(sp.chart)), PolyMatrix(sp.nE, sp.nE, sp.chart)};
      X.fiber(b, a) = MultiPoly::constant(sp.chart, 1);
      probes.push_back(to_field(X));
    }
  for (int t = 0; t < trials; ++t) probes.push_back(to_field(random_linear_field(sp.chart, sp.nE, s)));
  for (const auto& X : probes) {
    const MultiPoly h = contract(X, theta);
    if (!sp.e_linear(h)) return Verdict::fail("<X, θ> = " + h.to_string() + " is not fiber-linear");
  }
  return Verdict::pass();
}

}  // namespace dvb
