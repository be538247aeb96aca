#include "geomech/lifts.hpp"

#include "duality/duality.hpp"
#include "error.hpp"

namespace dvb {

namespace {

RatVec eval_all(const std::vector<MultiPoly>& ps, const RatVec& x) {
  RatVec out;
  for (const auto& p : ps) out.push_back(p.eval(x));
  return out;
}

}  // namespace

Element vertical_lift(Side side, const Bundle& K, const CoreSection& gamma, const RatVec& x, const RatVec& fiber_point) {
  if (gamma.gamma.size() != K.nC) throw Error(ErrorCode::ShapeMismatch, "core section has wrong rank");
  const RatVec c = eval_all(gamma.gamma, x);
  Element v = side == Side::Right ? Element{x, zeros(K.nF), c, fiber_point} : Element{x, fiber_point, c, zeros(K.nE)};
  check_member(K, v);
  return v;
}

Element section_value(const LinearSection& X, const RatVec& x, const RatVec& f) {
  return {x, f, X.X.eval(x).apply(f), eval_all(X.xi, x)};
}

Element section_value(const DualLinearSection& Y, const RatVec& x, const RatVec& q) {
  return {x, eval_all(Y.xi, x), Y.Y.eval(x).apply(q), q};
}

DualLinearSection dual_linear_section(const LinearSection& X) { return {X.chart, X.xi, -X.X.transpose()}; }

Verdict check_annihilates(const LinearSection& X, const DualLinearSection& Y, Sampler& s, int samples) {
  const std::size_t n = X.chart.size();
  for (int k = 0; k < samples; ++k) {
    const RatVec x = s.vec(n);
    const RatVec f = s.vec(X.X.cols());
    const RatVec q = s.vec(X.X.rows());
    const Element u = section_value(X, x, f);
    const Element a = section_value(Y, x, q);
    const Rational val = pair_r(u, a);
    if (val != 0)
      return Verdict::fail("<X(f), Y(q)> = " + val.get_str() + " at x=" + to_string(x) + " f=" + to_string(f) +
                           " q=" + to_string(q));
  }
  return Verdict::pass();
}

LinearSection field_as_section(const LinearVectorField& X) { return {X.chart, X.base, X.fiber}; }

LinearVectorField section_as_field(const DualLinearSection& Y) { return {Y.chart, Y.xi, Y.Y}; }

namespace {

PolyMatrix jacobian(const VarList& chart, const std::vector<MultiPoly>& X) {
  const std::size_t n = chart.size();
  if (X.size() != n) throw Error(ErrorCode::ShapeMismatch, "vector field needs one component per coordinate");
  PolyMatrix J(n, n, chart);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J(i, j) = X[i].partial(j);
  return J;
}

}  // namespace

LinearVectorField complete_tangent_lift(const VarList& chart, const std::vector<MultiPoly>& X) {
  return {chart, X, jacobian(chart, X)};
}

LinearVectorField complete_cotangent_lift(const VarList& chart, const std::vector<MultiPoly>& X) {
  return {chart, X, -jacobian(chart, X).transpose()};
}

}  // namespace dvb
