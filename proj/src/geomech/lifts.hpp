#pragma once

#include <vector>

#include "core/bundle.hpp"
#include "geomech/fields.hpp"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

/// Section γ^α(x) of the core.
struct CoreSection {
  VarList chart;
  std::vector<MultiPoly> gamma;
};

/// Right: (x; 0; γ(x); e) in ker τ_l. Left: (x; f; γ(x); 0) in ker τ_r.
/// `fiber_point` is e for the right lift and f for the left one.
Element vertical_lift(Side side, const Bundle& K, const CoreSection& gamma, const RatVec& x, const RatVec& fiber_point);

/// Linear section of τ_l: f |-> (f; X(x) f; ξ(x)), X of shape nC x nF.
struct LinearSection {
  VarList chart;
  std::vector<MultiPoly> xi;
  PolyMatrix X;
};

/// Linear section of π_r on K^{*r}: q |-> (ξ(x); Y(x) q; q), Y of shape nF x nC.
struct DualLinearSection {
  VarList chart;
  std::vector<MultiPoly> xi;
  PolyMatrix Y;
};

Element section_value(const LinearSection& X, const RatVec& x, const RatVec& f);
Element section_value(const DualLinearSection& Y, const RatVec& x, const RatVec& q);

/// The linear section annihilating X: same ξ, Y = -X^T.
DualLinearSection dual_linear_section(const LinearSection& X);

/// <X(f), Y(q)> = 0 on random (x, f, q).
Verdict check_annihilates(const LinearSection& X, const DualLinearSection& Y, Sampler& s, int samples);

/// A degree-zero field on E viewed as a linear section of J(TE) = K(E, E, TM).
LinearSection field_as_section(const LinearVectorField& X);
/// A linear section of K(TM, E*, E*) viewed as a degree-zero field on E*.
LinearVectorField section_as_field(const DualLinearSection& Y);

/// d_T X = X^i ∂_i + X^i_,j xdot^j ∂_{xdot^i}.
LinearVectorField complete_tangent_lift(const VarList& chart, const std::vector<MultiPoly>& X);
/// X^i ∂_i - X^i_,j p_i ∂_{p_j}.
LinearVectorField complete_cotangent_lift(const VarList& chart, const std::vector<MultiPoly>& X);

}  // namespace dvb
