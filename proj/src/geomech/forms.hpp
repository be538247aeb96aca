#pragma once

#include <vector>

#include "core/morphism.hpp"
#include "geomech/total_space.hpp"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

/// θ = θ_I dz^I over an arbitrary coordinate list.
struct OneForm {
  VarList vars;
  std::vector<MultiPoly> coeffs;
};

/// ω = ½ Ω_IJ dz^I ∧ dz^J with Ω antisymmetric.
struct TwoForm {
  VarList vars;
  PolyMatrix omega;
};

/// Coordinates z followed by their velocities, named with a "d" prefix.
VarList tangent_vars(const VarList& vars);

/// Tangent lift d_T θ = θ_I,J ż^J dz^I + θ_I dż^I on the tangent bundle.
OneForm tangent_lift(const OneForm& theta);
/// Ω_IJ = ∂_I θ_J - ∂_J θ_I.
TwoForm exterior_derivative(const OneForm& theta);
/// Whether dω = 0, i.e. every cyclic sum ∂_I Ω_JK + ∂_J Ω_KI + ∂_K Ω_IJ vanishes.
bool is_closed(const TwoForm& w);
/// ω(u, w) = Ω_IJ u^I w^J at a point.
Rational evaluate(const TwoForm& w, const RatVec& point, const RatVec& u, const RatVec& v);

/// Linear 2-form on E:
///   ω = ½ ω_ija(x) e^a dx^i ∧ dx^j + ω_ia(x) dx^i ∧ de^a.
struct LinearTwoForm {
  VarList chart;
  std::size_t nE = 0;
  PolyTensor3 omega_ija;  // (n, n, nE), antisymmetric in (i, j)
  PolyMatrix omega_ia;    // (n, nE)

  /// Throws Error(ShapeMismatch) on bad shapes or broken antisymmetry.
  void validate() const;
  friend bool operator==(const LinearTwoForm& a, const LinearTwoForm& b) {
    return a.omega_ija == b.omega_ija && a.omega_ia == b.omega_ia;
  }
};

LinearTwoForm zero_two_form(const VarList& chart, std::size_t nE);
/// Random ω_ia and antisymmetric ω_ija; `closed` forces the closedness condition.
LinearTwoForm random_linear_two_form(const VarList& chart, std::size_t nE, Sampler& s, bool closed);

/// The full 2-form on the total space (x, e).
TwoForm assemble(const LinearTwoForm& w);

/// ω̃: TE -> T*E, v |-> ω(v, ·), as blocks
///   L(b,i) = ω_ib, C(j,a) = -ω_ja, R = id, Psi[j][a][i] = ω_ija.
Morphism omega_flat(const LinearTwoForm& w);

/// ω_ija = ω_ia,j - ω_ja,i as an exact polynomial identity.
bool is_closed(const LinearTwoForm& w);

/// Pull-back of dp_i ∧ dx^i by ω̃_c (p_i = -ω_ia e^a), computed by formal
/// exterior calculus and regrouped into linear coefficients.
LinearTwoForm omega_c_pullback(const LinearTwoForm& w);

}  // namespace dvb
