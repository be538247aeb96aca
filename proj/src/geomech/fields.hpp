#pragma once

#include <optional>
#include <vector>

#include "core/bundle.hpp"
#include "geomech/total_space.hpp"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

/// Vector field X^i ∂_i + X^b ∂_{e^b} on E, coefficients in (x, e).
struct VectorFieldOnE {
  TotalSpace space;
  std::vector<MultiPoly> base, fiber;
};

/// Degree-zero field X^i(x) ∂_i + X^b_a(x) e^a ∂_{e^b}; fiber(b, a) = X^b_a.
struct LinearVectorField {
  VarList chart;
  std::vector<MultiPoly> base;
  PolyMatrix fiber;
};

VectorFieldOnE to_field(const LinearVectorField& X);
/// Base components e-free, fiber components homogeneous of degree 1 in e.
bool is_degree_zero(const VectorFieldOnE& X);
std::optional<LinearVectorField> as_linear(const VectorFieldOnE& X);
LinearVectorField random_linear_field(const VarList& chart, std::size_t nE, Sampler& s);

/// X(x, e) as an element (xdot; edot; e) of the tangent prolongation.
Element field_value(const VectorFieldOnE& X, const RatVec& x, const RatVec& e);
/// X̃ on the cotangent shell: p·X_base + φ·X_fiber at μ = (φ; p; e).
Rational field_tilde(const VectorFieldOnE& X, const Element& mu);

/// X̃ linear for both structures of T*E, sampled.
Verdict vf_linearity_on_cotangent(const VectorFieldOnE& X, Sampler& s, int samples);
/// X: E -> TE is a vector bundle morphism over TM, sampled.
Verdict vf_morphism_property(const VectorFieldOnE& X, Sampler& s, int samples);
/// X(f) is fiber-linear for fiber-linear f; exact, over random f.
Verdict vf_preserves_linear_functions(const VectorFieldOnE& X, Sampler& s, int trials);

/// 1-form A_i dx^i + B_a de^a on E, coefficients in (x, e).
struct OneFormOnE {
  TotalSpace space;
  std::vector<MultiPoly> dx, de;
};

/// θ_a(x) de^a + θ_ia(x) e^a dx^i.
struct LinearOneForm {
  VarList chart;
  std::vector<MultiPoly> theta_a;
  PolyMatrix theta_ia;
};

OneFormOnE to_form(const LinearOneForm& theta);
/// de-coefficients e-free, dx-coefficients homogeneous linear in e.
bool is_linear_oneform(const OneFormOnE& theta);
LinearOneForm random_linear_oneform(const VarList& chart, std::size_t nE, Sampler& s);

/// θ(x, e) as an element (φ; p; e) of the cotangent shell.
Element oneform_value(const OneFormOnE& theta, const RatVec& x, const RatVec& e);
/// θ̃(v) = A·xdot + B·edot at v = (xdot; edot; e).
Rational oneform_tilde(const OneFormOnE& theta, const Element& v);
/// <X, θ> as a polynomial on E.
MultiPoly contract(const VectorFieldOnE& X, const OneFormOnE& theta);

/// θ̃ linear for both structures of TE, sampled.
Verdict oneform_linearity_on_tangent(const OneFormOnE& theta, Sampler& s, int samples);
/// θ: E -> T*E is a vector bundle morphism over E*, sampled.
Verdict oneform_morphism_property(const OneFormOnE& theta, Sampler& s, int samples);
/// <X, θ> fiber-linear for random degree-zero X; exact.
Verdict oneform_pairs_linearly(const OneFormOnE& theta, Sampler& s, int trials);

}  // namespace dvb
