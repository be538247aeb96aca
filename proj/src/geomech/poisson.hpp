#pragma once

#include "core/bundle.hpp"
#include "geomech/total_space.hpp"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

/// Bivector on E with blocks over (x, e):
///   Λ = ½ L_ij ∂_i∧∂_j + L_ia ∂_i∧∂_{e^a} + ½ L_ab ∂_{e^a}∧∂_{e^b}.
struct Bivector {
  TotalSpace space;
  PolyMatrix L_ij, L_ia, L_ab;

  /// Shapes and antisymmetry; throws Error(ShapeMismatch).
  void validate() const;
  /// Full antisymmetric matrix Λ^{IJ} over all coordinates.
  PolyMatrix full() const;
};

Bivector zero_bivector(const VarList& chart, std::size_t nE);
/// n = 0, L_ab = Σ_c ε_abc e^c.
Bivector so3_lie_poisson();
/// Linear bivector from structure constants: L_ab = Σ_c k[a][b][c] e^c.
Bivector linear_bivector_from_constants(const RatTensor3& k);

/// Λ̃(μ)^J = μ_I Λ^{IJ} (first-slot insertion), μ = (φ; p; e) in T*E, image
/// (xdot; edot; e) in TE:
///   xdot^j = p_i L_ij - φ_a L_ja,  edot^b = p_i L_ib + φ_a L_ab.
Element lambda_sharp(const Bivector& lam, const Element& mu);

/// Λ̃ sampled as a double vector bundle morphism T*E -> TE.
Verdict is_linear_poisson(const Bivector& lam, Sampler& s, int samples);
/// L_ij = 0, L_ia e-free, L_ab e-linear.
bool has_linear_shape(const Bivector& lam);

/// [Λ, Λ]^{IJK} = Σ_L Λ^{LI} ∂_L Λ^{JK} + cyclic, as polynomials.
PolyTensor3 schouten_self(const Bivector& lam);
/// The Schouten components vanish at every given point of (x, e).
bool check_jacobi(const Bivector& lam, const std::vector<RatVec>& points);

}  // namespace dvb
