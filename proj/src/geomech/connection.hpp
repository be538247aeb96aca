#pragma once

#include "core/morphism.hpp"
#include "geomech/forms.hpp"
#include "ring/matrix.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

/// Christoffel symbols Gamma(a, i, b) = Γ^a_ib(x), shape (nE, n, nE).
struct LinearConnection {
  VarList chart;
  std::size_t nE = 0;
  PolyTensor3 Gamma;

  void validate() const;
  friend bool operator==(const LinearConnection& a, const LinearConnection& b) { return a.Gamma == b.Gamma; }
};

LinearConnection zero_connection(const VarList& chart, std::size_t nE);
LinearConnection random_connection(const VarList& chart, std::size_t nE, Sampler& s, bool symmetric);

/// D: TE -> K(TM, E, E), (xdot; edot; e) |-> (xdot; edot + Γ^a_ib xdot^i e^b; e).
Morphism connection_splitting(const LinearConnection& conn);
/// Γ from a splitting with identity induced maps; throws Error(Unsupported) otherwise.
LinearConnection christoffel_from_splitting(const Morphism& D);

/// J((D^{*l})^{-1}): the splitting of the dual connection on E*, computed by
/// the polynomial duality engine.
Morphism dual_splitting(const LinearConnection& conn);
/// Same construction at one base point through the pointwise engine.
PointMorphism dual_splitting_at(const LinearConnection& conn, const RatVec& x);
LinearConnection dual_connection(const LinearConnection& conn);

/// <∇e, p> + <e, ∇p> = d/dt <e, p> for random velocities (x', e', p').
Verdict leibniz_check(const LinearConnection& conn, const LinearConnection& dual, Sampler& s, int samples);

struct Metric {
  VarList chart;
  PolyMatrix g;

  void validate() const;
};

/// Tg: (xdot; edot; e) |-> (xdot; ∂_i g xdot^i e + g edot; g e).
Element metric_tangent(const Metric& g, const Element& v);
/// (id × g × g) ∘ D = D* ∘ Tg at sampled points of TE.
/// Throws Error(SingularMetric) where det g vanishes at a sample.
Verdict is_metric_connection(const LinearConnection& conn, const Metric& g, Sampler& s, int samples);
/// ∂_i g = g Γ_i + Γ_i^T g with (Γ_i)_ab = Γ^a_ib, as polynomials.
bool metric_identity(const LinearConnection& conn, const Metric& g);

struct MetricPair {
  LinearConnection conn;
  Metric g;
};
/// g = P^T P with P unipotent upper triangular and Γ_i = P^{-1}∂_i P + g^{-1}A_i
/// with A_i antisymmetric; `compatible = false` perturbs Γ afterwards.
MetricPair random_metric_pair(const VarList& chart, std::size_t nE, Sampler& s, bool compatible);

/// κ_M on TTM in decomposed slots: exchange of the xdot and e slots.
Element kappa_M(const Element& v);
/// κ_M as a morphism TTM -> J(TTM) in J-coordinates (identity blocks).
PointMorphism kappa_M_morphism(const VarList& chart, const RatVec& x);
/// κ on K(TM, TM, TM): (v, w, u) |-> (u, w, v).
Element kappa_triple(const Element& v);
/// α_M = right dual of κ_M.
PointMorphism alpha_M_morphism(const VarList& chart, const RatVec& x);

/// Raw coordinates (p, xdot, pdot) on TT*M to decomposed (xdot; pdot; p), and
/// decomposed (v; P_x; P_v) on T*TM to raw (v, P_x, P_v).
Element tt_star_from_raw(const RatVec& x, const RatVec& p, const RatVec& xdot, const RatVec& pdot);
RatVec t_star_t_to_raw(const Element& v);

/// κ∘D = J(D)∘κ_M at sampled points of TTM.
Verdict is_symmetric_connection(const LinearConnection& conn, Sampler& s, int samples);
/// Γ^l_ij = Γ^l_ji as polynomials.
bool christoffel_symmetric(const LinearConnection& conn);

/// d(d_T θ_M) for the Liouville form θ_M = p_i dx^i, over (x, p, dx, dp).
TwoForm lifted_symplectic_form(std::size_t n);
/// Horizontal subspace of the dual connection at (x, p) is isotropic for the
/// tangent-lifted symplectic form.
Verdict horizontal_lagrangian_check(const LinearConnection& conn, Sampler& s, int samples);

}  // namespace dvb
