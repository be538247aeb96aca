#pragma once

#include <string>

#include "core/bundle.hpp"
#include "core/morphism.hpp"

namespace dvb {

/// Appends or strips a trailing '*'.
std::string dual_label(const std::string& label);

/// K(F,C,E)^{*r} = K(E, F*, C*). An element is (e; p; q), p in F*, q in C*.
Bundle right_dual(const Bundle& b);
/// flip ∘ right_dual ∘ flip, i.e. K(C*, E*, F).
Bundle left_dual(const Bundle& b);

/// <v, a> = p·f + q·c for a over v's e. Throws Error(ProjectionMismatch) if
/// a.f != v.e and Error(BaseMismatch) if base points differ.
Rational pair_r(const Element& v, const Element& a);
/// pair_r(flip v, flip b) = b.c·v.e + b.f·v.c, needs b.e == v.f.
Rational pair_l(const Element& v, const Element& b);

/// For Φ: K -> K' at one point, the right dual K'^{*r} -> K^{*r}:
/// blocks (R^{-1}, L^T, C^T) and Psi*[A][g][a'] = Σ_a Psi[g][a][A] R^{-1}[a][a'].
/// Throws Error(Singular) where R is not invertible.
PointMorphism right_dual_morphism(const PointMorphism& m);
PointMorphism left_dual_morphism(const PointMorphism& m);
/// Polynomial right/left duals, available when R (resp. L) is unimodular.
Morphism right_dual_morphism(const Morphism& m);
Morphism left_dual_morphism(const Morphism& m);

/// Right dual applied three times; maps K'^{*r*r*r} -> K^{*r*r*r}.
PointMorphism third_right_dual(const PointMorphism& m);

enum class RVariant { R, PlusMinus, MinusPlus, Equal };

const char* variant_name(RVariant v);

/// Signs (s1, s2) in <a,α> = s1<v,a> + s2<α,φ>.
std::pair<int, int> variant_signs(RVariant v);

/// Image in K^{*r*r*r}, identified slotwise with K(F,C,E).
Element canonical_R(RVariant variant, const Element& v);
/// Same map as a point morphism of K into its triple right dual.
PointMorphism canonical_R_morphism(RVariant variant, const Bundle& b, const RatVec& x);

/// Whether <a,α> = s1<v,a> + s2<α,φ> for this single compatible quadruple.
/// Throws Error(ProjectionMismatch) on ill-formed inputs.
bool R_relation_holds(RVariant variant, const Element& v, const Element& a, const Element& alpha, const Element& phi);

/// R_K^{-1} ∘ Φ^{*r*r*r} ∘ R_{K'}. With `naive` the identifications are the
/// plain slotwise identity instead of R.
PointMorphism third_dual_transport(const PointMorphism& m, bool naive = false);

}  // namespace dvb
