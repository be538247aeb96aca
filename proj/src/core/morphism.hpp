#pragma once

#include <span>

#include "core/bundle.hpp"
#include "ring/matrix.hpp"

namespace dvb {

/// Morphism K(F,C,E) -> K(F',C',E') over the identity of the chart:
///   (f, c, e) |-> (L f, C c + Psi(f, e), R e)
/// with Psi[g][a][A] the coefficient of e^a f^A in the g-th core output.
struct Morphism {
  Bundle source, target;
  PolyMatrix L, C, R;
  PolyTensor3 Psi;

  void validate() const;
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source.same_shape(b.source) && a.target.same_shape(b.target) && a.L == b.L && a.C == b.C &&
           a.R == b.R && a.Psi == b.Psi;
  }
};

/// Blocks of a morphism evaluated at one base point. Duals and inverses
/// generally need this form since block inverses are rational in x.
struct PointMorphism {
  Bundle source, target;
  RatVec x;
  RatMatrix L, C, R;
  RatTensor3 Psi;

  void validate() const;
  friend bool operator==(const PointMorphism& a, const PointMorphism& b) {
    return a.source.same_shape(b.source) && a.target.same_shape(b.target) && a.x == b.x && a.L == b.L &&
           a.C == b.C && a.R == b.R && a.Psi == b.Psi;
  }
};

std::string to_string(const PointMorphism& m);

Morphism identity_morphism(const Bundle& b);
PointMorphism identity_morphism_at(const Bundle& b, const RatVec& x);

PointMorphism evaluate(const Morphism& m, std::span<const Rational> x);

Element apply(const Morphism& m, const Element& v);
/// Throws Error(BaseMismatch) when v is not over m.x.
Element apply(const PointMorphism& m, const Element& v);

/// second ∘ first. Throws Error(ShapeMismatch) on incompatible bundles.
Morphism compose(const Morphism& second, const Morphism& first);
PointMorphism compose(const PointMorphism& second, const PointMorphism& first);

/// Throws Error(Singular) when a block is not invertible.
PointMorphism inverse(const PointMorphism& m);
PointMorphism inverse_at(const Morphism& m, std::span<const Rational> x);
/// Polynomial inverse when every block has constant nonzero determinant;
/// throws Error(Singular) otherwise.
Morphism inverse_unimodular(const Morphism& m);

Morphism flip(const Morphism& m);
PointMorphism flip(const PointMorphism& m);

/// Psi contracted with (f, e).
RatVec contract_psi(const RatTensor3& psi, const RatVec& f, const RatVec& e);

}  // namespace dvb
