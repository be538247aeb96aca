#pragma once

#include <string>
#include <vector>

#include "ring/multipoly.hpp"
#include "ring/rational.hpp"

namespace dvb {

enum class Side { Right, Left };

/// Coordinate names x1..xn.
VarList make_chart(std::size_t n, const std::string& stem = "x");

/// Decomposed double vector bundle K(F,C,E) over one polynomial chart.
/// Right structure projects to E, left structure to F, core is C.
struct Bundle {
  VarList chart;
  std::size_t nF = 0, nC = 0, nE = 0;
  std::string F = "F", C = "C", E = "E";

  std::size_t n() const { return chart.size(); }
  /// Same chart and ranks; labels are not compared.
  bool same_shape(const Bundle& other) const;
  std::string describe() const;
};

Bundle make_bundle(std::size_t n, std::size_t nF, std::size_t nC, std::size_t nE);

/// A point (x; f; c; e) of K.
struct Element {
  RatVec x, f, c, e;
  friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& v);

/// Throws Error(ShapeMismatch) when slot lengths do not match the bundle.
void check_member(const Bundle& b, const Element& v);

Element fiber_add(Side side, const Element& u, const Element& v);
Element fiber_scale(Side side, const Rational& r, const Element& v);

Bundle flip(const Bundle& b);
Element flip(const Element& v);

struct KernelSplit {
  Element f_part, c_part;
};
/// Splits an element of ker tau_r (e = 0). Throws Error(NotInKernel) otherwise.
KernelSplit kernel_split(const Element& v);

Element core_embed(const RatVec& x, const RatVec& c, std::size_t nF, std::size_t nE);
Element zero_right(const RatVec& x, const RatVec& e, std::size_t nF, std::size_t nC);
Element zero_left(const RatVec& x, const RatVec& f, std::size_t nC, std::size_t nE);

/// K(TM, E, E); slots (xdot; edot; e).
Bundle tangent_prolongation(const VarList& chart, std::size_t nE);
/// K(E*, T*M, E); slots (fiber momentum; base momentum; e).
Bundle cotangent_prolongation(const VarList& chart, std::size_t nE);

}  // namespace dvb
