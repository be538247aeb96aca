#pragma once

#include <vector>

#include "ring/multipoly.hpp"
#include "ring/rational.hpp"

namespace dvb {

/// Coordinates (x^1..x^n, e^1..e^nE) on the total space of a vector bundle
/// E over one chart. Coefficients of fields and forms on E live here.
struct TotalSpace {
  VarList chart;
  std::size_t nE = 0;
  VarList vars;
  std::vector<std::size_t> x_idx, e_idx;

  TotalSpace() = default;
  TotalSpace(const VarList& chart, std::size_t nE, const std::string& fiber_stem = "e");

  std::size_t n() const { return chart.size(); }
  std::size_t dim() const { return vars.size(); }
  RatVec point(const RatVec& x, const RatVec& e) const;
  MultiPoly lift(const MultiPoly& chart_poly) const { return chart_poly.embed(vars); }
  MultiPoly zero() const { return MultiPoly(vars); }
  MultiPoly e(std::size_t a) const { return MultiPoly::variable(vars, e_idx.at(a)); }
  MultiPoly x(std::size_t i) const { return MultiPoly::variable(vars, x_idx.at(i)); }

  bool e_free(const MultiPoly& p) const { return p.is_free_of(e_idx); }
  bool e_linear(const MultiPoly& p) const { return p.is_homogeneous_in(e_idx, 1); }
  /// Coefficient of e^a in an e-linear polynomial, as a chart polynomial.
  MultiPoly e_coefficient(const MultiPoly& p, std::size_t a) const;
  /// Substitutes e := 0 and returns a chart polynomial.
  MultiPoly restrict_to_zero_section(const MultiPoly& p) const;
};

}  // namespace dvb
