#include "geomech/total_space.hpp"

#include "error.hpp"

namespace dvb {

TotalSpace::TotalSpace(const VarList& chart_, std::size_t nE_, const std::string& fiber_stem)
    : chart(chart_), nE(nE_) {
  std::vector<std::string> names = chart.names();
  for (std::size_t a = 1; a <= nE; ++a) names.push_back(fiber_stem + std::to_string(a));
  vars = VarList(std::move(names));
  for (std::size_t i = 0; i < chart.size(); ++i) x_idx.push_back(i);
  for (std::size_t a = 0; a < nE; ++a) e_idx.push_back(chart.size() + a);
}

RatVec TotalSpace::point(const RatVec& x, const RatVec& e) const {
  if (x.size() != n() || e.size() != nE) throw Error(ErrorCode::ArityMismatch, "point does not fit the total space");
  RatVec p = x;
  p.insert(p.end(), e.begin(), e.end());
  return p;
}

MultiPoly TotalSpace::e_coefficient(const MultiPoly& p, std::size_t a) const {
  MultiPoly out(chart);
  for (const auto& [exps, coeff] : p.terms()) {
    std::uint32_t deg = 0;
    for (auto i : e_idx) deg += exps[i];
    if (deg != 1 || exps[e_idx.at(a)] != 1) continue;
    out.add_term(Exponents(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(n())), coeff);
  }
  return out;
}

MultiPoly TotalSpace::restrict_to_zero_section(const MultiPoly& p) const {
  MultiPoly out(chart);
  for (const auto& [exps, coeff] : p.terms()) {
    bool has_e = false;
    for (auto i : e_idx) has_e = has_e || exps[i] != 0;
    if (!has_e) out.add_term(Exponents(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(n())), coeff);
  }
  return out;
}

}  // namespace dvb
