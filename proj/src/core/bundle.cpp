#include "core/bundle.hpp"

#include "error.hpp"

namespace dvb {

VarList make_chart(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return VarList(std::move(names));
}

bool Bundle::same_shape(const Bundle& other) const {
  return chart == other.chart && nF == other.nF && nC == other.nC && nE == other.nE;
}

std::string Bundle::describe() const {
  return "K(" + F + ", " + C + ", " + E + ") n=" + std::to_string(n()) + " ranks (" + std::to_string(nF) + ", " +
         std::to_string(nC) + ", " + std::to_string(nE) + ")";
}

Bundle make_bundle(std::size_t n, std::size_t nF, std::size_t nC, std::size_t nE) {
  Bundle b;
  b.chart = make_chart(n);
  b.nF = nF;
  b.nC = nC;
  b.nE = nE;
  return b;
}

std::string to_string(const Element& v) {
  return "(x=" + to_string(v.x) + "; f=" + to_string(v.f) + "; c=" + to_string(v.c) + "; e=" + to_string(v.e) + ")";
}

void check_member(const Bundle& b, const Element& v) {
  if (v.x.size() != b.n() || v.f.size() != b.nF || v.c.size() != b.nC || v.e.size() != b.nE)
    throw Error(ErrorCode::ShapeMismatch, "element " + to_string(v) + " does not belong to " + b.describe());
}

namespace {

void require_same_sizes(const Element& u, const Element& v) {
  if (u.x.size() != v.x.size() || u.f.size() != v.f.size() || u.c.size() != v.c.size() || u.e.size() != v.e.size())
    throw Error(ErrorCode::ShapeMismatch, "elements belong to differently shaped bundles");
}

}  // namespace

Element fiber_add(Side side, const Element& u, const Element& v) {
  require_same_sizes(u, v);
  if (u.x != v.x) throw Error(ErrorCode::BaseMismatch, "base points differ");
  if (side == Side::Right) {
    if (u.e != v.e) throw Error(ErrorCode::FiberMismatch, "right addition needs equal e-parts");
    return {u.x, vadd(u.f, v.f), vadd(u.c, v.c), u.e};
  }
  if (u.f != v.f) throw Error(ErrorCode::FiberMismatch, "left addition needs equal f-parts");
  return {u.x, u.f, vadd(u.c, v.c), vadd(u.e, v.e)};
}

Element fiber_scale(Side side, const Rational& r, const Element& v) {
  if (side == Side::Right) return {v.x, vscale(r, v.f), vscale(r, v.c), v.e};
  return {v.x, v.f, vscale(r, v.c), vscale(r, v.e)};
}

Bundle flip(const Bundle& b) {
  Bundle out = b;
  std::swap(out.nF, out.nE);
  std::swap(out.F, out.E);
  return out;
}

Element flip(const Element& v) { return {v.x, v.e, v.c, v.f}; }

KernelSplit kernel_split(const Element& v) {
  if (!is_zero(v.e)) throw Error(ErrorCode::NotInKernel, "element " + to_string(v) + " has nonzero e-part");
  return {{v.x, v.f, zeros(v.c.size()), v.e}, {v.x, zeros(v.f.size()), v.c, v.e}};
}

Element core_embed(const RatVec& x, const RatVec& c, std::size_t nF, std::size_t nE) {
  return {x, zeros(nF), c, zeros(nE)};
}

Element zero_right(const RatVec& x, const RatVec& e, std::size_t nF, std::size_t nC) {
  return {x, zeros(nF), zeros(nC), e};
}

Element zero_left(const RatVec& x, const RatVec& f, std::size_t nC, std::size_t nE) {
  return {x, f, zeros(nC), zeros(nE)};
}

Bundle tangent_prolongation(const VarList& chart, std::size_t nE) {
  Bundle b;
  b.chart = chart;
  b.nF = chart.size();
  b.nC = nE;
  b.nE = nE;
  b.F = "TM";
  b.C = "E";
  b.E = "E";
  return b;
}

Bundle cotangent_prolongation(const VarList& chart, std::size_t nE) {
  Bundle b;
  b.chart = chart;
  b.nF = nE;
  b.nC = chart.size();
  b.nE = nE;
  b.F = "E*";
  b.C = "T*M";
  b.E = "E";
  return b;
}

}  // namespace dvb
