#include "geomech/poisson.hpp"

#include "core/sampling.hpp"
#include "error.hpp"

namespace dvb {

void Bivector::validate() const {
  const std::size_t n = space.n(), nE = space.nE;
  if (L_ij.rows() != n || L_ij.cols() != n || L_ia.rows() != n || L_ia.cols() != nE || L_ab.rows() != nE ||
      L_ab.cols() != nE)
    throw Error(ErrorCode::ShapeMismatch, "bivector blocks do not match (n, nE)");
  if (!(L_ij == -L_ij.transpose())) throw Error(ErrorCode::ShapeMismatch, "L_ij is not antisymmetric");
  if (!(L_ab == -L_ab.transpose())) throw Error(ErrorCode::ShapeMismatch, "L_ab is not antisymmetric");
}

PolyMatrix Bivector::full() const {
  const std::size_t n = space.n(), nE = space.nE;
  PolyMatrix m(n + nE, n + nE, space.vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = L_ij(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < nE; ++a) {
      m(i, n + a) = L_ia(i, a);
      m(n + a, i) = -L_ia(i, a);
    }
  for (std::size_t a = 0; a < nE; ++a)
    for (std::size_t b = 0; b < nE; ++b) m(n + a, n + b) = L_ab(a, b);
  return m;
}

Bivector zero_bivector(const VarList& chart, std::size_t nE) {
  TotalSpace sp(chart, nE);
  const std::size_t n = sp.n();
  return {sp, PolyMatrix(n, n, sp.vars), PolyMatrix(n, nE, sp.vars), PolyMatrix(nE, nE, sp.vars)};
}

Bivector linear_bivector_from_constants(const RatTensor3& k) {
  const std::size_t nE = k.dim0();
  Bivector lam = zero_bivector(VarList(), nE);
  for (std::size_t a = 0; a < nE; ++a)
    for (std::size_t b = 0; b < nE; ++b) {
      MultiPoly acc = lam.space.zero();
      for (std::size_t c = 0; c < nE; ++c) acc += lam.space.e(c).scaled(k(a, b, c));
      lam.L_ab(a, b) = std::move(acc);
    }
  lam.validate();
  return lam;
}

Bivector so3_lie_poisson() {
  RatTensor3 eps(3, 3, 3, Rational(0));
  eps(0, 1, 2) = eps(1, 2, 0) = eps(2, 0, 1) = 1;
  eps(1, 0, 2) = eps(2, 1, 0) = eps(0, 2, 1) = -1;
  return linear_bivector_from_constants(eps);
}

Element lambda_sharp(const Bivector& lam, const Element& mu) {
  const std::size_t n = lam.space.n(), nE = lam.space.nE;
  if (mu.c.size() != n || mu.f.size() != nE || mu.e.size() != nE || mu.x.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "covector does not belong to the cotangent shell");
  const RatVec pt = lam.space.point(mu.x, mu.e);
  const RatMatrix Lij = lam.L_ij.eval(pt), Lia = lam.L_ia.eval(pt), Lab = lam.L_ab.eval(pt);
  const RatVec& p = mu.c;
  const RatVec& phi = mu.f;
  RatVec xdot(n, Rational(0)), edot(nE, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) xdot[j] += p[i] * Lij(i, j);
    for (std::size_t a = 0; a < nE; ++a) xdot[j] -= phi[a] * Lia(j, a);
  }
  for (std::size_t b = 0; b < nE; ++b) {
    for (std::size_t i = 0; i < n; ++i) edot[b] += p[i] * Lia(i, b);
    for (std::size_t a = 0; a < nE; ++a) edot[b] += phi[a] * Lab(a, b);
  }
  return {mu.x, xdot, edot, mu.e};
}

Verdict is_linear_poisson(const Bivector& lam, Sampler& s, int samples) {
  lam.validate();
  const Bundle source = cotangent_prolongation(lam.space.chart, lam.space.nE);
  const Bundle target = tangent_prolongation(lam.space.chart, lam.space.nE);
  return check_map_linear(source, target, [&](const Element& mu) { return lambda_sharp(lam, mu); }, s, samples);
}

bool has_linear_shape(const Bivector& lam) {
  lam.validate();
  const auto& sp = lam.space;
  if (!lam.L_ij.is_zero()) return false;
  for (std::size_t i = 0; i < sp.n(); ++i)
    for (std::size_t a = 0; a < sp.nE; ++a)
      if (!sp.e_free(lam.L_ia(i, a))) return false;
  for (std::size_t a = 0; a < sp.nE; ++a)
    for (std::size_t b = 0; b < sp.nE; ++b)
      if (!sp.e_linear(lam.L_ab(a, b))) return false;
  return true;
}

PolyTensor3 schouten_self(const Bivector& lam) {
  lam.validate();
  const PolyMatrix P = lam.full();
  const std::size_t N = P.rows();
  PolyTensor3 out(N, N, N, lam.space.zero());
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = 0; J < N; ++J)
      for (std::size_t K = 0; K < N; ++K) {
        MultiPoly acc = lam.space.zero();
        for (std::size_t L = 0; L < N; ++L) {
          if (!P(L, I).is_zero()) acc += P(L, I) * P(J, K).partial(L);
          if (!P(L, J).is_zero()) acc += P(L, J) * P(K, I).partial(L);
          if (!P(L, K).is_zero()) acc += P(L, K) * P(I, J).partial(L);
        }
        out(I, J, K) = std::move(acc);
      }
  return out;
}

bool check_jacobi(const Bivector& lam, const std::vector<RatVec>& points) {
  const PolyTensor3 jac = schouten_self(lam);
  for (const auto& pt : points)
    for (const auto& p : jac.data())
      if (p.eval(pt) != 0) return false;
  return true;
}

}  // namespace dvb
