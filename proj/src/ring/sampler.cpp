#include "ring/sampler.hpp"

namespace dvb {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational() {
  Rational r(integer(-bound_, bound_), integer(1, bound_));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero() {
  long p = integer(1, bound_);
  if (coin()) p = -p;
  Rational r(p, integer(1, bound_));
  r.canonicalize();
  return r;
}

RatVec Sampler::vec(std::size_t n) {
  RatVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
  return v;
}

bool Sampler::coin() { return engine_() & 1u; }

MultiPoly random_poly(const VarList& vars, Sampler& s, int max_degree, int terms) {
  MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    const long deg = vars.size() ? s.integer(0, max_degree) : 0;
    for (long k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(s.integer(0, static_cast<long>(vars.size()) - 1))];
    p.add_term(e, s.rational());
  }
  return p;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace dvb
