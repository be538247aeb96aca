#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ring/multipoly.hpp"
#include "ring/rational.hpp"

namespace dvb {

/// Seeded source of small exact rationals p/q with |p| <= bound, 1 <= q <= bound.
/// Uses raw engine output with modular reduction so that streams are the
/// same across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int bound = 7) : seed_(seed), bound_(bound), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  int bound() const { return bound_; }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  Rational rational();
  /// Nonzero rational.
  Rational nonzero();
  RatVec vec(std::size_t n);
  bool coin();

 private:
  std::uint64_t seed_;
  int bound_;
  std::mt19937_64 engine_;
};

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
MultiPoly random_poly(const VarList& vars, Sampler& s, int max_degree, int terms);

/// 64-bit FNV-1a, used to derive per-property seeds from names.
std::uint64_t fnv1a(const std::string& text);

}  // namespace dvb
