#pragma once

// Exact rationals backed by GMP. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dvb {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Parses "p", "-p", "p/q". Throws Error(ParseError) on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);

RatVec zeros(std::size_t n);
RatVec vadd(const RatVec& a, const RatVec& b);
RatVec vsub(const RatVec& a, const RatVec& b);
RatVec vneg(const RatVec& a);
RatVec vscale(const Rational& s, const RatVec& a);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

}  // namespace dvb
