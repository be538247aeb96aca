#pragma once

#include <functional>
#include <initializer_list>
#include <utility>

#include "core/bundle.hpp"
#include "ring/sampler.hpp"
#include "verdict.hpp"

namespace dvb {

Element random_element(const Bundle& b, Sampler& s, const RatVec& x);
/// Two random elements over x that may be added with the given structure.
std::pair<Element, Element> random_pair(Side side, const Bundle& b, Sampler& s, const RatVec& x);

const char* side_name(Side side);

using ScalarFn = std::function<Rational(const Element&)>;
using ElementMap = std::function<Element(const Element&)>;

/// F(u + v) = F(u) + F(v) and F(r·u) = r F(u) for the chosen structures.
Verdict check_function_linear(const Bundle& b, const ScalarFn& fn, Sampler& s, int samples,
                              std::initializer_list<Side> sides = {Side::Right, Side::Left});

/// G maps compatible pairs to compatible pairs, commutes with additions and
/// scalar actions for the chosen structures, and keeps the base point.
Verdict check_map_linear(const Bundle& source, const Bundle& target, const ElementMap& g, Sampler& s, int samples,
                         std::initializer_list<Side> sides = {Side::Right, Side::Left});

}  // namespace dvb
