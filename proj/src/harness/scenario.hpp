#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/morphism.hpp"
#include "geomech/connection.hpp"
#include "geomech/fields.hpp"
#include "geomech/forms.hpp"
#include "geomech/lifts.hpp"
#include "geomech/poisson.hpp"

namespace dvb {

struct SamplingPlan {
  std::uint64_t seed = 1;
  int samples = 100;
  int bound = 7;
};

/// Everything a suite run needs. Geometry records live over the bundle's
/// chart, with E of rank `bundle.nE`.
struct Scenario {
  Bundle bundle;
  std::optional<Morphism> morphism;
  std::optional<VectorFieldOnE> vector_field;
  std::optional<OneFormOnE> one_form;
  std::optional<Bivector> bivector;
  std::optional<LinearTwoForm> two_form;
  std::optional<Metric> metric;
  std::optional<LinearConnection> connection;
  std::optional<std::vector<MultiPoly>> base_field;
  std::optional<CoreSection> core_section;
  std::optional<LinearSection> linear_section;
  SamplingPlan sampling;

  /// Cross-section rank checks; throws Error(InconsistentScenario).
  void validate() const;
};

/// Parses a polynomial literal: either a term list
/// [{"coeff": "p/q", "exps": [..]}, ...], a number, or an expression string
/// such as "3/2*x1^2*e1 - x2". Throws Error(ParseError).
MultiPoly parse_poly(const std::string& json_text, const VarList& vars);

/// Throws Error(ParseError) on malformed JSON or literals and
/// Error(InconsistentScenario) on rank conflicts.
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path);
/// Canonical serialization; polynomials are written as term lists.
std::string scenario_to_json(const Scenario& s);

struct GenerationBounds {
  std::size_t max_n = 3;
  std::size_t max_rank = 4;
  int max_degree = 2;
  bool symmetric_connection = false;
};

/// Deterministic for a fixed seed. Morphism blocks are identity plus strictly
/// upper-triangular, so all determinants equal 1.
Scenario generate_scenario(std::uint64_t seed, const GenerationBounds& bounds = {});

/// Parses "1,2/3" or "x=1,2/3" into a point of the given dimension.
RatVec parse_point(const std::string& text, std::size_t dim);

}  // namespace dvb
