#pragma once

#include <string>

#include "harness/suites.hpp"

namespace dvb {

/// Machine-readable report body. Timing is left out so that identical runs
/// serialize identically.
std::string report_json(const Report& r);

/// Text report: one line per property, counterexamples and replay commands
/// for failures, a summary, the structured block, then (optionally) timing.
std::string report_text(const Report& r, bool with_timing = true);

}  // namespace dvb
