#pragma once

#include <string>

namespace dvb {

/// Outcome of a sampled or exact check; `detail` carries the counterexample.
struct Verdict {
  bool ok = true;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace dvb
