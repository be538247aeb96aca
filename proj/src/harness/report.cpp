#include "harness/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace dvb {

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["source"] = r.source.empty() ? "random" : r.source;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["naive_identification"] = r.naive_identification;
  j["passed"] = r.passed();
  j["counts"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skip", r.count(Status::Skip)}};
  auto& props = j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : r.results) {
    nlohmann::ordered_json e;
    e["id"] = p.id;
    e["status"] = status_name(p.status);
    e["seed"] = p.seed;
    if (!p.detail.empty()) e["detail"] = p.detail;
    if (p.status == Status::Fail) e["replay"] = r.replay_command(p);
    props.push_back(std::move(e));
  }
  return j.dump(2);
}

std::string report_text(const Report& r, bool with_timing) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  out << "scenario: " << (r.source.empty() ? "random" : r.source) << "\n";
  out << "seed: " << r.seed << "  samples: " << r.samples;
  if (r.naive_identification) out << "  naive-identification";
  out << "\n\n";
  for (const auto& p : r.results) {
    out << "[" << status_name(p.status) << "] " << p.id << "\n";
    if (p.status == Status::Fail) {
      out << "    counterexample: " << p.detail << "\n";
      out << "    property seed: " << p.seed << "\n";
      out << "    replay: " << r.replay_command(p) << "\n";
    } else if (!p.detail.empty()) {
      out << "    note: " << p.detail << "\n";
    }
  }
  out << "\n"
      << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, " << r.count(Status::Skip)
      << " skipped\n";
  out << "--- structured ---\n" << report_json(r) << "\n";
  if (with_timing) {
    out << "--- timing ---\n";
    double total = 0;
    char buf[64];
    for (const auto& p : r.results) {
      std::snprintf(buf, sizeof buf, "%.2f ms", p.millis);
      out << p.id << ": " << buf << "\n";
      total += p.millis;
    }
    std::snprintf(buf, sizeof buf, "%.2f ms", total);
    out << "total: " << buf << "\n";
  }
  return out.str();
}

}  // namespace dvb
