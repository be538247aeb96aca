#include "dvb/dvb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "duality/duality.hpp"
#include "error.hpp"
#include "harness/report.hpp"
#include "harness/scenario.hpp"
#include "harness/suites.hpp"

struct dvb_scenario {
  dvb::Scenario s;
};

struct dvb_report {
  dvb::Report r;
};

struct dvb_bundle {
  dvb::Bundle b;
};

namespace {

thread_local std::string g_last_error;

dvb_status map_code(dvb::ErrorCode c) {
  using dvb::ErrorCode;
  switch (c) {
    case ErrorCode::ArityMismatch: return DVB_ERR_ARITY;
    case ErrorCode::UnknownVariable: return DVB_ERR_UNKNOWN_VARIABLE;
    case ErrorCode::VariableMismatch: return DVB_ERR_VARIABLE_MISMATCH;
    case ErrorCode::ShapeMismatch: return DVB_ERR_SHAPE_MISMATCH;
    case ErrorCode::Singular: return DVB_ERR_SINGULAR;
    case ErrorCode::SingularMetric: return DVB_ERR_SINGULAR_METRIC;
    case ErrorCode::BaseMismatch: return DVB_ERR_BASE_MISMATCH;
    case ErrorCode::FiberMismatch: return DVB_ERR_FIBER_MISMATCH;
    case ErrorCode::NotInKernel: return DVB_ERR_NOT_IN_KERNEL;
    case ErrorCode::ProjectionMismatch: return DVB_ERR_PROJECTION_MISMATCH;
    case ErrorCode::ParseError: return DVB_ERR_PARSE;
    case ErrorCode::InconsistentScenario: return DVB_ERR_INCONSISTENT;
    case ErrorCode::Unsupported: return DVB_ERR_UNSUPPORTED;
  }
  return DVB_ERR_INTERNAL;
}

dvb_status fail(dvb_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class F>
dvb_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return DVB_OK;
  } catch (const dvb::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DVB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DVB_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dvb::RunOptions to_options(const dvb_run_options* o) {
  dvb::RunOptions opts;
  if (!o) return opts;
  opts.samples = o->samples;
  opts.naive_identification = o->naive_identification != 0;
  if (o->only_property) opts.only = o->only_property;
  if (o->scenario_path) opts.scenario_path = o->scenario_path;
  if (o->replay_args) opts.replay_args = o->replay_args;
  return opts;
}

std::string poly_list(const std::vector<dvb::MultiPoly>& ps) {
  std::string out = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out + "]";
}

std::string poly_matrix(const dvb::PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace

extern "C" {

const char* dvb_last_error(void) { return g_last_error.c_str(); }

const char* dvb_status_name(dvb_status status) {
  switch (status) {
    case DVB_OK: return "OK";
    case DVB_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case DVB_ERR_PARSE: return "PARSE_ERROR";
    case DVB_ERR_INCONSISTENT: return "INCONSISTENT_SCENARIO";
    case DVB_ERR_ARITY: return "ARITY_MISMATCH";
    case DVB_ERR_UNKNOWN_VARIABLE: return "UNKNOWN_VARIABLE";
    case DVB_ERR_VARIABLE_MISMATCH: return "VARIABLE_MISMATCH";
    case DVB_ERR_SHAPE_MISMATCH: return "SHAPE_MISMATCH";
    case DVB_ERR_SINGULAR: return "SINGULAR";
    case DVB_ERR_SINGULAR_METRIC: return "SINGULAR_METRIC";
    case DVB_ERR_BASE_MISMATCH: return "BASE_MISMATCH";
    case DVB_ERR_FIBER_MISMATCH: return "FIBER_MISMATCH";
    case DVB_ERR_NOT_IN_KERNEL: return "NOT_IN_KERNEL";
    case DVB_ERR_PROJECTION_MISMATCH: return "PROJECTION_MISMATCH";
    case DVB_ERR_UNSUPPORTED: return "UNSUPPORTED";
    case DVB_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* dvb_version(void) { return "0.1.0"; }

void dvb_string_free(char* s) { std::free(s); }

void dvb_generate_options_init(dvb_generate_options* opts) {
  if (!opts) return;
  const dvb::GenerationBounds d;
  opts->max_n = d.max_n;
  opts->max_rank = d.max_rank;
  opts->max_degree = d.max_degree;
  opts->symmetric_connection = 0;
}

dvb_status dvb_scenario_load_file(const char* path, dvb_scenario** out) {
  if (!path || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_scenario{dvb::load_scenario(path)}; });
}

dvb_status dvb_scenario_load_json(const char* json, dvb_scenario** out) {
  if (!json || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_scenario{dvb::scenario_from_json(json)}; });
}

dvb_status dvb_scenario_generate(uint64_t seed, const dvb_generate_options* opts, dvb_scenario** out) {
  if (!out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  dvb::GenerationBounds b;
  if (opts) {
    if (opts->max_n == 0 || opts->max_rank == 0 || opts->max_degree <= 0)
      return fail(DVB_ERR_INVALID_ARGUMENT, "generation bounds must be positive");
    b.max_n = opts->max_n;
    b.max_rank = opts->max_rank;
    b.max_degree = opts->max_degree;
    b.symmetric_connection = opts->symmetric_connection != 0;
  }
  return guarded([&] { *out = new dvb_scenario{dvb::generate_scenario(seed, b)}; });
}

dvb_status dvb_scenario_to_json(const dvb_scenario* s, char** out) {
  if (!s || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(dvb::scenario_to_json(s->s)); });
}

dvb_status dvb_scenario_seed(const dvb_scenario* s, uint64_t* seed) {
  if (!s || !seed) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  *seed = s->s.sampling.seed;
  return DVB_OK;
}

dvb_status dvb_scenario_bundle(const dvb_scenario* s, dvb_bundle** out) {
  if (!s || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_bundle{s->s.bundle}; });
}

void dvb_scenario_free(dvb_scenario* s) { delete s; }

void dvb_run_options_init(dvb_run_options* opts) {
  if (!opts) return;
  opts->samples = 0;
  opts->naive_identification = 0;
  opts->only_property = nullptr;
  opts->scenario_path = nullptr;
  opts->replay_args = nullptr;
}

dvb_status dvb_run_suite(const dvb_scenario* s, const char* suite, const dvb_run_options* opts, dvb_report** out) {
  if (!s || !suite || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  if (!dvb::is_suite(suite) || std::string(suite).rfind("connection-", 0) == 0)
    return fail(DVB_ERR_INVALID_ARGUMENT, std::string("unknown suite '") + suite + "'");
  return guarded([&] { *out = new dvb_report{dvb::run_suite(suite, s->s, to_options(opts))}; });
}

dvb_status dvb_connection_check(const dvb_scenario* s, const char* which, const dvb_run_options* opts,
                                dvb_report** out) {
  if (!s || !which || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  const std::string suite = std::string("connection-") + which;
  if (!dvb::is_suite(suite)) return fail(DVB_ERR_INVALID_ARGUMENT, std::string("unknown connection check '") + which + "'");
  return guarded([&] { *out = new dvb_report{dvb::run_suite(suite, s->s, to_options(opts))}; });
}

int dvb_report_passed(const dvb_report* r) { return r && r->r.passed() ? 1 : 0; }

size_t dvb_report_count(const dvb_report* r) { return r ? r->r.results.size() : 0; }

dvb_status dvb_report_entry(const dvb_report* r, size_t index, const char** id, dvb_property_status* status,
                            const char** detail, uint64_t* seed) {
  if (!r) return fail(DVB_ERR_INVALID_ARGUMENT, "null report");
  if (index >= r->r.results.size()) return fail(DVB_ERR_INVALID_ARGUMENT, "entry index out of range");
  const dvb::PropertyResult& p = r->r.results[index];
  if (id) *id = p.id.c_str();
  if (status)
    *status = p.status == dvb::Status::Pass   ? DVB_PROPERTY_PASS
              : p.status == dvb::Status::Fail ? DVB_PROPERTY_FAIL
                                              : DVB_PROPERTY_SKIP;
  if (detail) *detail = p.detail.c_str();
  if (seed) *seed = p.seed;
  return DVB_OK;
}

dvb_status dvb_report_text(const dvb_report* r, int with_timing, char** out) {
  if (!r || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(dvb::report_text(r->r, with_timing != 0)); });
}

dvb_status dvb_report_json(const dvb_report* r, char** out) {
  if (!r || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(dvb::report_json(r->r)); });
}

void dvb_report_free(dvb_report* r) { delete r; }

dvb_status dvb_dualize(const dvb_scenario* s, const char* side, const char* point, char** out) {
  if (!s || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  const std::string which = side ? side : "right";
  if (which != "right" && which != "left") return fail(DVB_ERR_INVALID_ARGUMENT, "side must be 'right' or 'left'");
  const bool right = which == "right";
  return guarded([&] {
    const dvb::Scenario& sc = s->s;
    std::ostringstream os;
    const dvb::Bundle d = right ? dvb::right_dual(sc.bundle) : dvb::left_dual(sc.bundle);
    os << "bundle: " << sc.bundle.describe() << "\n";
    os << which << " dual: " << d.describe() << "\n";
    if (point) {
      if (!sc.morphism) throw dvb::Error(dvb::ErrorCode::InconsistentScenario, "scenario has no morphism section");
      const dvb::RatVec x = dvb::parse_point(point, sc.bundle.n());
      const dvb::PointMorphism pm = dvb::evaluate(*sc.morphism, x);
      os << "morphism at x=" << dvb::to_string(x) << ":\n" << dvb::to_string(pm) << "\n";
      const dvb::PointMorphism dm = right ? dvb::right_dual_morphism(pm) : dvb::left_dual_morphism(pm);
      os << which << " dual morphism " << dm.source.describe() << " -> " << dm.target.describe() << ":\n"
         << dvb::to_string(dm) << "\n";
    }
    *out = dup_string(os.str());
  });
}

dvb_status dvb_lift(const dvb_scenario* s, const char* kind, const char* point, const char* right_fiber,
                    const char* left_fiber, char** out) {
  if (!s || !kind || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  const std::string k = kind;
  if (k != "vertical" && k != "complete") return fail(DVB_ERR_INVALID_ARGUMENT, "lift kind must be 'vertical' or 'complete'");
  return guarded([&] {
    const dvb::Scenario& sc = s->s;
    std::ostringstream os;
    if (k == "vertical") {
      if (!sc.core_section) throw dvb::Error(dvb::ErrorCode::InconsistentScenario, "scenario has no core_section");
      if (!point) throw dvb::Error(dvb::ErrorCode::ArityMismatch, "vertical lift needs a base point");
      const dvb::Bundle& b = sc.bundle;
      const dvb::RatVec x = dvb::parse_point(point, b.n());
      const dvb::RatVec e = right_fiber ? dvb::parse_point(right_fiber, b.nE) : dvb::zeros(b.nE);
      const dvb::RatVec f = left_fiber ? dvb::parse_point(left_fiber, b.nF) : dvb::zeros(b.nF);
      os << "core section: " << poly_list(sc.core_section->gamma) << "\n";
      os << "right vertical lift: " << dvb::to_string(dvb::vertical_lift(dvb::Side::Right, b, *sc.core_section, x, e))
         << "\n";
      os << "left vertical lift: " << dvb::to_string(dvb::vertical_lift(dvb::Side::Left, b, *sc.core_section, x, f))
         << "\n";
    } else {
      if (!sc.base_field) throw dvb::Error(dvb::ErrorCode::InconsistentScenario, "scenario has no base_field");
      const dvb::VarList& chart = sc.bundle.chart;
      const auto tl = dvb::complete_tangent_lift(chart, *sc.base_field);
      const auto cl = dvb::complete_cotangent_lift(chart, *sc.base_field);
      os << "field: " << poly_list(*sc.base_field) << "\n";
      os << "complete tangent lift: base " << poly_list(tl.base) << ", fiber " << poly_matrix(tl.fiber) << "\n";
      os << "complete cotangent lift: base " << poly_list(cl.base) << ", fiber " << poly_matrix(cl.fiber) << "\n";
      const auto dual = dvb::section_as_field(dvb::dual_linear_section(dvb::field_as_section(tl)));
      os << "dual linear section of the tangent lift matches the cotangent lift: "
         << (dual.fiber == cl.fiber && dual.base == cl.base ? "yes" : "no") << "\n";
    }
    *out = dup_string(os.str());
  });
}

dvb_status dvb_bundle_create(size_t n, size_t n_f, size_t n_c, size_t n_e, dvb_bundle** out) {
  if (!out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_bundle{dvb::make_bundle(n, n_f, n_c, n_e)}; });
}

dvb_status dvb_bundle_ranks(const dvb_bundle* b, size_t* n, size_t* n_f, size_t* n_c, size_t* n_e) {
  if (!b) return fail(DVB_ERR_INVALID_ARGUMENT, "null bundle");
  if (n) *n = b->b.n();
  if (n_f) *n_f = b->b.nF;
  if (n_c) *n_c = b->b.nC;
  if (n_e) *n_e = b->b.nE;
  return DVB_OK;
}

dvb_status dvb_bundle_right_dual(const dvb_bundle* b, dvb_bundle** out) {
  if (!b || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_bundle{dvb::right_dual(b->b)}; });
}

dvb_status dvb_bundle_left_dual(const dvb_bundle* b, dvb_bundle** out) {
  if (!b || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_bundle{dvb::left_dual(b->b)}; });
}

dvb_status dvb_bundle_flip(const dvb_bundle* b, dvb_bundle** out) {
  if (!b || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new dvb_bundle{dvb::flip(b->b)}; });
}

dvb_status dvb_bundle_describe(const dvb_bundle* b, char** out) {
  if (!b || !out) return fail(DVB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(b->b.describe()); });
}

void dvb_bundle_free(dvb_bundle* b) { delete b; }

}  // extern "C"
