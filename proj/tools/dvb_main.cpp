// dvb command line front end. Talks to the library only through dvb/dvb.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dvb/dvb.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ScenarioArgs {
  std::string path;
  bool random = false;
  std::uint64_t seed = 1;
  bool symmetric = false;
};

int report_error(dvb_status st) {
  std::cerr << "dvb: " << dvb_last_error() << "\n";
  switch (st) {
    case DVB_ERR_INVALID_ARGUMENT:
    case DVB_ERR_PARSE:
    case DVB_ERR_INCONSISTENT:
    case DVB_ERR_ARITY:
    case DVB_ERR_UNKNOWN_VARIABLE:
    case DVB_ERR_UNSUPPORTED:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a) {
  auto* file = cmd->add_option("--scenario", a.path, "Scenario JSON file");
  auto* rnd = cmd->add_flag("--random", a.random, "Use a generated scenario");
  cmd->add_option("--seed", a.seed, "Seed for --random");
  cmd->add_flag("--symmetric", a.symmetric, "Generate a symmetric connection (with --random)");
  file->excludes(rnd);
}

class Scenario {
 public:
  ~Scenario() { dvb_scenario_free(s_); }
  dvb_status open(const ScenarioArgs& a) {
    if (!a.path.empty()) return dvb_scenario_load_file(a.path.c_str(), &s_);
    dvb_generate_options g;
    dvb_generate_options_init(&g);
    g.symmetric_connection = a.symmetric ? 1 : 0;
    return dvb_scenario_generate(a.seed, &g, &s_);
  }
  const dvb_scenario* get() const { return s_; }

 private:
  dvb_scenario* s_ = nullptr;
};

int print_string(dvb_status st, char* text) {
  if (st != DVB_OK) return report_error(st);
  std::cout << text;
  dvb_string_free(text);
  return kExitPass;
}

int emit_report(dvb_status st, dvb_report* rep, bool timing) {
  if (st != DVB_OK) return report_error(st);
  char* text = nullptr;
  const dvb_status ts = dvb_report_text(rep, timing ? 1 : 0, &text);
  const bool passed = dvb_report_passed(rep) != 0;
  dvb_report_free(rep);
  if (ts != DVB_OK) return report_error(ts);
  std::cout << text;
  dvb_string_free(text);
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for decomposed double vector bundles"};
  app.require_subcommand(1);

  ScenarioArgs sargs;
  int samples = 0;
  std::string property;
  bool no_timing = false;

  auto* check = app.add_subcommand("check", "Run a property suite");
  std::string suite;
  bool naive = false;
  check->add_option("suite", suite, "axioms | duality | third-dual | geometry | all")
      ->required()
      ->check(CLI::IsMember({"axioms", "duality", "third-dual", "geometry", "all"}));
  add_scenario_options(check, sargs);
  check->add_option("--samples", samples, "Samples per sampled property");
  check->add_flag("--naive-identification", naive, "Third-dual suite with the naive identification");
  check->add_option("--property", property, "Run a single property");
  check->add_flag("--no-timing", no_timing, "Omit the timing section");

  auto* dualize = app.add_subcommand("dualize", "Show dual bundles and dual morphism blocks");
  std::string point, side = "right";
  add_scenario_options(dualize, sargs);
  dualize->add_option("--point", point, "Base point, e.g. x=1,2/3");
  dualize->add_option("--side", side, "right | left")->check(CLI::IsMember({"right", "left"}));

  auto* lift = app.add_subcommand("lift", "Vertical or complete lifts");
  std::string lift_kind, right_fiber, left_fiber;
  lift->add_option("kind", lift_kind, "vertical | complete")->required()->check(CLI::IsMember({"vertical", "complete"}));
  add_scenario_options(lift, sargs);
  lift->add_option("--point", point, "Base point for vertical lifts");
  lift->add_option("--right-fiber", right_fiber, "e value for the right vertical lift");
  lift->add_option("--left-fiber", left_fiber, "f value for the left vertical lift");

  auto* conn = app.add_subcommand("connection", "Linear connection checks");
  auto* conn_check = conn->add_subcommand("check", "Check a connection property");
  conn->require_subcommand(1);
  std::string which;
  conn_check->add_option("which", which, "metric | symmetric | lagrangian")
      ->required()
      ->check(CLI::IsMember({"metric", "symmetric", "lagrangian"}));
  add_scenario_options(conn_check, sargs);
  conn_check->add_option("--samples", samples, "Samples per sampled property");
  conn_check->add_option("--property", property, "Property id (replay)");
  conn_check->add_flag("--no-timing", no_timing, "Omit the timing section");

  auto* gen = app.add_subcommand("generate", "Print a generated scenario as JSON");
  std::uint64_t gen_seed = 1;
  std::size_t max_n = 3, max_rank = 4;
  int max_degree = 2;
  bool gen_symmetric = false;
  std::string output;
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--max-n", max_n, "Largest chart dimension")->check(CLI::PositiveNumber);
  gen->add_option("--max-rank", max_rank, "Largest fiber rank")->check(CLI::PositiveNumber);
  gen->add_option("--max-degree", max_degree, "Largest polynomial degree")->check(CLI::PositiveNumber);
  gen->add_flag("--symmetric", gen_symmetric, "Symmetric connection");
  gen->add_option("-o,--output", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto need_source = [&](CLI::App* cmd) {
    if (sargs.path.empty() && !sargs.random) {
      std::cerr << "dvb " << cmd->get_name() << ": pass --scenario FILE or --random --seed S\n";
      return false;
    }
    return true;
  };

  dvb_run_options ro;
  dvb_run_options_init(&ro);
  ro.samples = samples;
  ro.only_property = property.empty() ? nullptr : property.c_str();
  ro.scenario_path = sargs.path.empty() ? nullptr : sargs.path.c_str();
  ro.replay_args = sargs.random && sargs.symmetric ? "--symmetric" : nullptr;

  if (check->parsed() || conn_check->parsed()) {
    CLI::App* cmd = check->parsed() ? check : conn_check;
    if (!need_source(cmd)) return kExitUsage;
    if (samples < 0) {
      std::cerr << "dvb: --samples must be positive\n";
      return kExitUsage;
    }
    Scenario sc;
    if (dvb_status st = sc.open(sargs); st != DVB_OK) return report_error(st);
    dvb_report* rep = nullptr;
    dvb_status st;
    if (check->parsed()) {
      ro.naive_identification = naive ? 1 : 0;
      st = dvb_run_suite(sc.get(), suite.c_str(), &ro, &rep);
    } else {
      st = dvb_connection_check(sc.get(), which.c_str(), &ro, &rep);
    }
    return emit_report(st, rep, !no_timing);
  }

  if (dualize->parsed()) {
    if (!need_source(dualize)) return kExitUsage;
    Scenario sc;
    if (dvb_status st = sc.open(sargs); st != DVB_OK) return report_error(st);
    char* text = nullptr;
    const dvb_status st = dvb_dualize(sc.get(), side.c_str(), point.empty() ? nullptr : point.c_str(), &text);
    return print_string(st, text);
  }

  if (lift->parsed()) {
    if (!need_source(lift)) return kExitUsage;
    Scenario sc;
    if (dvb_status st = sc.open(sargs); st != DVB_OK) return report_error(st);
    char* text = nullptr;
    const dvb_status st = dvb_lift(sc.get(), lift_kind.c_str(), point.empty() ? nullptr : point.c_str(),
                                   right_fiber.empty() ? nullptr : right_fiber.c_str(),
                                   left_fiber.empty() ? nullptr : left_fiber.c_str(), &text);
    return print_string(st, text);
  }

  if (gen->parsed()) {
    dvb_generate_options g;
    dvb_generate_options_init(&g);
    g.max_n = max_n;
    g.max_rank = max_rank;
    g.max_degree = max_degree;
    g.symmetric_connection = gen_symmetric ? 1 : 0;
    dvb_scenario* s = nullptr;
    if (dvb_status st = dvb_scenario_generate(gen_seed, &g, &s); st != DVB_OK) return report_error(st);
    char* text = nullptr;
    const dvb_status st = dvb_scenario_to_json(s, &text);
    dvb_scenario_free(s);
    if (st != DVB_OK) return report_error(st);
    if (output.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(output);
      if (!out) {
        dvb_string_free(text);
        std::cerr << "dvb generate: cannot write '" << output << "'\n";
        return kExitUsage;
      }
      out << text << "\n";
    }
    dvb_string_free(text);
    return kExitPass;
  }
  return kExitUsage;
}
