// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "core/sampling.hpp"
#include "duality/duality.hpp"
#include "geomech/connection.hpp"
#include "geomech/lifts.hpp"
#include "harness/report.hpp"
#include "harness/scenario.hpp"
#include "harness/suites.hpp"

using namespace dvb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Runs the listed properties of `suite` on one scenario and records the first failure.
void expect_properties(Outcome& out, const std::string& suite, const Scenario& sc, const std::vector<std::string>& ids,
                       int samples, const std::string& tag, bool naive = false) {
  for (const auto& id : ids) {
    RunOptions o;
    o.samples = samples;
    o.only = id;
    o.naive_identification = naive;
    const Report r = run_suite(suite, sc, o);
    for (const auto& p : r.results)
      if (p.status != Status::Pass) out.fail(tag + " " + p.id + " " + status_name(p.status) + ": " + p.detail);
  }
}

GenerationBounds bounds() {
  GenerationBounds b;
  b.max_n = 3;
  b.max_rank = 4;
  return b;
}

Outcome structure() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scenario sc = generate_scenario(seed, bounds());
    expect_properties(out, "axioms", sc,
                      {"core.interchange", "core.core_agreement", "core.kernel_split", "core.unique_core_difference"},
                      100, "seed " + std::to_string(seed));
  }
  const double secs = seconds_since(t0);
  if (secs >= 10) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.note = "20 bundles x 100 tuples in " + std::to_string(secs).substr(0, 5) + " s";
  return out;
}

PointMorphism scalar_at(const Rational& l, const Rational& c, const Rational& r, const Rational& psi) {
  const Bundle b = make_bundle(1, 1, 1, 1);
  PointMorphism m = identity_morphism_at(b, {Rational(3)});
  m.L(0, 0) = l;
  m.C(0, 0) = c;
  m.R(0, 0) = r;
  m.Psi = RatTensor3(1, 1, 1, psi);
  return m;
}

Outcome duality() {
  Outcome out;
  for (std::uint64_t seed = 101; seed <= 120; ++seed) {
    const Scenario sc = generate_scenario(seed, bounds());
    expect_properties(out, "duality", sc,
                      {"duality.pairing_bilinear", "duality.special_pairings", "duality.dual_is_dvb", "duality.adjoint",
                       "duality.single_valued_addition", "duality.double_dual_pairing"},
                      100, "seed " + std::to_string(seed));
  }
  const PointMorphism d = right_dual_morphism(scalar_at(2, 3, 5, 7));
  if (!(d == scalar_at(Rational(1, 5), 2, 3, Rational(7, 5))))
    out.fail("scalar dual blocks: " + to_string(d));
  // <Φv, a'> = 2p'f + 3q'c + 7q'fe on a small grid.
  const PointMorphism m = scalar_at(2, 3, 5, 7);
  for (int f = -2; f <= 2; ++f)
    for (int c = -2; c <= 2; ++c)
      for (int e = -2; e <= 2; ++e)
        for (int p = -2; p <= 2; ++p)
          for (int q = -2; q <= 2; ++q) {
            const Element v{{Rational(3)}, {Rational(f)}, {Rational(c)}, {Rational(e)}};
            const Element w = apply(m, v);
            const Element a{{Rational(3)}, w.e, {Rational(p)}, {Rational(q)}};
            const Rational lhs = pair_r(w, a), rhs = pair_r(v, apply(d, a));
            if (lhs != rhs || lhs != 2 * p * f + 3 * q * c + 7 * q * f * e) out.fail("scalar adjoint mismatch");
          }
  if (out.ok) out.note = "20 isomorphisms x 100 samples, scalar example exact";
  return out;
}

Outcome third_dual() {
  Outcome out;
  int negative_hits = 0, psi_zero = 0;
  for (std::uint64_t seed = 201; seed <= 220; ++seed) {
    const Scenario sc = generate_scenario(seed, bounds());
    const std::string tag = "seed " + std::to_string(seed);
    expect_properties(out, "third-dual", sc, {"third_dual.transport", "third_dual.variant_identities"}, 100, tag);
    RunOptions o;
    o.naive_identification = true;
    o.only = "third_dual.naive_identification";
    const Report r = run_suite("third-dual", sc, o);
    const PropertyResult& p = r.results.at(0);
    if (p.status == Status::Fail) out.fail(tag + " naive identification matched Φ⁻¹ with Ψ ≠ 0");
    if (p.status == Status::Pass) ++negative_hits;
    if (p.status == Status::Skip) ++psi_zero;
  }
  const PointMorphism m = scalar_at(2, 3, 5, 7);
  if (!(third_dual_transport(m) == scalar_at(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(-7, 30))))
    out.fail("scalar transport differs from (1/2, 1/3, 1/5, -7/30)");
  if (third_dual_transport(m, true) == inverse(m)) out.fail("scalar naive transport matched the inverse");
  if (negative_hits == 0) out.fail("no morphism with Ψ ≠ 0 exercised the negative test");
  if (out.ok)
    out.note = "20 morphisms x 10 points; naive identification failed as predicted on " +
               std::to_string(negative_hits) + " morphisms with Ψ ≠ 0 (" + std::to_string(psi_zero) + " had Ψ = 0)";
  return out;
}

Outcome r_grid() {
  Outcome out;
  const RatVec x{Rational(0)};
  long checked = 0, mismatches = 0, impostors = 0;
  auto val = [](int k) { return RatVec{Rational(k)}; };
  for (RVariant var : {RVariant::R, RVariant::PlusMinus, RVariant::MinusPlus, RVariant::Equal}) {
    for (int f = -2; f <= 2; ++f)
      for (int c = -2; c <= 2; ++c)
        for (int e = -2; e <= 2; ++e) {
          const Element v{x, val(f), val(c), val(e)};
          const Element phi = canonical_R(var, v);
          // Every candidate φ over the same legs; only canonical_R may satisfy the relation everywhere.
          for (int pf = -2; pf <= 2; ++pf)
            for (int pc = -2; pc <= 2; ++pc)
              for (int pe = -2; pe <= 2; ++pe) {
                const Element cand{x, val(pf), val(pc), val(pe)};
                bool all = true;
                for (int p = -2; p <= 2 && all; ++p)
                  for (int q = -2; q <= 2 && all; ++q)
                    for (int k = -2; k <= 2 && all; ++k) {
                      const Element a{x, v.e, val(p), val(q)};
                      const Element alpha{x, val(q), val(k), cand.f};
                      const bool holds = R_relation_holds(var, v, a, alpha, cand);
                      if (cand == phi) {
                        ++checked;
                        if (!holds) ++mismatches;
                      } else if (!holds) {
                        all = false;
                      }
                    }
                if (all && !(cand == phi)) ++impostors;
              }
        }
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " relation mismatches");
  if (impostors) out.fail(std::to_string(impostors) + " other candidates satisfy the relation");
  if (out.ok) out.note = std::to_string(checked) + " quadruples over 4 variants, zero mismatches, R unique on the grid";
  return out;
}

Outcome geometry() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 301; seed <= 320; ++seed) {
    const Scenario sc = generate_scenario(seed, bounds());
    expect_properties(out, "geometry", sc,
                      {"geometry.vector_field", "geometry.one_form", "geometry.linear_poisson",
                       "geometry.closed_two_form", "geometry.dual_section", "geometry.complete_lifts",
                       "geometry.metric_criterion", "geometry.dual_connection", "geometry.kappa_alpha"},
                      100, "seed " + std::to_string(seed));
  }

  // d_T X and the cotangent lift of X = x²∂x.
  const VarList chart({"x"});
  const MultiPoly x2 = MultiPoly::monomial(chart, {2}, 1);
  const LinearVectorField t = complete_tangent_lift(chart, {x2});
  const LinearVectorField c = complete_cotangent_lift(chart, {x2});
  if (!(t.fiber(0, 0) == MultiPoly::monomial(chart, {1}, 2))) out.fail("d_T(x²∂x) fiber is " + t.fiber(0, 0).to_string());
  if (!(c.fiber(0, 0) == MultiPoly::monomial(chart, {1}, -2))) out.fail("cotangent lift fiber is " + c.fiber(0, 0).to_string());
  const DualLinearSection y = dual_linear_section(field_as_section(t));
  if (!(section_as_field(y).fiber == c.fiber)) out.fail("dual section of d_T X is not the cotangent lift");
  Sampler s(17);
  if (!check_annihilates(field_as_section(t), y, s, 100).ok) out.fail("x²∂x orthogonality");

  // 20 random (Γ, g): diagram vs derived identity.
  const VarList c2 = make_chart(2);
  for (int k = 0; k < 20; ++k) {
    const MetricPair mp = random_metric_pair(c2, 2, s, k % 2 == 0);
    const bool diagram = is_metric_connection(mp.conn, mp.g, s, 20).ok;
    if (diagram != metric_identity(mp.conn, mp.g) || diagram != (k % 2 == 0))
      out.fail("metric criterion disagreement on pair " + std::to_string(k));
  }

  // 100 random connections with n = 2, n_E = 2.
  int symmetric = 0;
  for (int k = 0; k < 100; ++k) {
    const LinearConnection g = random_connection(c2, 2, s, s.coin());
    const bool coords = christoffel_symmetric(g);
    const bool diagram = is_symmetric_connection(g, s, 10).ok;
    const bool lagr = horizontal_lagrangian_check(g, s, 10).ok;
    symmetric += coords;
    if (coords != diagram || coords != lagr)
      out.fail("connection " + std::to_string(k) + ": Γ-symmetry " + std::to_string(coords) + ", diagram " +
               std::to_string(diagram) + ", lagrangian " + std::to_string(lagr));
  }
  if (symmetric == 0 || symmetric == 100) out.fail("random connections were all of one kind");

  const double secs = seconds_since(t0);
  if (secs >= 60) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok)
    out.note = "20 scenarios, 20 (Γ,g), 100 connections (" + std::to_string(symmetric) + " symmetric) in " +
               std::to_string(secs).substr(0, 5) + " s";
  return out;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string("\"") + DVB_CLI_PATH + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string body(const std::string& text) { return text.substr(0, text.find("--- timing ---")); }

Outcome cli() {
  Outcome out;
  for (const std::string args : {"check all --random --seed 5 --samples 40", "check third-dual --random --seed 6 --naive-identification",
                                 "connection check lagrangian --random --seed 7 --symmetric"}) {
    const CliRun a = run_cli(args), b = run_cli(args);
    if (a.code != b.code || body(a.out) != body(b.out)) out.fail("'" + args + "' differs between runs");
    if (a.out.find("--- timing ---") == std::string::npos) out.fail("'" + args + "' printed no timing section");
  }
  const std::string scenario = std::string(DVB_TEST_DATA) + "/asymmetric_connection.json";
  const CliRun first = run_cli("connection check symmetric --scenario \"" + scenario + "\" --no-timing");
  const auto at = first.out.find("replay: dvb ");
  if (first.code != 1 || at == std::string::npos) {
    out.fail("seeded failure did not fail with a replay hint");
    return out;
  }
  const std::string replay = first.out.substr(at + 12, first.out.find('\n', at) - at - 12);
  const CliRun again = run_cli(replay + " --no-timing");
  auto counterexample = [](const std::string& t) {
    const auto p = t.find("counterexample:");
    return p == std::string::npos ? std::string() : t.substr(p, t.find('\n', p) - p);
  };
  if (again.code != 1 || counterexample(again.out).empty() || counterexample(again.out) != counterexample(first.out))
    out.fail("replay '" + replay + "' did not reproduce the counterexample");
  if (out.ok) out.note = "identical bodies across runs; replay reproduces the counterexample";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 structure suite", structure}, {"2 duality suite", duality},    {"3 third-dual suite", third_dual},
      {"4 canonical R grid", r_grid},   {"5 geometry suite", geometry}, {"6 CLI determinism and replay", cli},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.note << std::endl;
  }
  return all ? 0 : 1;
}
