#include "harness/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "json.hpp"

namespace dvb {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorCode::InconsistentScenario, what); }

class ExprParser {
 public:
  ExprParser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly out(vars_);
    skip();
    if (pos_ == text_.size()) parse_fail("empty polynomial expression");
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        parse_fail("expected '+' or '-' at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
      }
      out += term().scaled(sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) parse_fail("expected a number at offset " + std::to_string(pos_));
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly factor() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        num += "/" + digits();
      }
      return MultiPoly::constant(vars_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = vars_.index_of(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
      skip();
      std::uint32_t power = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        power = static_cast<std::uint32_t>(std::stoul(digits()));
      }
      Exponents e(vars_.size(), 0);
      e[*idx] = power;
      return MultiPoly::monomial(vars_, std::move(e), 1);
    }
    parse_fail("unexpected character '" + std::string(1, peek()) + "' in \"" + std::string(text_) + "\"");
  }

  MultiPoly term() {
    MultiPoly out = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      out = out * factor();
      skip();
    }
    return out;
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

MultiPoly poly_from(const json& j, const VarList& vars) {
  if (j.is_number_integer()) return MultiPoly::constant(vars, Rational(j.get<long>()));
  if (j.is_string()) return ExprParser(j.get_ref<const std::string&>(), vars).parse();
  if (!j.is_array()) parse_fail("polynomial literal must be a term list, integer or string");
  MultiPoly out(vars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps")) parse_fail("term needs 'coeff' and 'exps'");
    const json& c = t.at("coeff");
    Rational coeff;
    if (c.is_number_integer())
      coeff = Rational(c.get<long>());
    else if (c.is_string())
      coeff = parse_rational(c.get_ref<const std::string&>());
    else
      parse_fail("coefficient must be an integer or a \"p/q\" string");
    const json& ex = t.at("exps");
    if (!ex.is_array() || ex.size() != vars.size())
      throw Error(ErrorCode::ArityMismatch, "exponent vector needs " + std::to_string(vars.size()) + " entries");
    Exponents e;
    for (const auto& k : ex) {
      if (!k.is_number_unsigned()) parse_fail("exponents must be nonnegative integers");
      e.push_back(k.get<std::uint32_t>());
    }
    out.add_term(e, coeff);
  }
  return out;
}

json poly_to(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", c.get_str()}, {"exps", e}});
  return out;
}

std::vector<MultiPoly> poly_vec(const json& j, const VarList& vars, std::size_t len, const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be an array");
  if (j.size() != len)
    inconsistent(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(len));
  std::vector<MultiPoly> out;
  for (const auto& p : j) out.push_back(poly_from(p, vars));
  return out;
}

PolyMatrix poly_mat(const json& j, const VarList& vars, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be an array of rows");
  if (j.size() != rows) inconsistent(what + " needs " + std::to_string(rows) + " rows");
  PolyMatrix m(rows, cols, vars);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = poly_vec(j[i], vars, cols, what + " row");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

PolyTensor3 poly_tensor(const json& j, const VarList& vars, std::size_t d0, std::size_t d1, std::size_t d2,
                        const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be a nested array");
  if (j.size() != d0) inconsistent(what + " needs outer length " + std::to_string(d0));
  PolyTensor3 t(d0, d1, d2, MultiPoly(vars));
  for (std::size_t i = 0; i < d0; ++i) {
    const PolyMatrix m = poly_mat(j[i], vars, d1, d2, what);
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) t(i, a, b) = m(a, b);
  }
  return t;
}

json vec_to(const std::vector<MultiPoly>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(poly_to(p));
  return out;
}

json mat_to(const PolyMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(poly_to(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

json tensor_to(const PolyTensor3& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    json m = json::array();
    for (std::size_t a = 0; a < t.dim1(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < t.dim2(); ++b) row.push_back(poly_to(t(i, a, b)));
      m.push_back(std::move(row));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t get_size(const json& j, const char* key, std::size_t fallback, bool required) {
  if (!j.contains(key)) {
    if (required) parse_fail(std::string("missing field '") + key + "'");
    return fallback;
  }
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) parse_fail(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Bundle bundle_from(const json& j) {
  if (!j.is_object()) parse_fail("bundle must be an object");
  Bundle b = make_bundle(get_size(j, "n", 0, true), get_size(j, "n_F", 0, true), get_size(j, "n_C", 0, true),
                         get_size(j, "n_E", 0, true));
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_object()) parse_fail("labels must be an object");
    b.F = l.value("F", b.F);
    b.C = l.value("C", b.C);
    b.E = l.value("E", b.E);
  }
  return b;
}

json bundle_to(const Bundle& b) {
  return {{"n", b.n()}, {"n_F", b.nF}, {"n_C", b.nC}, {"n_E", b.nE}, {"labels", {{"F", b.F}, {"C", b.C}, {"E", b.E}}}};
}

Scenario parse_scenario(const json& root) {
  if (!root.is_object()) parse_fail("scenario must be a JSON object");
  if (!root.contains("bundle")) parse_fail("scenario needs a 'bundle' section");
  Scenario s;
  s.bundle = bundle_from(root.at("bundle"));
  const VarList& chart = s.bundle.chart;
  const std::size_t n = chart.size(), nE = s.bundle.nE;
  const TotalSpace space(chart, nE);

  if (root.contains("morphism")) {
    const json& m = root.at("morphism");
    Morphism mor;
    mor.source = s.bundle;
    mor.target = m.contains("target") ? bundle_from(m.at("target")) : s.bundle;
    if (mor.target.n() != n) inconsistent("morphism target lives over a different chart dimension");
    mor.target.chart = chart;
    const Bundle& t = mor.target;
    mor.L = poly_mat(m.at("Phi_l"), chart, t.nF, s.bundle.nF, "Phi_l");
    mor.C = poly_mat(m.at("Phi_c"), chart, t.nC, s.bundle.nC, "Phi_c");
    mor.R = poly_mat(m.at("Phi_r"), chart, t.nE, s.bundle.nE, "Phi_r");
    mor.Psi = m.contains("Psi") ? poly_tensor(m.at("Psi"), chart, t.nC, s.bundle.nE, s.bundle.nF, "Psi")
                                : PolyTensor3(t.nC, s.bundle.nE, s.bundle.nF, MultiPoly(chart));
    s.morphism = std::move(mor);
  }
  if (root.contains("vector_field")) {
    const json& v = root.at("vector_field");
    s.vector_field = VectorFieldOnE{space, poly_vec(v.at("base"), space.vars, n, "vector_field.base"),
                                    poly_vec(v.at("fiber"), space.vars, nE, "vector_field.fiber")};
  }
  if (root.contains("one_form")) {
    const json& v = root.at("one_form");
    s.one_form = OneFormOnE{space, poly_vec(v.at("dx"), space.vars, n, "one_form.dx"),
                            poly_vec(v.at("de"), space.vars, nE, "one_form.de")};
  }
  if (root.contains("bivector")) {
    const json& v = root.at("bivector");
    Bivector b = zero_bivector(chart, nE);
    if (v.contains("L_ij")) b.L_ij = poly_mat(v.at("L_ij"), space.vars, n, n, "L_ij");
    if (v.contains("L_ia")) b.L_ia = poly_mat(v.at("L_ia"), space.vars, n, nE, "L_ia");
    if (v.contains("L_ab")) b.L_ab = poly_mat(v.at("L_ab"), space.vars, nE, nE, "L_ab");
    s.bivector = std::move(b);
  }
  if (root.contains("two_form")) {
    const json& v = root.at("two_form");
    LinearTwoForm w = zero_two_form(chart, nE);
    if (v.contains("omega_ija")) w.omega_ija = poly_tensor(v.at("omega_ija"), chart, n, n, nE, "omega_ija");
    if (v.contains("omega_ia")) w.omega_ia = poly_mat(v.at("omega_ia"), chart, n, nE, "omega_ia");
    s.two_form = std::move(w);
  }
  if (root.contains("metric")) s.metric = Metric{chart, poly_mat(root.at("metric").at("g"), chart, nE, nE, "g")};
  if (root.contains("connection")) {
    LinearConnection c = zero_connection(chart, nE);
    c.Gamma = poly_tensor(root.at("connection").at("Gamma"), chart, nE, n, nE, "Gamma");
    s.connection = std::move(c);
  }
  if (root.contains("base_field")) s.base_field = poly_vec(root.at("base_field"), chart, n, "base_field");
  if (root.contains("core_section"))
    s.core_section = CoreSection{chart, poly_vec(root.at("core_section"), chart, s.bundle.nC, "core_section")};
  if (root.contains("linear_section")) {
    const json& v = root.at("linear_section");
    s.linear_section = LinearSection{chart, poly_vec(v.at("xi"), chart, nE, "linear_section.xi"),
                                     poly_mat(v.at("X"), chart, s.bundle.nC, s.bundle.nF, "linear_section.X")};
  }
  if (root.contains("sampling")) {
    const json& v = root.at("sampling");
    if (v.contains("seed")) {
      if (!v.at("seed").is_number_unsigned()) parse_fail("sampling.seed must be a nonnegative integer");
      s.sampling.seed = v.at("seed").get<std::uint64_t>();
    }
    s.sampling.samples = static_cast<int>(get_size(v, "samples", 100, false));
    s.sampling.bound = static_cast<int>(get_size(v, "bound", 7, false));
    if (s.sampling.bound < 1) parse_fail("sampling.bound must be positive");
  }
  s.validate();
  return s;
}

}  // namespace

void Scenario::validate() const {
  try {
    if (morphism) {
      if (!morphism->source.same_shape(bundle)) inconsistent("morphism source differs from the bundle");
      morphism->validate();
    }
    if (bivector) bivector->validate();
    if (two_form) two_form->validate();
    if (metric) metric->validate();
    if (connection) connection->validate();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InconsistentScenario) throw;
    inconsistent(e.what());
  }
}

MultiPoly parse_poly(const std::string& json_text, const VarList& vars) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception&) {
    return ExprParser(json_text, vars).parse();
  }
  return poly_from(j, vars);
}

Scenario scenario_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_scenario(root);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  json root;
  root["bundle"] = bundle_to(s.bundle);
  if (s.morphism) {
    const Morphism& m = *s.morphism;
    root["morphism"] = {{"target", bundle_to(m.target)},
                        {"Phi_l", mat_to(m.L)},
                        {"Phi_c", mat_to(m.C)},
                        {"Phi_r", mat_to(m.R)},
                        {"Psi", tensor_to(m.Psi)}};
  }
  if (s.vector_field) root["vector_field"] = {{"base", vec_to(s.vector_field->base)}, {"fiber", vec_to(s.vector_field->fiber)}};
  if (s.one_form) root["one_form"] = {{"dx", vec_to(s.one_form->dx)}, {"de", vec_to(s.one_form->de)}};
  if (s.bivector)
    root["bivector"] = {{"L_ij", mat_to(s.bivector->L_ij)}, {"L_ia", mat_to(s.bivector->L_ia)}, {"L_ab", mat_to(s.bivector->L_ab)}};
  if (s.two_form) root["two_form"] = {{"omega_ija", tensor_to(s.two_form->omega_ija)}, {"omega_ia", mat_to(s.two_form->omega_ia)}};
  if (s.metric) root["metric"] = {{"g", mat_to(s.metric->g)}};
  if (s.connection) root["connection"] = {{"Gamma", tensor_to(s.connection->Gamma)}};
  if (s.base_field) root["base_field"] = vec_to(*s.base_field);
  if (s.core_section) root["core_section"] = vec_to(s.core_section->gamma);
  if (s.linear_section) root["linear_section"] = {{"xi", vec_to(s.linear_section->xi)}, {"X", mat_to(s.linear_section->X)}};
  root["sampling"] = {{"seed", s.sampling.seed}, {"samples", s.sampling.samples}, {"bound", s.sampling.bound}};
  return root.dump(2);
}

namespace {

PolyMatrix unipotent(std::size_t k, const VarList& chart, Sampler& s, int degree) {
  PolyMatrix m = PolyMatrix::identity(k, chart);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m(i, j) = random_poly(chart, s, degree, 2);
  return m;
}

std::vector<MultiPoly> random_polys(const VarList& vars, std::size_t k, Sampler& s, int degree) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_poly(vars, s, degree, 2));
  return out;
}

}  // namespace

Scenario generate_scenario(std::uint64_t seed, const GenerationBounds& bounds) {
  Sampler s(seed);
  const auto pick = [&](std::size_t hi) { return static_cast<std::size_t>(s.integer(1, static_cast<long>(hi))); };
  const std::size_t n = pick(std::max<std::size_t>(bounds.max_n, 1));
  const std::size_t nF = pick(bounds.max_rank), nC = pick(bounds.max_rank);
  const std::size_t nE = bounds.symmetric_connection ? n : pick(bounds.max_rank);
  const int deg = std::max(bounds.max_degree, 1);

  Scenario sc;
  sc.bundle = make_bundle(n, nF, nC, nE);
  const VarList& chart = sc.bundle.chart;

  Morphism m;
  m.source = sc.bundle;
  m.target = sc.bundle;
  m.target.F = "F'";
  m.target.C = "C'";
  m.target.E = "E'";
  m.L = unipotent(nF, chart, s, deg - 1);
  m.C = unipotent(nC, chart, s, deg - 1);
  m.R = unipotent(nE, chart, s, deg - 1);
  m.Psi = PolyTensor3(nC, nE, nF, MultiPoly(chart));
  for (std::size_t g = 0; g < nC; ++g)
    for (std::size_t a = 0; a < nE; ++a)
      for (std::size_t A = 0; A < nF; ++A) m.Psi(g, a, A) = random_poly(chart, s, deg, 2);
  sc.morphism = std::move(m);

  sc.vector_field = to_field(random_linear_field(chart, nE, s));
  sc.one_form = to_form(random_linear_oneform(chart, nE, s));

  Bivector lam = zero_bivector(chart, nE);
  for (std::size_t b = 1; b < nE; ++b) {
    const MultiPoly entry = lam.space.e(b).scaled(s.rational());
    lam.L_ab(0, b) = entry;
    lam.L_ab(b, 0) = -entry;
  }
  sc.bivector = std::move(lam);

  sc.two_form = random_linear_two_form(chart, nE, s, s.coin());

  if (bounds.symmetric_connection) {
    sc.connection = random_connection(chart, nE, s, true);
    sc.metric = random_metric_pair(chart, nE, s, true).g;
  } else {
    MetricPair pair = random_metric_pair(chart, nE, s, s.coin());
    sc.connection = std::move(pair.conn);
    sc.metric = std::move(pair.g);
  }

  sc.base_field = random_polys(chart, n, s, deg);
  sc.core_section = CoreSection{chart, random_polys(chart, nC, s, deg)};
  LinearSection ls{chart, random_polys(chart, nE, s, deg), PolyMatrix(nC, nF, chart)};
  for (std::size_t i = 0; i < nC; ++i)
    for (std::size_t j = 0; j < nF; ++j) ls.X(i, j) = random_poly(chart, s, deg, 2);
  sc.linear_section = std::move(ls);

  sc.sampling.seed = seed;
  sc.validate();
  return sc;
}

RatVec parse_point(const std::string& text, std::size_t dim) {
  std::string body = text;
  if (const auto eq = body.find('='); eq != std::string::npos) body = body.substr(eq + 1);
  RatVec out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(parse_rational(item.substr(b, item.find_last_not_of(" \t") - b + 1)));
  }
  if (out.size() != dim)
    throw Error(ErrorCode::ArityMismatch, "point needs " + std::to_string(dim) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

}  // namespace dvb
