#include "ring/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace dvb {

VarList::VarList(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw Error(ErrorCode::VariableMismatch, "duplicate variable name '" + n + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarList::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorCode::UnknownVariable, "variable '" + std::string(name) + "' not in list");
}

VarList VarList::concat(const VarList& other) const {
  std::vector<std::string> all = names();
  all.insert(all.end(), other.names().begin(), other.names().end());
  return VarList(std::move(all));
}

bool GrLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(const VarList& vars, const Rational& c) {
  MultiPoly p(vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const VarList& vars, std::string_view name) {
  return variable(vars, vars.require_index(name));
}

MultiPoly MultiPoly::variable(const VarList& vars, std::size_t index) {
  if (index >= vars.size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(const VarList& vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars.size())
    throw Error(ErrorCode::ArityMismatch, "exponent vector length differs from variable count");
  MultiPoly p(vars);
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size())
    throw Error(ErrorCode::ArityMismatch, "exponent vector length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorCode::ArityMismatch, "evaluation point has " + std::to_string(point.size()) +
                                              " coordinates, polynomial has " + std::to_string(vars_.size()) +
                                              " variables");
  Rational acc = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::partial(std::string_view var) const { return partial(vars_.require_index(var)); }

MultiPoly MultiPoly::partial(std::size_t var_index) const {
  if (var_index >= vars_.size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[var_index] == 0) continue;
    Exponents d = exps;
    --d[var_index];
    out.add_term(d, coeff * exps[var_index]);
  }
  return out;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> subs) const {
  if (subs.size() != vars_.size())
    throw Error(ErrorCode::ArityMismatch, "compose needs one substitute per variable");
  VarList target = subs.empty() ? VarList() : subs.front().vars();
  for (const auto& s : subs)
    if (!(s.vars() == target)) throw Error(ErrorCode::VariableMismatch, "substitutes use different variable lists");
  // Cache powers per variable so repeated exponents are computed once.
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * subs[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [exps, coeff] : terms_) {
    MultiPoly term = MultiPoly::constant(target, coeff);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) term = term * power(i, exps[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::embed(const VarList& target) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.require_index(vars_[i]);
  MultiPoly out(target);
  for (const auto& [exps, coeff] : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[map[i]] = exps[i];
    out.add_term(e, coeff);
  }
  return out;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // GrLex puts the highest total degree last.
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

bool MultiPoly::is_free_of(std::span<const std::size_t> var_indices) const {
  for (const auto& [exps, coeff] : terms_)
    for (auto i : var_indices)
      if (exps.at(i) != 0) return false;
  return true;
}

bool MultiPoly::is_homogeneous_in(std::span<const std::size_t> var_indices, std::uint32_t degree) const {
  for (const auto& [exps, coeff] : terms_) {
    std::uint32_t d = 0;
    for (auto i : var_indices) d += exps.at(i);
    if (d != degree) return false;
  }
  return true;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
  MultiPoly out(vars_);
  if (s == 0) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), exps, coeff * s);
  return out;
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

void MultiPoly::require_same_vars(const MultiPoly& other) const {
  if (!(vars_ == other.vars_)) throw Error(ErrorCode::VariableMismatch, "polynomials use different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    Rational c = coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace dvb
