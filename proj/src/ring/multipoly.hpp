#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ring/rational.hpp"

namespace dvb {

/// Ordered, immutable list of variable names shared between polynomials.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  /// Concatenation; names must stay distinct.
  VarList concat(const VarList& other) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over exact rationals. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const VarList& vars, const Rational& c);
  static MultiPoly variable(const VarList& vars, std::string_view name);
  static MultiPoly variable(const VarList& vars, std::size_t index);
  static MultiPoly monomial(const VarList& vars, Exponents exps, const Rational& c);

  const VarList& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when the polynomial is constant, empty otherwise.
  std::optional<Rational> constant_value() const;

  /// Adds c·x^exps into the polynomial.
  void add_term(const Exponents& exps, const Rational& c);

  Rational eval(std::span<const Rational> point) const;
  MultiPoly partial(std::string_view var) const;
  MultiPoly partial(std::size_t var_index) const;
  /// Substitutes subs[i] for variable i. All substitutes share one variable
  /// list, which becomes the result's.
  MultiPoly compose(std::span<const MultiPoly> subs) const;
  /// Same polynomial over a larger (or permuted) variable list; every current
  /// variable must appear by name in `target`.
  MultiPoly embed(const VarList& target) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Whether no term involves any of the given variables.
  bool is_free_of(std::span<const std::size_t> var_indices) const;
  /// Whether every term has total degree `degree` in the given variables.
  bool is_homogeneous_in(std::span<const std::size_t> var_indices, std::uint32_t degree) const;

  MultiPoly scaled(const Rational& s) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void require_same_vars(const MultiPoly& other) const;

  VarList vars_;
  TermMap terms_;
};

}  // namespace dvb
