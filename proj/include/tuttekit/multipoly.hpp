#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

/// Canonical ordering of variable names: x, y, X, Y, q, t, u, w, w_1, w_2, ...,
/// Z, Z1, Z2, s, then anything else alphabetically.
bool variable_less(const std::string& a, const std::string& b);

/// Sparse polynomial with exact rational coefficients in named variables.
///
/// Variables are kept in canonical order and every exponent vector has one
/// entry per declared variable. Zero coefficients are never stored. Terms
/// iterate in graded-lex order (highest total degree first), which is also the
/// printing order.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants promote implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const Rational& coeff,
                            std::initializer_list<std::pair<std::string, std::uint32_t>> powers);
  /// The zero polynomial with a declared (possibly unused) variable list.
  static MultiPoly zero_in(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_variable(std::string_view name) const;

  /// Highest power of `name` (0 if absent or the polynomial is zero).
  std::uint32_t degree(std::string_view name) const;
  std::uint32_t total_degree() const;

  Rational coefficient(std::initializer_list<std::pair<std::string, std::uint32_t>> powers) const;
  Rational coefficient(const std::map<std::string, std::uint32_t>& powers) const;
  Rational constant_term() const;

  /// Coefficients as polynomials in the remaining variables, indexed by the
  /// power of `name` (0..degree).
  std::vector<MultiPoly> coefficients_in(const std::string& name) const;

  /// Returns the same polynomial declared over `variables` (a superset).
  MultiPoly with_variables(const std::vector<std::string>& variables) const;
  /// Drops declared variables that appear in no term.
  MultiPoly trimmed() const;
  MultiPoly renamed(const std::map<std::string, std::string>& renames) const;

  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  /// Simultaneous substitution. Every key must be a declared variable.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  /// Full evaluation; every variable occurring in a term must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Exact quotient by (name - root); throws Error(inconsistent) on remainder.
  MultiPoly divide_by_linear(const std::string& name, const Rational& root) const;
  /// Exact quotient by name^power; throws Error(inconsistent) on remainder.
  MultiPoly divide_by_power(const std::string& name, std::uint32_t power) const;

  MultiPoly pow(unsigned exponent) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);
  MultiPoly& operator/=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator/(MultiPoly a, const Rational& s) { return a /= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical text form, e.g. "x^3 + x^2 + x*y", "1/2*q - 3".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::size_t index_of(std::string_view name) const;  // npos if absent
  static std::vector<std::string> merged(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the canonical text grammar plus parentheses and integer powers of
/// sub-expressions, e.g. "(X+Y-1)^2 - 1/2*x*y". Throws Error(parse).
MultiPoly parse_poly(std::string_view text);

}  // namespace tuttekit
