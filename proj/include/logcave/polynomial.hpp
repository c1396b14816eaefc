#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

using ExponentVector = std::vector<int>;

/// Polynomial in d variables with rational coefficients; zero coefficients are never stored.
class MultiPolynomial {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  explicit MultiPolynomial(int num_variables);
  MultiPolynomial(int num_variables, const Terms& terms);

  static MultiPolynomial constant(int num_variables, const Rational& c);
  /// c·x^e with d = e.size().
  static MultiPolynomial monomial(const ExponentVector& e, const Rational& c = 1);

  int num_variables() const { return num_variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const ExponentVector& e) const;

  /// Throws std::invalid_argument on a negative exponent or wrong length.
  void add_term(const ExponentVector& e, const Rational& c);

  MultiPolynomial& operator+=(const MultiPolynomial& other);
  MultiPolynomial& operator-=(const MultiPolynomial& other);
  MultiPolynomial& operator*=(const Rational& c);

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  bool operator==(const MultiPolynomial&) const = default;

  /// Terms in increasing lex order of exponents, e.g. "-1/2 + x^2*y". Variables are
  /// x, y, z when d <= 3 and x1..xd otherwise; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void require_same_dimension(const MultiPolynomial& other) const;

  int num_variables_;
  Terms terms_;
};

/// Name of variable i (0-based) in a d-variable context.
std::string variable_name(int i, int num_variables);

}  // namespace logcave
