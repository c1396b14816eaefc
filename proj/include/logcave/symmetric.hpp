#pragma once

#include <map>
#include <optional>

#include "logcave/partition.hpp"
#include "logcave/sequence.hpp"

namespace logcave {

/// Symmetric polynomial in n variables written in the monomial basis:
/// key λ stands for the orbit sum m_λ of z^λ under permutations of z_1..z_n.
class MonomialExpansion {
 public:
  using Terms = std::map<Partition, BigInt>;

  explicit MonomialExpansion(int num_variables);
  /// Throws if a key has more than `num_variables` parts. Zero coefficients are dropped.
  MonomialExpansion(int num_variables, const Terms& terms);

  static MonomialExpansion constant(int num_variables, const BigInt& c);

  int num_variables() const { return num_variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Partition& exponent) const;

  void add_term(const Partition& exponent, const BigInt& c);

  /// Value at z_1 = ... = z_n = 1.
  BigInt evaluate_at_ones() const;

  MonomialExpansion& operator+=(const MonomialExpansion& other);
  MonomialExpansion& operator-=(const MonomialExpansion& other);
  MonomialExpansion& operator*=(const BigInt& c);

  friend MonomialExpansion operator+(MonomialExpansion a, const MonomialExpansion& b) { return a += b; }
  friend MonomialExpansion operator-(MonomialExpansion a, const MonomialExpansion& b) { return a -= b; }
  bool operator==(const MonomialExpansion&) const = default;

 private:
  void require_same_rank(const MonomialExpansion& other) const;

  int num_variables_;
  Terms terms_;
};

/// Virtual character: finite integer combination of Schur functions.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, BigInt>;

  SchurExpansion() = default;
  explicit SchurExpansion(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Partition& p) const;
  void add_term(const Partition& p, const BigInt& c);
  bool all_nonnegative() const;

  bool operator==(const SchurExpansion&) const = default;

 private:
  Terms terms_;
};

/// Number of semistandard fillings of `shape` with content (c_1, c_2, ...),
/// counted by stacking horizontal strips.
BigInt skew_kostka(const SkewShape& shape, std::span<const int> content);

/// s_{λ/μ}(z_1..z_n) in the monomial basis.
MonomialExpansion skew_schur(const SkewShape& shape, int n);
MonomialExpansion schur_polynomial(const Partition& lambda, int n);

/// h_k(z_1..z_n): every exponent orbit of degree k with coefficient 1.
MonomialExpansion complete_homogeneous(int k, int n);

/// Skew Jacobi–Trudi determinant det[h_{λ_i - μ_j - i + j}] expanded over the ring of
/// symmetric polynomials. Independent of the tableau model used by skew_schur.
MonomialExpansion jacobi_trudi(const SkewShape& shape, int n);

/// Exact product. Throws std::invalid_argument on a variable-count mismatch.
MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b);

struct DifferenceSummary {
  MonomialExpansion difference;
  BigInt min_coefficient;            // 0 for the zero polynomial
  std::optional<Partition> witness;  // an orbit with the most negative coefficient
};

/// a - b with its smallest coefficient.
DifferenceSummary subtract_and_min_coefficient(const MonomialExpansion& a, const MonomialExpansion& b);

/// Expansion in Schur functions by peeling the lexicographically largest orbit
/// (which is dominance-maximal) until nothing remains.
SchurExpansion to_schur_basis(const MonomialExpansion& a);

MonomialExpansion to_monomial_basis(const SchurExpansion& s, int n);

/// det[x_{λ_i - i + j}]_{i,j=1..n}: the coefficient of s_λ(z_1..z_n) in prod_i sum_k x_k z_i^k.
Rational toeplitz_schur_coefficient(const FiniteSequence& x, const GLWeight& lambda);
/// Throws if `lambda` has more than n parts.
Rational toeplitz_schur_coefficient(const FiniteSequence& x, const Partition& lambda, int n);

}  // namespace logcave
