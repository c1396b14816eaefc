#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcave/convex_hull.hpp"
#include "logcave/polynomial.hpp"

namespace logcave {

using ValuationPoint = std::vector<int>;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Valuation for the coordinate flag {x_1 = ... = x_k = 0} with u_k = x_k: the lex-minimal
/// exponent. Throws std::invalid_argument on the zero polynomial.
ValuationPoint flag_valuation(const MultiPolynomial& f);

/// f(x_{perm[0]}, ..., x_{perm[d-1]}): the only flag variation exposed.
MultiPolynomial permute_variables(const MultiPolynomial& f, const std::vector<int>& perm);

/// Finite-dimensional subspace of Q[x_1..x_d] held in lex echelon form: basis elements
/// have pairwise distinct valuations and are monic there.
class PolynomialSubspace {
 public:
  enum class Check { field_generating, none };

  /// Reduces `spanning` to an echelon basis (dependent elements are dropped). With
  /// Check::field_generating (the default) throws std::invalid_argument unless 1 lies in
  /// the span and the valuations affinely span a d-dimensional space.
  PolynomialSubspace(int num_variables, const std::vector<MultiPolynomial>& spanning,
                     Check check = Check::field_generating);

  int num_variables() const { return num_variables_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Basis in increasing order of valuation.
  std::vector<MultiPolynomial> basis() const;
  bool contains_one() const;
  bool generates_field() const;
  bool contains(const MultiPolynomial& f) const;

 private:
  friend PolynomialSubspace power_subspace(const PolynomialSubspace&, int);
  friend PolynomialSubspace product_subspace(const PolynomialSubspace&, const PolynomialSubspace&);
  friend std::vector<ValuationPoint> valuation_set(const PolynomialSubspace&);

  explicit PolynomialSubspace(int num_variables) : num_variables_(num_variables) {}
  /// Eliminates basis valuations from f in increasing lex order; with `full` every term is
  /// processed (the result is zero iff f lies in the span), otherwise only leading terms.
  MultiPolynomial reduce(MultiPolynomial f, bool full) const;
  /// Adds f if independent; returns whether it was added.
  bool insert(MultiPolynomial f);

  int num_variables_;
  std::map<ValuationPoint, MultiPolynomial> basis_;
};

/// Span of all products f·g with f in a, g in b.
PolynomialSubspace product_subspace(const PolynomialSubspace& a, const PolynomialSubspace& b);

/// S^k; throws std::invalid_argument when k < 1.
PolynomialSubspace power_subspace(const PolynomialSubspace& s, int k);

/// v(S \ 0) in lex order; its size equals dim S.
std::vector<ValuationPoint> valuation_set(const PolynomialSubspace& s);

/// Upper-triangular integer basis of the lattice spanned by `generators`, pivots positive
/// and entries above each pivot reduced into [0, pivot).
IntegerMatrix hermite_normal_form(const std::vector<std::vector<BigInt>>& generators, std::size_t width);

struct BodyApprox {
  int level = 0;
  int num_variables = 0;
  /// v(f)/k over f in S^k, 1 <= k <= level, deduplicated and sorted.
  std::vector<RationalPoint> points;
  ConvexHull hull;
  /// Hermite basis of the lattice spanned by (k, v(f)), coordinates (k, v_1, ..., v_d).
  IntegerMatrix lattice;
  /// Covolume of the lattice's slice (0, Z^d); zero when it has rank < d.
  BigInt covolume;
  /// dim S^k for k = 0..level.
  std::vector<std::size_t> dimensions;
  /// hull(level) == hull(level - 1); false at level 1.
  bool stable = false;
  /// Subspaces S^k for k = 1..level; S^k is reused by later computations.
  std::vector<PolynomialSubspace> powers;
};

/// Inner approximation of the convex body at levels 1..k_max. Throws for k_max < 1.
BodyApprox body_approximation(const PolynomialSubspace& s, int k_max);

/// Euclidean volume of the hull divided by the covolume. Throws std::domain_error when the
/// hull or the lattice is not full-dimensional.
Rational normalized_volume(const BodyApprox& b);

/// Same volume measured against an explicitly given covolume.
Rational normalized_volume(const BodyApprox& b, const BigInt& covolume);

struct DegreeEstimate {
  Rational degree;
  /// dim S^k minus the fitted polynomial at k = 0..k_max - d - 1.
  std::vector<Rational> residuals;
  std::vector<std::size_t> dimensions;
  /// The d-th differences over the last two windows agree.
  bool stable = false;
  std::string message;
};

/// Fits dim S^k by a degree-d polynomial through k = k_max - d .. k_max and reports
/// d! times its leading coefficient. Throws std::invalid_argument unless k_max >= d + 1.
DegreeEstimate degree_estimate(const PolynomialSubspace& s, int k_max);
DegreeEstimate degree_estimate(const std::vector<std::size_t>& dimensions, int num_variables);

struct MinkowskiResult {
  bool pass = true;
  std::size_t sums_checked = 0;
  std::optional<RationalPoint> failing;
};

/// Every sum of hull vertices of Δ(S1) and Δ(S2) lies in Δ(S1 S2), all at level k_max.
MinkowskiResult minkowski_inclusion_check(const PolynomialSubspace& s1, const PolynomialSubspace& s2,
                                          int k_max);

struct BrunnMinkowskiResult {
  bool pass = true;
  bool equality = false;
  /// d!·vol measured against the lattice of S1 S2.
  Rational degree_first, degree_second, degree_product;
  std::string comparison;
};

/// Certified comparison of x^{1/d} + y^{1/d} with 1 for positive rationals x, y:
/// returns -1, 0 or 1 as the sum is below, equal to or above 1.
int compare_root_sum_with_one(const Rational& x, const Rational& y, int d);

/// deg(S1 S2)^{1/d} >= deg(S1)^{1/d} + deg(S2)^{1/d}. Throws std::domain_error when any
/// of the three approximations is not yet stable at k_max.
BrunnMinkowskiResult brunn_minkowski_check(const PolynomialSubspace& s1, const PolynomialSubspace& s2,
                                           int k_max);

}  // namespace logcave
