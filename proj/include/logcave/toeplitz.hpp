#pragma once

#include <optional>
#include <vector>

#include "logcave/partition.hpp"
#include "logcave/sequence.hpp"
#include "logcave/symmetric.hpp"

namespace logcave {

/// det[x_{cols[b] - rows[a]}]. Throws std::invalid_argument unless rows and cols are
/// strictly increasing and of equal length.
Rational toeplitz_minor(const FiniteSequence& x, const std::vector<int>& rows,
                        const std::vector<int>& cols);

struct TwoByTwoResult {
  bool pass = true;
  std::optional<int> failing_index;
};

/// x_k^2 >= x_{k-1} x_{k+1} for every k between the first and last support index.
TwoByTwoResult two_by_two_scan(const FiniteSequence& x);

struct CharacterPositivityResult {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<GLWeight> failing;
  Rational failing_value;
};

/// Toeplitz slice coefficients are >= 0 at every weight λ + m·1, λ a partition with at most
/// n parts and |λ| <= weight_bound, m the first support index of x. Positivity is certified
/// only up to that window.
CharacterPositivityResult character_positivity_check(const FiniteSequence& x, int n, int weight_bound);

/// prod_{i=1..n} x(z_i) = (z_1···z_n)^shift · scaled / denominator, with `scaled` integral.
struct ProductExpansion {
  MonomialExpansion scaled;
  BigInt denominator;
  int shift = 0;
};

ProductExpansion toeplitz_product_expansion(const FiniteSequence& x, int n);

/// The product peeled into Schur functions: coefficient(λ) is the s_λ-coefficient.
struct ProductSchurExpansion {
  SchurExpansion scaled;
  BigInt denominator;
  int shift = 0;
  int rank = 1;

  Rational coefficient(const GLWeight& lambda) const;
};

ProductSchurExpansion product_schur_expansion(const FiniteSequence& x, int n);

/// s_λ-coefficient of the product, obtained by expanding the product into monomials and
/// peeling Schur functions. Independent of the determinant route.
Rational product_schur_coefficient(const FiniteSequence& x, const GLWeight& lambda);

}  // namespace logcave
