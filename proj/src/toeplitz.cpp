#include "logcave/toeplitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace logcave {

Rational toeplitz_minor(const FiniteSequence& x, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("Toeplitz minor needs as many rows as columns");
  auto increasing = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!increasing(rows) || !increasing(cols))
    throw std::invalid_argument("Toeplitz minor indices must be strictly increasing");
  RationalMatrix m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m[a][b] = x.at(cols[b] - rows[a]);
  return determinant(std::move(m));
}

TwoByTwoResult two_by_two_scan(const FiniteSequence& x) {
  TwoByTwoResult out;
  if (x.empty()) return out;
  for (int k = x.min_index(); k <= x.max_index(); ++k) {
    const Rational v = x.at(k);
    if (v * v < x.at(k - 1) * x.at(k + 1)) {
      out.pass = false;
      out.failing_index = k;
      return out;
    }
  }
  return out;
}

CharacterPositivityResult character_positivity_check(const FiniteSequence& x, int n, int weight_bound) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  CharacterPositivityResult out;
  // x(z) = z^m y(z) with y supported from 0: the weights that matter are partitions + m.
  const int m = x.empty() ? 0 : x.min_index();
  for (const auto& lambda : partitions_up_to(weight_bound, n)) {
    ++out.checked;
    const GLWeight w = GLWeight::from_partition(lambda, n).shifted(m);
    const Rational c = toeplitz_schur_coefficient(x, w);
    if (c < 0) {
      out.pass = false;
      out.failing = w;
      out.failing_value = c;
      return out;
    }
  }
  return out;
}

ProductExpansion toeplitz_product_expansion(const FiniteSequence& x, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  ProductExpansion out{MonomialExpansion(n), 1, 0};
  if (x.empty()) return out;
  out.shift = x.min_index();
  BigInt common = 1;
  for (const auto& [k, v] : x.support()) {
    BigInt g;
    mpz_lcm(g.get_mpz_t(), common.get_mpz_t(), v.get_den().get_mpz_t());
    common = g;
  }
  std::vector<std::pair<int, BigInt>> y;  // shifted exponent, integral value
  for (const auto& [k, v] : x.support()) {
    Rational scaled = v * Rational(common);
    y.emplace_back(k - out.shift, scaled.get_num());
  }
  std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  out.denominator = power(common, static_cast<unsigned long>(n));
  // One orbit per weakly decreasing choice of support exponents; its coefficient is the
  // product of the chosen values.
  std::vector<int> exponents(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, std::size_t from, const BigInt& value) -> void {
    if (i == n) {
      out.scaled.add_term(Partition(exponents), value);
      return;
    }
    for (std::size_t t = from; t < y.size(); ++t) {
      exponents[static_cast<std::size_t>(i)] = y[t].first;
      self(self, i + 1, t, value * y[t].second);
    }
  };
  rec(rec, 0, 0, BigInt(1));
  return out;
}

Rational ProductSchurExpansion::coefficient(const GLWeight& lambda) const {
  if (lambda.rank() != rank) throw std::invalid_argument("weight rank does not match the product");
  const GLWeight unshifted = lambda.shifted(-shift);
  if (unshifted.min_entry() < 0) return 0;
  Rational out(scaled.coefficient(Partition(unshifted.vector())), denominator);
  out.canonicalize();
  return out;
}

ProductSchurExpansion product_schur_expansion(const FiniteSequence& x, int n) {
  const ProductExpansion p = toeplitz_product_expansion(x, n);
  return {to_schur_basis(p.scaled), p.denominator, p.shift, n};
}

Rational product_schur_coefficient(const FiniteSequence& x, const GLWeight& lambda) {
  return product_schur_expansion(x, lambda.rank()).coefficient(lambda);
}

}  // namespace logcave
