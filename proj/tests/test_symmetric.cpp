#include <algorithm>

#include "doctest.h"
#include "logcave/lr.hpp"
#include "logcave/symmetric.hpp"
#include "logcave/tableau.hpp"

using namespace logcave;

namespace {

using Dense = std::map<std::vector<int>, BigInt>;

Dense densify(const MonomialExpansion& a) {
  Dense out;
  const auto n = static_cast<std::size_t>(a.num_variables());
  for (const auto& [p, c] : a.terms()) {
    std::vector<int> e = p.vector();
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    do out[e] += c;
    while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

Dense dense_product(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

MonomialExpansion mono(int n, std::initializer_list<std::pair<Partition, long>> terms) {
  MonomialExpansion m(n);
  for (const auto& [p, c] : terms) m.add_term(p, c);
  return m;
}

}  // namespace

TEST_CASE("skew Schur examples") {
  CHECK(skew_schur(SkewShape(Partition({2, 1})), 2) == mono(2, {{Partition({2, 1}), 1}}));
  CHECK(skew_schur(SkewShape(Partition({3, 1}), Partition({3, 1})), 3) == MonomialExpansion::constant(3, 1));
  CHECK(skew_schur(SkewShape(Partition({1})), 3) == mono(3, {{Partition({1}), 1}}));
  CHECK(skew_schur(SkewShape(Partition({1, 1, 1})), 2).is_zero());
}

TEST_CASE("skew Schur matches tableau contents") {
  for (const auto& lam : partitions_up_to(6, 4))
    for (const auto& mu : subpartitions(lam))
      for (int n = 1; n <= 3; ++n) {
        const SkewShape s(lam, mu);
        std::map<Partition, long> orbit;
        for (const auto& t : enumerate_ssyt(s, n)) {
          std::vector<int> c = t.content(n);
          if (!std::is_sorted(c.rbegin(), c.rend())) continue;  // representative exponent only
          ++orbit[Partition(c)];
        }
        MonomialExpansion expected(n);
        for (const auto& [p, k] : orbit) expected.add_term(p, k);
        CHECK(skew_schur(s, n) == expected);
        CHECK(jacobi_trudi(s, n) == expected);
      }
}

TEST_CASE("evaluation at ones is the Weyl dimension") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : partitions_up_to(6, n))
      CHECK(schur_polynomial(p, n).evaluate_at_ones() == weyl_dimension(GLWeight::from_partition(p, n)));
}

TEST_CASE("multiplication") {
  const MonomialExpansion e1 = mono(2, {{Partition({1}), 1}});
  CHECK(multiply(e1, MonomialExpansion::constant(2, 1)) == e1);
  CHECK(multiply(e1, e1) == mono(2, {{Partition({2}), 1}, {Partition({1, 1}), 2}}));
  CHECK_THROWS_AS(multiply(e1, mono(3, {})), std::invalid_argument);
  // Against the dense product of all monomials.
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : partitions_up_to(3, n))
      for (const auto& b : partitions_up_to(3, n)) {
        const MonomialExpansion sa = schur_polynomial(a, n), sb = skew_schur(SkewShape(b), n);
        const Dense d = dense_product(densify(sa), densify(sb));
        CHECK(densify(multiply(sa, sb)) == d);
      }
}

TEST_CASE("differences") {
  const MonomialExpansion a = schur_polynomial(Partition({2, 1}), 3);
  DifferenceSummary d = subtract_and_min_coefficient(a, a);
  CHECK(d.difference.is_zero());
  CHECK(d.min_coefficient == 0);
  CHECK_FALSE(d.witness);

  d = subtract_and_min_coefficient(mono(2, {{Partition({1}), 1}}), mono(2, {{Partition({2}), 1}}));
  CHECK(d.min_coefficient == -1);
  REQUIRE(d.witness);
  CHECK(*d.witness == Partition({2}));

  const MonomialExpansion s21 = schur_polynomial(Partition({2, 1}), 4);
  d = subtract_and_min_coefficient(multiply(s21, s21),
                                   multiply(schur_polynomial(Partition({3, 1}), 4), schur_polynomial(Partition({1, 1}), 4)));
  CHECK(d.min_coefficient >= 0);
}

TEST_CASE("Schur basis") {
  CHECK(to_schur_basis(schur_polynomial(Partition({2, 1}), 3)).terms() ==
        SchurExpansion::Terms{{Partition({2, 1}), 1}});
  const auto p = to_schur_basis(multiply(schur_polynomial(Partition({1}), 3), schur_polynomial(Partition({1, 1}), 3)));
  CHECK(p.terms() == SchurExpansion::Terms{{Partition({2, 1}), 1}, {Partition({1, 1, 1}), 1}});
  const auto s21 = schur_polynomial(Partition({2, 1}), 4);
  const SchurExpansion::Terms square{{Partition({4, 2}), 1},    {Partition({4, 1, 1}), 1}, {Partition({3, 3}), 1},
                                     {Partition({3, 2, 1}), 2}, {Partition({3, 1, 1, 1}), 1}, {Partition({2, 2, 2}), 1},
                                     {Partition({2, 2, 1, 1}), 1}};
  CHECK(to_schur_basis(multiply(s21, s21)).terms() == square);

  // Round trip and agreement with LR coefficients for skew characters.
  for (const auto& lam : partitions_up_to(6, 3))
    for (const auto& mu : subpartitions(lam)) {
      const MonomialExpansion s = skew_schur(SkewShape(lam, mu), 3);
      const SchurExpansion e = to_schur_basis(s);
      CHECK(e.all_nonnegative());
      CHECK(to_monomial_basis(e, 3) == s);
      for (const auto& nu : partitions_of(lam.size() - mu.size(), 3))
        CHECK(e.coefficient(nu) == lr_tableau_count(lam, mu, nu));
    }
}

TEST_CASE("Toeplitz coefficient examples") {
  const FiniteSequence delta = FiniteSequence::delta(0);
  for (int n = 1; n <= 4; ++n) CHECK(toeplitz_schur_coefficient(delta, Partition(), n) == 1);
  const FiniteSequence x = FiniteSequence::from_values({1, 1});
  CHECK(toeplitz_schur_coefficient(x, Partition({1, 1}), 2) == 1);
  CHECK(toeplitz_schur_coefficient(x, Partition({2}), 2) == 0);
  CHECK_THROWS(toeplitz_schur_coefficient(x, Partition({1, 1, 1}), 2));
}
