#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "logcave/body.hpp"
#include "logcave/parse.hpp"

using namespace logcave;

namespace {

PolynomialSubspace span(int d, const std::string& text,
                        PolynomialSubspace::Check check = PolynomialSubspace::Check::field_generating) {
  return PolynomialSubspace(d, parse_polynomial_list(text, d), check);
}

// All monomials of degree <= e in d variables.
PolynomialSubspace simplex_subspace(int d, int e) {
  std::vector<MultiPolynomial> basis;
  ExponentVector x(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d) {
      basis.push_back(MultiPolynomial::monomial(x));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      x[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, e);
  return PolynomialSubspace(d, basis);
}

MultiPolynomial random_polynomial(std::mt19937_64& rng, int d, int terms) {
  std::uniform_int_distribution<int> exp(0, 3), num(-4, 4);
  MultiPolynomial f(d);
  while (f.is_zero())
    for (int t = 0; t < terms; ++t) {
      ExponentVector e(static_cast<std::size_t>(d));
      for (auto& x : e) x = exp(rng);
      f.add_term(e, num(rng));
    }
  return f;
}

RationalPoint as_point(const ValuationPoint& v) { return RationalPoint(v.begin(), v.end()); }

}  // namespace

TEST_CASE("flag valuation") {
  CHECK(flag_valuation(MultiPolynomial::constant(3, 5)) == ValuationPoint{0, 0, 0});
  CHECK(flag_valuation(parse_polynomial("x^2*y + x^3", 2)) == ValuationPoint{2, 1});
  CHECK(flag_valuation(parse_polynomial("x", 2) * parse_polynomial("y", 2)) == ValuationPoint{1, 1});
  CHECK_THROWS_AS(flag_valuation(MultiPolynomial(2)), std::invalid_argument);
  const MultiPolynomial f = parse_polynomial("x^2*y + x^3", 2);
  CHECK(flag_valuation(permute_variables(f, {1, 0})) == ValuationPoint{0, 3});
  CHECK_THROWS(permute_variables(f, {0, 0}));
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 3;
    const MultiPolynomial f = random_polynomial(rng, d, 3), g = random_polynomial(rng, d, 3);
    ValuationPoint sum = flag_valuation(f);
    const ValuationPoint vg = flag_valuation(g);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vg[i];
    CHECK(flag_valuation(f * g) == sum);
    const MultiPolynomial h = f + g;
    if (!h.is_zero()) CHECK(flag_valuation(h) >= std::min(flag_valuation(f), vg));
  }
}

TEST_CASE("subspaces, powers and valuation sets") {
  const auto one = span(2, "1", PolynomialSubspace::Check::none);
  for (int k = 1; k <= 4; ++k) CHECK(power_subspace(one, k).dimension() == 1);
  CHECK_THROWS(power_subspace(one, 0));
  CHECK(power_subspace(span(1, "1; x"), 3).dimension() == 4);
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 2; ++e)
      for (int k = 1; k <= 3; ++k)
        CHECK(power_subspace(simplex_subspace(d, e), k).dimension() ==
              binomial(static_cast<unsigned long>(k * e + d), static_cast<unsigned long>(d)));

  CHECK(valuation_set(span(2, "1; x; y")) == std::vector<ValuationPoint>{{0, 0}, {0, 1}, {1, 0}});
  const auto reduced = span(1, "1; x; x + x^2");
  CHECK(valuation_set(reduced) == std::vector<ValuationPoint>{{0}, {1}, {2}});
  CHECK(span(1, "1; x; 2*x; 1 + x").dimension() == 2);
  CHECK(reduced.contains(parse_polynomial("3*x^2 - 1", 1)));
  CHECK_FALSE(reduced.contains(parse_polynomial("x^3", 1)));

  CHECK_THROWS_AS(span(2, "x; y; x*y"), std::invalid_argument);
  CHECK_THROWS_AS(span(2, "1; x; x^2"), std::invalid_argument);
  CHECK_FALSE(span(2, "1; x", PolynomialSubspace::Check::none).generates_field());
  CHECK(span(2, "1 + x; x; y").contains_one());
}

TEST_CASE("dim S equals the rank of the coefficient matrix") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3;
    std::vector<MultiPolynomial> gens{MultiPolynomial::constant(d, 1)};
    for (int i = 0; i < 4; ++i) gens.push_back(random_polynomial(rng, d, 2));
    gens.push_back(gens[1] + gens[2]);
    const PolynomialSubspace s(d, gens, PolynomialSubspace::Check::none);
    std::set<ExponentVector> support;
    for (const auto& g : gens)
      for (const auto& [e, c] : g.terms()) support.insert(e);
    RationalMatrix m;
    for (const auto& g : gens) {
      std::vector<Rational> row;
      for (const auto& e : support) row.push_back(g.coefficient(e));
      m.push_back(row);
    }
    CHECK(valuation_set(s).size() == s.dimension());
    CHECK(s.dimension() == rank(m));
    const PolynomialSubspace sq = power_subspace(s, 2);
    CHECK(valuation_set(sq).size() == sq.dimension());
    for (const auto& f : s.basis())
      for (const auto& g : s.basis()) CHECK(sq.contains(f * g));
  }
}

TEST_CASE("semigroup and monotonicity") {
  const auto s = span(2, "1; x + y; x*y^2; y");
  const auto v1 = valuation_set(s), v2 = valuation_set(power_subspace(s, 2));
  const auto v3 = valuation_set(power_subspace(s, 3));
  const std::set<ValuationPoint> level3(v3.begin(), v3.end());
  for (const auto& a : v1)
    for (const auto& b : v2) {
      ValuationPoint c = a;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
      CHECK(level3.count(c) == 1);
    }
  for (int k = 1; k <= 2; ++k) {
    const BodyApprox small = body_approximation(s, k), big = body_approximation(s, 2 * k);
    for (const auto& v : small.hull.vertices()) CHECK(big.hull.contains(v));
    for (const auto& p : small.points) CHECK(small.hull.contains(p));
  }
}

TEST_CASE("bodies and volumes") {
  for (int k = 1; k <= 3; ++k) {
    const BodyApprox b = body_approximation(span(2, "1; x; y"), k);
    CHECK(b.hull.vertices() == std::vector<RationalPoint>{as_point({0, 0}), as_point({0, 1}), as_point({1, 0})});
    CHECK(normalized_volume(b) == Rational(1, 2));
    CHECK(b.stable == (k > 1));
  }
  const BodyApprox seg = body_approximation(span(1, "1; x^2"), 2);
  CHECK(seg.hull.vertices() == std::vector<RationalPoint>{as_point({0}), as_point({2})});
  CHECK(seg.points.size() == 3);
  CHECK(seg.covolume == 2);
  CHECK(normalized_volume(seg) == 1);
  CHECK(seg.lattice == IntegerMatrix{{1, 0}, {0, 2}});
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e) {
      const BodyApprox b = body_approximation(simplex_subspace(d, e), 1);
      CHECK(normalized_volume(b) == Rational(power(BigInt(e), static_cast<unsigned long>(d))) /
                                        Rational(factorial(static_cast<unsigned long>(d))));
    }
  CHECK_THROWS_AS(normalized_volume(body_approximation(span(2, "1; x", PolynomialSubspace::Check::none), 2)),
                  std::domain_error);
  CHECK_THROWS(body_approximation(span(1, "1; x"), 0));
  CHECK(hermite_normal_form({{2, 4}, {3, 0}}, 2) == IntegerMatrix{{1, 8}, {0, 12}});
}

TEST_CASE("degree estimates") {
  const DegreeEstimate simplex = degree_estimate(span(2, "1; x; y"), 4);
  CHECK(simplex.degree == 1);
  CHECK(simplex.stable);
  CHECK(simplex.dimensions == std::vector<std::size_t>{1, 3, 6, 10, 15});
  for (const auto& r : simplex.residuals) CHECK(r == 0);
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 2; ++e) {
      const PolynomialSubspace s = simplex_subspace(d, e);
      const DegreeEstimate est = degree_estimate(s, d + 2);
      CHECK(est.degree == Rational(power(BigInt(e), static_cast<unsigned long>(d))));
      CHECK(est.stable);
      CHECK(est.degree == Rational(factorial(static_cast<unsigned long>(d))) * normalized_volume(body_approximation(s, 2)));
    }
  CHECK_THROWS(degree_estimate(span(2, "1; x; y"), 2));
  const DegreeEstimate bumpy = degree_estimate(std::vector<std::size_t>{1, 3, 7, 20}, 1);
  CHECK_FALSE(bumpy.stable);
  CHECK_FALSE(bumpy.message.empty());
}

TEST_CASE("mixed inequalities") {
  const auto tri = span(2, "1; x; y");
  CHECK(minkowski_inclusion_check(tri, tri, 2).pass);
  CHECK(minkowski_inclusion_check(span(1, "1; x"), span(1, "1; x; x^2"), 2).pass);
  const auto odd = span(2, "1; x + y; x*y^2; y");
  CHECK(minkowski_inclusion_check(odd, odd, 2).pass);

  CHECK(compare_root_sum_with_one(Rational(1, 4), Rational(1, 4), 2) == 0);
  CHECK(compare_root_sum_with_one(Rational(1, 9), Rational(4, 9), 2) == 0);
  CHECK(compare_root_sum_with_one(Rational(1, 7), Rational(2, 7), 2) == -1);
  CHECK(compare_root_sum_with_one(Rational(1, 2), Rational(1, 2), 2) == 1);
  CHECK(compare_root_sum_with_one(Rational(1, 8), Rational(1, 7), 3) == 1);
  CHECK(compare_root_sum_with_one(Rational(1, 8), Rational(1, 8), 3) == 0);

  BrunnMinkowskiResult bm = brunn_minkowski_check(tri, tri, 2);
  CHECK(bm.pass);
  CHECK(bm.equality);
  bm = brunn_minkowski_check(span(1, "1; x"), span(1, "1; x; x^2"), 2);
  CHECK(bm.pass);
  CHECK(bm.equality);
  CHECK(bm.degree_first == 1);
  CHECK(bm.degree_second == 2);
  CHECK(bm.degree_product == 3);
  bm = brunn_minkowski_check(tri, span(2, "1; x; y; x*y"), 2);
  CHECK(bm.pass);
  CHECK_FALSE(bm.equality);
  CHECK(bm.degree_product == 7);
  CHECK(bm.degree_second == 2);
  CHECK_THROWS_AS(brunn_minkowski_check(tri, tri, 1), std::domain_error);
}
