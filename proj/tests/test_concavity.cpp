#include <numeric>
#include <set>

#include "doctest.h"
#include "logcave/concavity.hpp"

using namespace logcave;

namespace {

MultiplicityFunction table(std::map<int, long> values) {
  return [values](const IntVector& v) -> BigInt {
    auto it = values.find(v.at(0));
    return it == values.end() ? BigInt(0) : BigInt(it->second);
  };
}

// All instances between domain points, zero endpoints included, checked directly.
std::set<std::string> brute_force_violations(const std::vector<IntVector>& domain, const MultiplicityFunction& f,
                                             int pq_bound) {
  std::set<std::string> out;
  for (int p = 1; p < pq_bound; ++p)
    for (int q = p; p + q <= pq_bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j) {
          if (i == j || (p == q && j < i)) continue;
          ConcavityInstance inst;
          try {
            inst = ConcavityInstance::between(domain[i], domain[j], p, q);
          } catch (const std::invalid_argument&) {
            continue;
          }
          if (!check_logconcave_instance(f, inst).pass) out.insert(inst.to_string());
        }
    }
  return out;
}

}  // namespace

TEST_CASE("single instances") {
  const auto inst = ConcavityInstance::between({0}, {2}, 1, 1);
  CHECK(inst.c == IntVector{1});
  CHECK(check_logconcave_instance([](const IntVector&) { return BigInt(1); }, inst).pass);
  CHECK(check_logconcave_instance(table({{0, 1}, {1, 2}, {2, 3}}), inst).pass);
  const InstanceCheck bad = check_logconcave_instance(table({{0, 1}, {1, 1}, {2, 3}}), inst);
  CHECK_FALSE(bad.pass);
  CHECK(bad.value_c == 1);
  CHECK(check_logconcave_instance(table({{0, 0}, {1, 0}, {2, 5}}), inst).pass);
  CHECK_THROWS_AS(ConcavityInstance::between({0}, {1}, 1, 1), std::invalid_argument);
  ConcavityInstance broken{{0}, {2}, {2}, 1, 1};
  CHECK_THROWS_AS(check_logconcave_instance(table({}), broken), std::invalid_argument);
  CHECK(ConcavityInstance::between({0}, {3}, 1, 2).c == IntVector{2});
}

TEST_CASE("generic scan agrees with brute force") {
  std::vector<IntVector> domain;
  for (int a = -3; a <= 3; ++a)
    for (int b = -2; b <= 2; ++b) domain.push_back({a, b});
  const MultiplicityFunction f = [](const IntVector& v) -> BigInt {
    if (v[0] < -3 || v[0] > 3 || v[1] < -2 || v[1] > 2) return 0;
    return BigInt(1 + v[0] * v[0] + (v[1] == 0 ? 3 : 0));
  };
  for (int pq : {2, 3, 5}) {
    for (int jobs : {1, 3}) {
      const ConcavityReport r = logconcavity_scan("toy", domain, f, {jobs, pq});
      std::set<std::string> got;
      for (const auto& v : r.violations) got.insert(v.concavity->to_string());
      CHECK(got == brute_force_violations(domain, f, pq));
      CHECK_FALSE(r.violations.empty());
    }
  }
  CHECK(logconcavity_scan("toy", domain, f, {1, 3}).violations == logconcavity_scan("toy", domain, f, {4, 3}).violations);
}

TEST_CASE("Theorem 1 and Schur positivity of the difference") {
  Theorem1Result r = theorem1_verify(Partition({2, 1}), Partition(), Partition({2, 1}), Partition());
  CHECK(r.pass);
  CHECK(r.difference.is_zero());
  r = theorem1_verify(Partition({3, 1}), Partition(), Partition({1, 1}), Partition());
  CHECK(r.pass);
  CHECK(r.shapes.middle == SkewShape(Partition({2, 1})));
  CHECK(r.shapes.num_variables == 6);
  r = theorem1_verify(Partition({2, 2}), Partition({1}), Partition({2}), Partition({1}));
  CHECK(r.pass);
  CHECK(r.shapes.middle == SkewShape(Partition({2, 1}), Partition({1})));
  CHECK_THROWS_AS(theorem1_verify(Partition({2}), Partition(), Partition({1}), Partition()), std::invalid_argument);
  CHECK_THROWS(theorem1_verify(Partition({2}), Partition({2, 2}), Partition({2}), Partition()));

  SlmResult s = slm_schur_positivity(Partition({2, 1}), Partition(), Partition({2, 1}), Partition());
  CHECK(s.pass);
  CHECK(s.difference.is_zero());
  s = slm_schur_positivity(Partition({3, 1}), Partition(), Partition({1, 1}), Partition());
  CHECK(s.pass);
  CHECK_FALSE(s.difference.is_zero());
  s = slm_schur_positivity(Partition({4}), Partition(), Partition({2}), Partition());
  CHECK(s.pass);
  // Pieri: s_3^2 - s_4 s_2 = s_{3,3}.
  CHECK(s.difference.terms() == SchurExpansion::Terms{{Partition({3, 3}), 1}});
}

TEST_CASE("skew pair scans are clean and independent of workers") {
  const ConcavityReport a = theorem1_scan(4, {1, 2});
  const ConcavityReport b = theorem1_scan(4, {3, 2});
  CHECK(a.violations.empty());
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.instances_checked > 100);
  CHECK(slm_scan(3, {2, 2}).violations.empty());
}

TEST_CASE("tensor multiplicity scans") {
  const ConcavityReport zero = conjecture1_scan(0, 2, {1, 2});
  CHECK(zero.violations.empty());
  CHECK(conjecture1_scan(2, 2, {1, 2}).violations.empty());

  SaturationResult trivial = saturation_scan(WeightTriple(GLWeight::zero(2), GLWeight::zero(2), GLWeight::zero(2)), 3);
  CHECK(trivial.saturation_ok);
  CHECK(trivial.power_bound_ok);
  for (const auto& row : trivial.rows) CHECK(row.value == 1);
  const WeightTriple two(dual_weight(GLWeight({3, 2, 1})), GLWeight({2, 1, 0}), GLWeight({2, 1, 0}));
  const SaturationResult sat = saturation_scan(two, 2);
  CHECK(sat.rows[0].value == 2);
  CHECK(sat.rows[1].power_bound == 4);
  CHECK(sat.rows[1].value <= 4);
  CHECK(sat.rows[1].value >= 1);
  CHECK_THROWS(saturation_scan(two, 1));
  const WeightTriple none(GLWeight({1, -1}), GLWeight({0, 0}), GLWeight({0, 0}));
  CHECK(saturation_scan(none, 3).rows.back().value == 0);

  CHECK(logV_inclusion_check(GLWeight({1, 0}), GLWeight({1, 0})).pass);
  CHECK(logV_inclusion_check(GLWeight({2, 0}), GLWeight({0, 0})).pass);
  CHECK(logV_inclusion_check(GLWeight({2, 0}), GLWeight({0, -2})).pass);
  CHECK_THROWS_AS(logV_inclusion_check(GLWeight({1, 0}), GLWeight({0, 0})), std::invalid_argument);

  const WeightTriple t(GLWeight({1, 0}), GLWeight({0, -1}), GLWeight({0, 0}));
  AlphaResult a = alpha_matrix_check(t, 1, 0);
  CHECK(a.pass);
  CHECK(a.image == t);
  a = alpha_matrix_check(t, 0, 1);
  CHECK(a.pass);
  CHECK(a.after == a.before);
  const WeightTriple even(GLWeight({2, 0}), GLWeight({0, -2}), GLWeight({0, 0}));
  a = alpha_matrix_check(even, 1, 1);
  CHECK(a.before == 1);
  CHECK(a.pass);
  CHECK_THROWS_AS(alpha_matrix_check(t, 1, 1), std::invalid_argument);
}

TEST_CASE("convolution") {
  ConvolutionResult r = convolution_logconcavity_check({1, 1}, {1, 1});
  CHECK(r.status == ConvolutionStatus::pass);
  CHECK(r.convolution == std::vector<BigInt>{1, 2, 1});
  CHECK(convolution_logconcavity_check({1}, {1, 3, 2}).convolution == std::vector<BigInt>{1, 3, 2});
  CHECK(convolution_logconcavity_check({1, 4, 6, 4, 1}, {1, 2, 1}).status == ConvolutionStatus::pass);
  CHECK(convolution_logconcavity_check({1, 0, 1}, {1}).status == ConvolutionStatus::precondition_violation);
  CHECK(convolution_logconcavity_check({1, 1, 3}, {1}).status == ConvolutionStatus::precondition_violation);
  CHECK(is_logconcave_sequence({0, 2, 1, 0}));
  CHECK_FALSE(is_logconcave_sequence({0, 0}));
  const auto seqs = random_logconcave_sequences(50, 12, 7);
  CHECK(seqs == random_logconcave_sequences(50, 12, 7));
  for (const auto& s : seqs) {
    CHECK(is_logconcave_sequence(s));
    CHECK(s.size() <= 12);
  }
  CHECK(convolution_scan(40, 12, 3, {2, 2}).violations.empty());
}

TEST_CASE("dimension and restriction scans") {
  CHECK(weyl_logconcavity_scan(1, 3, {1, 2}).violations.empty());
  const auto dim = [](const IntVector& v) { return weyl_dimension(GLWeight(v)); };
  const auto inst = ConcavityInstance::between({2, 0}, {0, 0}, 1, 1);
  const InstanceCheck c = check_logconcave_instance(dim, inst);
  CHECK(c.value_a == 3);
  CHECK(c.value_b == 1);
  CHECK(c.value_c == 2);
  CHECK(c.pass);
  CHECK(weyl_logconcavity_scan(3, 2, {1, 3}).violations.empty());
  CHECK(restriction_logconcavity_scan(3, 1, 4, {1, 2}).violations.empty());
  CHECK(restriction_logconcavity_scan(4, 2, 6, {2, 2}).violations.empty());
  CHECK_THROWS(restriction_logconcavity_scan(2, 2, 3, {}));
}
