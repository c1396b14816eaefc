// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "logcave/body.hpp"
#include "logcave/cli.hpp"
#include "logcave/concavity.hpp"
#include "logcave/lr.hpp"
#include "logcave/symmetric.hpp"
#include "logcave/toeplitz.hpp"

using namespace logcave;

namespace {

// Pinned parameters. Comparisons are exact, so the only tolerances are runtime budgets.
constexpr int kJobs = 8;
constexpr int kTheorem1Bound = 6;
constexpr double kTheorem1BudgetSeconds = 600.0;
constexpr int kSchurSizeBound = 8;
constexpr int kSchurMaxVars = 4;
constexpr int kLrSizeBound = 8;
constexpr int kLrMaxRank = 4;
constexpr int kSymmetryEntryBound = 2;
constexpr int kSymmetryMaxRank = 3;
constexpr int kSaturationRank = 3;
constexpr int kSaturationSize = 4;
constexpr int kSaturationKMax = 3;
constexpr int kConjectureRank = 2;
constexpr int kConjectureEntryBound = 3;
constexpr int kMidpointPq = 2;  // p = q = 1
constexpr int kWeylRank = 4;
constexpr int kWeylEntryBound = 5;
constexpr int kToeplitzSequences = 100;
constexpr int kToeplitzMaxRank = 3;
constexpr int kToeplitzWeightSize = 6;
constexpr std::uint64_t kToeplitzSeed = 2024;
constexpr std::size_t kConvolutionCount = 200;
constexpr int kConvolutionMaxLength = 12;
constexpr std::uint64_t kConvolutionSeed = 1;
constexpr int kMonomialMaxVars = 3;
constexpr int kMonomialMaxDegree = 3;
constexpr int kBodyPairs = 50;
constexpr int kBodyMaxVars = 2;
constexpr int kBodyMaxExponent = 3;
constexpr int kBodyKMax = 6;
constexpr std::uint64_t kBodySeed = 7;
constexpr double kBodyBudgetSeconds = 300.0;
constexpr int kRestrictionN = 3;
constexpr int kRestrictionK = 1;
constexpr int kRestrictionBound = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fail_list(const ConcavityReport& r) {
  std::ostringstream s;
  s << r.scan << " checked " << r.instances_checked << ", violations " << r.violations.size();
  if (!r.violations.empty()) s << " (first: " << r.violations.front().instance << ")";
  return s.str();
}

ScanOptions scan_options(int jobs = kJobs) { return {jobs, kMidpointPq}; }

Outcome theorem1() {
  const auto start = std::chrono::steady_clock::now();
  const ConcavityReport r = theorem1_scan(kTheorem1Bound, scan_options());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // Independent count of unordered pairs {λ1/μ1, λ3/μ3} (a shape may pair with itself)
  // whose midpoint (λ1+λ3)/2, (μ1+μ3)/2 is integral.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes;
  for (const auto& lam : partitions_up_to(kTheorem1Bound, kTheorem1Bound))
    for (const auto& mu : subpartitions(lam)) {
      std::vector<int> l(static_cast<std::size_t>(kTheorem1Bound), 0), m = l;
      for (std::size_t i = 0; i < lam.parts().size(); ++i) l[i] = lam.parts()[i];
      for (std::size_t i = 0; i < mu.parts().size(); ++i) m[i] = mu.parts()[i];
      shapes.emplace_back(l, m);
    }
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i; j < shapes.size(); ++j) {
      bool integral = true;
      for (std::size_t t = 0; t < shapes[i].first.size() && integral; ++t)
        integral = (shapes[i].first[t] + shapes[j].first[t]) % 2 == 0 &&
                   (shapes[i].second[t] + shapes[j].second[t]) % 2 == 0;
      expected += integral;
    }
  Outcome o;
  o.pass = r.violations.empty() && r.instances_checked == expected && seconds < kTheorem1BudgetSeconds;
  o.detail = fail_list(r) + ", expected pairs " + std::to_string(expected) + ", " + std::to_string(seconds) + " s";
  return o;
}

Outcome schur_oracle() {
  std::uint64_t checked = 0, mismatches = 0;
  for (const auto& shape : skew_shapes_up_to(kSchurSizeBound))
    for (int n = 1; n <= kSchurMaxVars; ++n) {
      ++checked;
      if (skew_schur(shape, n) != jacobi_trudi(shape, n)) {
        if (mismatches == 0) std::cerr << "  schur mismatch " << shape.to_string() << " n=" << n << '\n';
        ++mismatches;
      }
    }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " (shape, n) cases, " + std::to_string(mismatches) + " mismatches"};
}

Outcome lr_oracle() {
  std::uint64_t coefficient_checks = 0, dimension_checks = 0, mismatches = 0;
  for (int rank = 1; rank <= kLrMaxRank; ++rank)
    for (const auto& mu : partitions_up_to(kLrSizeBound, rank))
      for (const auto& nu : partitions_up_to(kLrSizeBound - mu.size(), rank)) {
        BigInt total = 0;
        for (const auto& lam : partitions_of(mu.size() + nu.size(), rank)) {
          const BigInt tableau = lr_tableau_count(lam, mu, nu);
          const BigInt peel = lr_schur_peel(lam, mu, nu, rank);
          ++coefficient_checks;
          if (tableau != peel) ++mismatches;
          total += tableau * weyl_dimension(GLWeight::from_partition(lam, rank));
        }
        ++dimension_checks;
        if (total != weyl_dimension(GLWeight::from_partition(mu, rank)) *
                         weyl_dimension(GLWeight::from_partition(nu, rank)))
          ++mismatches;
      }
  return {mismatches == 0, std::to_string(coefficient_checks) + " coefficients, " + std::to_string(dimension_checks) +
                               " dimension sums, " + std::to_string(mismatches) + " mismatches"};
}

Outcome triple_symmetry() {
  LrCache cache;
  std::uint64_t triples = 0, nonzero = 0, mismatches = 0;
  for (int rank = 1; rank <= kSymmetryMaxRank; ++rank) {
    const auto weights = dominant_weights(rank, -kSymmetryEntryBound, kSymmetryEntryBound);
    for (const auto& a : weights)
      for (const auto& b : weights)
        for (const auto& c : weights) {
          const BigInt v = triple_invariant(WeightTriple(a, b, c), &cache);
          ++triples;
          nonzero += v != 0;
          const WeightTriple perms[] = {{a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
          for (const auto& p : perms)
            if (triple_invariant(p, &cache) != v) ++mismatches;
        }
  }
  return {mismatches == 0 && nonzero > 0, std::to_string(triples) + " triples (" + std::to_string(nonzero) +
                                              " nonzero), " + std::to_string(mismatches) + " asymmetric"};
}

Outcome saturation() {
  const ConcavityReport r = saturation_sweep(kSaturationRank, kSaturationSize, kSaturationKMax, scan_options());
  // Power-bound violations are findings to report, not failures of this criterion.
  return {r.count("saturation") == 0 && r.instances_checked > 0,
          "checked " + std::to_string(r.instances_checked) + ", saturation violations " +
              std::to_string(r.count("saturation")) + ", power-bound violations " +
              std::to_string(r.count("power_bound"))};
}

Outcome conjecture_scanners() {
  LrCache cache;
  const ConcavityReport reports[] = {
      conjecture1_scan(kConjectureEntryBound, kConjectureRank, scan_options(), &cache),
      logv_scan(kConjectureEntryBound, kConjectureRank, scan_options(), &cache),
      alpha_scan(kConjectureEntryBound, kConjectureRank, scan_options(), &cache)};
  Outcome o;
  for (const auto& r : reports) {
    o.pass = o.pass && r.violations.empty() && r.instances_checked > 0;
    o.detail += (o.detail.empty() ? "" : "; ") + fail_list(r);
  }
  return o;
}

Outcome weyl() {
  const ConcavityReport r = weyl_logconcavity_scan(kWeylRank, kWeylEntryBound, scan_options());
  return {r.violations.empty() && r.instances_checked > 0, fail_list(r)};
}

FiniteSequence random_rational_sequence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> first(-2, 2), length(1, 4), num(0, 6), den(1, 5);
  std::map<int, Rational> values;
  const int start = first(rng), len = length(rng);
  for (int k = start; k < start + len; ++k) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    values[k] = v;
  }
  values[start] += 1;  // nonempty support
  return FiniteSequence(values);
}

Outcome toeplitz() {
  std::mt19937_64 rng(kToeplitzSeed);
  std::uint64_t checked = 0, mismatches = 0;
  for (int s = 0; s < kToeplitzSequences; ++s) {
    const FiniteSequence x = random_rational_sequence(rng);
    for (int n = 1; n <= kToeplitzMaxRank; ++n) {
      const ProductSchurExpansion product = product_schur_expansion(x, n);
      for (const auto& w : dominant_weights(n, -kToeplitzWeightSize, kToeplitzWeightSize)) {
        int size = 0;
        for (int e : w.entries()) size += std::abs(e);
        if (size > kToeplitzWeightSize) continue;
        ++checked;
        if (toeplitz_schur_coefficient(x, w) != product.coefficient(w)) {
          if (mismatches == 0) std::cerr << "  toeplitz mismatch " << x.to_string() << " " << w.to_string() << '\n';
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(kToeplitzSequences) + " sequences, " + std::to_string(checked) +
                               " coefficients, " + std::to_string(mismatches) + " mismatches"};
}

Outcome convolution() {
  const auto sequences = random_logconcave_sequences(kConvolutionCount, kConvolutionMaxLength, kConvolutionSeed);
  bool inputs_ok = sequences.size() == kConvolutionCount;
  for (const auto& a : sequences)
    inputs_ok = inputs_ok && is_logconcave_sequence(a) && a.size() <= static_cast<std::size_t>(kConvolutionMaxLength);
  const ConcavityReport r = convolution_scan(kConvolutionCount, kConvolutionMaxLength, kConvolutionSeed, scan_options());
  return {inputs_ok && r.violations.empty() && r.instances_checked == kConvolutionCount * (kConvolutionCount + 1) / 2,
          fail_list(r) + (inputs_ok ? "" : ", bad inputs")};
}

PolynomialSubspace monomial_subspace(int d, const std::set<ExponentVector>& exponents) {
  std::vector<MultiPolynomial> basis;
  for (const auto& e : exponents) basis.push_back(MultiPolynomial::monomial(e));
  return PolynomialSubspace(d, basis);
}

std::set<ExponentVector> simplex_exponents(int d, int e) {
  std::set<ExponentVector> out;
  ExponentVector x(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d) {
      out.insert(x);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      x[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, e);
  return out;
}

// Random exponent set containing 0 whose convex hull is full-dimensional.
std::set<ExponentVector> random_exponents(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> coordinate(0, kBodyMaxExponent), extra(d, d + 3);
  for (;;) {
    std::set<ExponentVector> out{ExponentVector(static_cast<std::size_t>(d), 0)};
    const int count = extra(rng);
    for (int i = 0; i < count; ++i) {
      ExponentVector e(static_cast<std::size_t>(d));
      for (auto& c : e) c = coordinate(rng);
      out.insert(e);
    }
    RationalMatrix m;
    for (const auto& e : out) m.push_back(std::vector<Rational>(e.begin(), e.end()));
    if (rank(m) == static_cast<std::size_t>(d)) return out;
  }
}

Outcome convex_bodies() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t subspaces = 0, dimv_failures = 0, degree_failures = 0, mixed_failures = 0;
  auto dimv = [&](const PolynomialSubspace& s) {
    ++subspaces;
    if (valuation_set(s).size() != s.dimension()) ++dimv_failures;
  };

  // (b) degree-<=e monomial subspaces.
  for (int d = 1; d <= kMonomialMaxVars; ++d)
    for (int e = 1; e <= kMonomialMaxDegree; ++e) {
      const PolynomialSubspace s = monomial_subspace(d, simplex_exponents(d, e));
      const DegreeEstimate est = degree_estimate(s, d + 2);
      const BodyApprox body = body_approximation(s, 2);
      for (const auto& p : body.powers) dimv(p);
      const Rational expected(power(BigInt(e), static_cast<unsigned long>(d)));
      const Rational from_volume = Rational(factorial(static_cast<unsigned long>(d))) * normalized_volume(body);
      if (est.degree != expected || from_volume != expected || !est.stable) {
        std::cerr << "  degree d=" << d << " e=" << e << ": " << est.degree << " vs " << from_volume << '\n';
        ++degree_failures;
      }
    }

  // (c) seeded random monomial subspaces, in pairs.
  std::mt19937_64 rng(kBodySeed);
  for (int i = 0; i < kBodyPairs; ++i) {
    const int d = 1 + i % kBodyMaxVars;
    const PolynomialSubspace s1 = monomial_subspace(d, random_exponents(rng, d));
    const PolynomialSubspace s2 = monomial_subspace(d, random_exponents(rng, d));
    dimv(s1);
    dimv(s2);
    const PolynomialSubspace s12 = product_subspace(s1, s2);
    dimv(s12);
    for (int k = 2; k <= kBodyKMax; ++k) dimv(power_subspace(s12, k));
    const MinkowskiResult mink = minkowski_inclusion_check(s1, s2, kBodyKMax);
    const BrunnMinkowskiResult bm = brunn_minkowski_check(s1, s2, kBodyKMax);
    if (!mink.pass || !bm.pass) {
      std::cerr << "  mixed inequality failure at pair " << i << ": " << bm.comparison << '\n';
      ++mixed_failures;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {dimv_failures == 0 && degree_failures == 0 && mixed_failures == 0 && seconds < kBodyBudgetSeconds,
          "(a) " + std::to_string(subspaces) + " subspaces, " + std::to_string(dimv_failures) + " failures; (b) " +
              std::to_string(degree_failures) + " failures; (c) " + std::to_string(kBodyPairs) + " pairs, " +
              std::to_string(mixed_failures) + " failures; " + std::to_string(seconds) + " s"};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> scans = {
      {"theorem1", "--bound", std::to_string(kTheorem1Bound)},
      {"slm", "--bound", std::to_string(kTheorem1Bound)},
      {"conj1", "--rank", std::to_string(kConjectureRank), "--bound", std::to_string(kConjectureEntryBound)},
      {"saturation", "--rank", std::to_string(kSaturationRank), "--bound", std::to_string(kSaturationSize), "--kmax",
       std::to_string(kSaturationKMax)},
      {"logv", "--rank", std::to_string(kConjectureRank), "--bound", std::to_string(kConjectureEntryBound)},
      {"alpha", "--rank", std::to_string(kConjectureRank), "--bound", std::to_string(kConjectureEntryBound)},
      {"weyl", "--rank", std::to_string(kWeylRank), "--bound", std::to_string(kWeylEntryBound)},
      {"restriction", "--n", std::to_string(kRestrictionN), "--k", std::to_string(kRestrictionK), "--bound",
       std::to_string(kRestrictionBound)},
      {"convolution", "--count", std::to_string(kConvolutionCount), "--length", std::to_string(kConvolutionMaxLength),
       "--seed", std::to_string(kConvolutionSeed)}};
  Outcome o;
  std::string differing;
  for (const auto& scan : scans) {
    std::vector<std::string> base = {"logcave", "verify"};
    base.insert(base.end(), scan.begin(), scan.end());
    auto one = base, many = base;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", std::to_string(kJobs)});
    if (canonical_text(execute(one).document) != canonical_text(execute(many).document)) {
      o.pass = false;
      differing += " " + scan.front();
    }
  }
  o.detail = std::to_string(scans.size()) + " scans at jobs 1 and " + std::to_string(kJobs) +
             (differing.empty() ? ", identical" : ", differing:" + differing);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"skew-schur-midpoint-positivity", theorem1},
      {"schur-tableau-vs-determinant", schur_oracle},
      {"lr-tableau-vs-peel", lr_oracle},
      {"triple-symmetry", triple_symmetry},
      {"saturation", saturation},
      {"tensor-conjecture-scanners", conjecture_scanners},
      {"weyl-logconcavity", weyl},
      {"toeplitz-identity", toeplitz},
      {"convolution", convolution},
      {"convex-bodies", convex_bodies},
      {"determinism", determinism}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
