#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcave/lr.hpp"
#include "logcave/partition.hpp"
#include "logcave/symmetric.hpp"

namespace logcave {

using IntVector = std::vector<int>;

/// Points A, B, C of a lattice with (p+q)·C = p·A + q·B.
struct ConcavityInstance {
  IntVector a, b, c;
  int p = 1;
  int q = 1;

  /// C = (pA + qB)/(p+q); throws std::invalid_argument when not integral.
  static ConcavityInstance between(IntVector a, IntVector b, int p, int q);

  /// Throws std::invalid_argument unless the linear relation holds with p, q >= 0, p+q >= 1.
  void validate() const;
  std::string to_string() const;
  auto operator<=>(const ConcavityInstance&) const = default;
};

using MultiplicityFunction = std::function<BigInt(const IntVector&)>;

struct InstanceCheck {
  bool pass = true;
  BigInt value_a, value_b, value_c;
};

/// F(C)^{p+q} >= F(A)^p · F(B)^q in exact integers. Zero values need no special casing.
InstanceCheck check_logconcave_instance(const MultiplicityFunction& f, const ConcavityInstance& inst);

struct Violation {
  std::string kind;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> values;
  std::optional<ConcavityInstance> concavity;

  auto operator<=>(const Violation& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = instance <=> o.instance; c != 0) return c;
    return values <=> o.values;
  }
  bool operator==(const Violation&) const = default;
};

struct ConcavityReport {
  std::string scan;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::string>> parameters;

  /// Canonical order, independent of how the work was scheduled.
  void sort_violations();
  std::size_t count(const std::string& kind) const;
  void merge(ConcavityReport other);
};

struct ScanOptions {
  int jobs = 1;
  /// Instances use every coprime p, q >= 1 with p + q <= pq_bound; 2 means midpoints only.
  int pq_bound = 2;
};

/// Log-concavity of f over all instances whose endpoints A != B are domain points with
/// f > 0 (instances with a zero endpoint hold trivially). All domain points share one length.
ConcavityReport logconcavity_scan(const std::string& name, const std::vector<IntVector>& domain,
                                  const MultiplicityFunction& f, const ScanOptions& options,
                                  const std::function<std::string(const IntVector&)>& describe = {});

// --- Skew Schur differences ------------------------------------------------

struct SkewPair {
  SkewShape first, third, middle;
  int num_variables = 0;
};

/// Midpoint (λ₂, μ₂) of two skew shapes; throws std::invalid_argument when not integral.
SkewPair midpoint_shapes(const Partition& l1, const Partition& m1, const Partition& l3,
                         const Partition& m3);

struct Theorem1Result {
  bool pass = true;
  SkewPair shapes;
  MonomialExpansion difference{1};
  BigInt min_coefficient;
  std::optional<Partition> witness;
};

/// Monomial positivity of s²_{λ₂/μ₂} − s_{λ₁/μ₁}·s_{λ₃/μ₃} in |λ₁/μ₁| + |λ₃/μ₃| variables.
Theorem1Result theorem1_verify(const Partition& l1, const Partition& m1, const Partition& l3,
                               const Partition& m3);

struct SlmResult {
  bool pass = true;
  SkewPair shapes;
  SchurExpansion difference;
  std::optional<Partition> witness;
};

/// Schur positivity of the same difference (conjectural).
SlmResult slm_schur_positivity(const Partition& l1, const Partition& m1, const Partition& l3,
                               const Partition& m3);

/// All skew shapes λ/μ with |λ| <= size_bound, λ with at most max_rows rows.
std::vector<SkewShape> skew_shapes_up_to(int size_bound, int max_rows = 1 << 20);

/// Every unordered pair of skew shapes with |λ| <= size_bound and integral midpoint.
ConcavityReport theorem1_scan(int size_bound, const ScanOptions& options);
ConcavityReport slm_scan(int size_bound, const ScanOptions& options);

// --- Tensor multiplicities ---------------------------------------------------

/// Log-concavity of c_{λμν} over triples of rank <= rank_bound with entries in [-bound, bound].
ConcavityReport conjecture1_scan(int weight_bound, int rank_bound, const ScanOptions& options,
                                 LrCache* cache = nullptr);

struct SaturationRow {
  int k = 1;
  BigInt value;        // c_{kλ,kμ,kν}
  BigInt power_bound;  // c_{λμν}^k
  bool saturation_ok = true;
  bool power_bound_ok = true;
};

struct SaturationResult {
  WeightTriple triple;
  std::vector<SaturationRow> rows;
  bool saturation_ok = true;
  bool power_bound_ok = true;
};

/// Saturation c_k != 0 ⇒ c_1 != 0 and the conjectural bound c_k <= c_1^k for k = 1..k_max.
SaturationResult saturation_scan(const WeightTriple& t, int k_max, LrCache* cache = nullptr);

/// saturation_scan over all triples of rank <= rank_bound whose weights have
/// sum of |entries| <= size_bound and total weight 0. Kinds: "saturation", "power_bound".
ConcavityReport saturation_sweep(int rank_bound, int size_bound, int k_max, const ScanOptions& options,
                                 LrCache* cache = nullptr);

struct LogVResult {
  bool pass = true;
  GLWeight midpoint;
  std::optional<GLWeight> failing;
  BigInt product_multiplicity, square_multiplicity;
};

/// V^μ ⊗ V^ν ⊂ (V^{(μ+ν)/2})^{⊗2}, compared multiplicity by multiplicity.
LogVResult logV_inclusion_check(const GLWeight& mu, const GLWeight& nu, LrCache* cache = nullptr);

ConcavityReport logv_scan(int weight_bound, int rank_bound, const ScanOptions& options,
                          LrCache* cache = nullptr);

struct AlphaResult {
  bool pass = true;
  WeightTriple image;
  BigInt before, after;
};

/// c_{λ'μ'ν'} >= c_{λμν} for the circulant image with α = p/(p+q):
/// λ' = αλ + (1-α)ν, μ' = (1-α)λ + αμ, ν' = (1-α)μ + αν.
AlphaResult alpha_matrix_check(const WeightTriple& t, int p, int q, LrCache* cache = nullptr);

ConcavityReport alpha_scan(int weight_bound, int rank_bound, const ScanOptions& options,
                           LrCache* cache = nullptr);

// --- Sequences and dimensions -----------------------------------------------

enum class ConvolutionStatus { pass, fail, precondition_violation };

struct ConvolutionResult {
  ConvolutionStatus status = ConvolutionStatus::pass;
  std::vector<BigInt> convolution;
  std::optional<std::size_t> failing_index;
  std::string message;
};

/// Nonnegative, no internal zeros, a_i^2 >= a_{i-1} a_{i+1}.
bool is_logconcave_sequence(const std::vector<BigInt>& a);

ConvolutionResult convolution_logconcavity_check(const std::vector<BigInt>& a,
                                                 const std::vector<BigInt>& b);

/// Seeded random log-concave sequences of length 1..max_length with contiguous support.
std::vector<std::vector<BigInt>> random_logconcave_sequences(std::size_t count, int max_length,
                                                             std::uint64_t seed);

/// Every pair (i <= j) of `count` random sequences.
ConcavityReport convolution_scan(std::size_t count, int max_length, std::uint64_t seed,
                                 const ScanOptions& options);

/// λ ↦ dim V^λ for every rank <= rank_bound, entries in [-entry_bound, entry_bound].
ConcavityReport weyl_logconcavity_scan(int rank_bound, int entry_bound, const ScanOptions& options);

/// (λ, μ) ↦ dim Hom_{U(k)}(V^μ, V^λ) over partitions with |λ|, |μ| <= weight_bound.
ConcavityReport restriction_logconcavity_scan(int n, int k, int weight_bound, const ScanOptions& options);

}  // namespace logcave
