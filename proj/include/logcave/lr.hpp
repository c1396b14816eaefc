#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "logcave/partition.hpp"

namespace logcave {

/// Three dominant weights of one common rank.
struct WeightTriple {
  GLWeight lam, mu, nu;

  WeightTriple(GLWeight lam, GLWeight mu, GLWeight nu);
  int rank() const { return lam.rank(); }
  std::string to_string() const;
  auto operator<=>(const WeightTriple&) const = default;
};

/// Memo of LR coefficients shared across threads, optionally persisted to an append-only
/// file of lines "λ;μ;ν;n;value". Lookups never see a partially written value; two threads
/// racing on one key may both compute it.
class LrCache {
 public:
  LrCache() = default;
  /// Loads existing entries from `file` (malformed lines are skipped) and appends new ones.
  explicit LrCache(const std::filesystem::path& file);

  /// Cache file under $LOGCAVE_CACHE_DIR, or a memory-only cache when the variable is unset.
  static std::shared_ptr<LrCache> from_environment();

  std::optional<BigInt> find(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu) const;
  void store(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu, const BigInt& value);
  std::size_t size() const;
  const std::optional<std::filesystem::path>& file() const { return file_; }

 private:
  static std::string key(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, BigInt> values_;
  std::optional<std::filesystem::path> file_;
  std::mutex file_mutex_;
  std::ofstream out_;
};

/// c^λ_{μν} for partitions: number of LR tableaux of shape λ/μ and content ν
/// (semistandard, reverse reading word a lattice word).
BigInt lr_tableau_count(const Partition& lam, const Partition& mu, const Partition& nu);

/// c^λ_{μν} for partitions read off the Schur expansion of s_μ·s_ν in n variables.
BigInt lr_schur_peel(const Partition& lam, const Partition& mu, const Partition& nu, int n);

/// Multiplicity of V^λ in V^μ ⊗ V^ν for U(n), by tableau counting after determinant shifts.
/// Throws std::invalid_argument on a rank mismatch.
BigInt lr_coefficient(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu,
                      LrCache* cache = nullptr);

/// Same quantity through the Schur-basis peel of the product.
BigInt lr_coefficient_via_schur(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu);

/// c_{λμν} = dim (V^λ ⊗ V^μ ⊗ V^ν)^{U(n)} = c^{λ*}_{μν}.
BigInt triple_invariant(const WeightTriple& t, LrCache* cache = nullptr);

/// dim Hom_{U(k)}(V^μ, V^λ) for the standard U(k) ⊂ U(n): s_{λ/μ}(1^{n-k}).
/// Throws unless k < n, λ has at most n parts and μ at most k.
BigInt restriction_multiplicity(const Partition& lam, const Partition& mu, int n, int k);

/// Decomposition of V^μ ⊗ V^ν.
std::map<GLWeight, BigInt> tensor_product_multiplicities(const GLWeight& mu, const GLWeight& nu,
                                                         LrCache* cache = nullptr);
std::map<GLWeight, BigInt> tensor_square_multiplicities(const GLWeight& w, LrCache* cache = nullptr);

}  // namespace logcave
