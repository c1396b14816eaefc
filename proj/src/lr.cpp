#include "logcave/lr.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "logcave/symmetric.hpp"

namespace logcave {

WeightTriple::WeightTriple(GLWeight l, GLWeight m, GLWeight n)
    : lam(std::move(l)), mu(std::move(m)), nu(std::move(n)) {
  if (lam.rank() != mu.rank() || lam.rank() != nu.rank())
    throw std::invalid_argument("weight triple needs equal ranks: " + lam.to_string() + ", " +
                                mu.to_string() + ", " + nu.to_string());
}

std::string WeightTriple::to_string() const {
  return lam.to_string() + ";" + mu.to_string() + ";" + nu.to_string();
}

// ---------------------------------------------------------------------------
// LrCache

LrCache::LrCache(const std::filesystem::path& file) : file_(file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line)) {
    // λ;μ;ν;n;value
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ';')) fields.push_back(f);
    if (fields.size() != 5 || fields[4].empty()) continue;
    BigInt value;
    if (value.set_str(fields[4], 10) != 0 || value < 0) continue;
    values_[fields[0] + ";" + fields[1] + ";" + fields[2] + ";" + fields[3]] = value;
  }
  out_.open(file, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open LR cache file " + file.string());
}

std::shared_ptr<LrCache> LrCache::from_environment() {
  const char* dir = std::getenv("LOGCAVE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::make_shared<LrCache>();
  return std::make_shared<LrCache>(std::filesystem::path(dir) / "lr_cache.txt");
}

std::string LrCache::key(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu) {
  return lam.to_string() + ";" + mu.to_string() + ";" + nu.to_string() + ";" +
         std::to_string(lam.rank());
}

std::optional<BigInt> LrCache::find(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu) const {
  const std::string k = key(lam, mu, nu);
  std::shared_lock lock(mutex_);
  auto it = values_.find(k);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void LrCache::store(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu, const BigInt& value) {
  const std::string k = key(lam, mu, nu);
  {
    std::unique_lock lock(mutex_);
    if (!values_.emplace(k, value).second) return;
  }
  if (file_) {
    const std::string line = k + ";" + value.get_str() + "\n";
    std::lock_guard lock(file_mutex_);
    out_ << line << std::flush;
  }
}

std::size_t LrCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

// ---------------------------------------------------------------------------
// Coefficients

BigInt lr_tableau_count(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() + nu.size() || !lam.contains(mu) || !lam.contains(nu)) return 0;
  if (nu.empty()) return 1;
  const std::size_t rows = lam.length();
  const std::size_t letters = nu.length();
  std::vector<std::vector<int>> filled(rows);
  for (std::size_t i = 0; i < rows; ++i) filled[i].assign(static_cast<std::size_t>(lam[i]), 0);
  std::vector<int> used(letters + 1, 0);
  BigInt count = 0;
  // Rows top to bottom, each right to left: the order of the reverse reading word.
  auto rec = [&](auto&& self, std::size_t i, int col) -> void {
    while (i < rows && col < mu[i]) {
      ++i;
      if (i < rows) col = lam[i] - 1;
    }
    if (i == rows) {
      ++count;
      return;
    }
    int hi = static_cast<int>(std::min(letters, i + 1));
    if (col + 1 < lam[i]) hi = std::min(hi, filled[i][static_cast<std::size_t>(col + 1)]);
    int lo = 1;
    if (i > 0 && col >= mu[i - 1] && col < lam[i - 1])
      lo = filled[i - 1][static_cast<std::size_t>(col)] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (used[uv] >= nu[uv - 1]) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;
      ++used[uv];
      filled[i][static_cast<std::size_t>(col)] = v;
      self(self, i, col - 1);
      --used[uv];
    }
    filled[i][static_cast<std::size_t>(col)] = 0;
  };
  rec(rec, 0, lam[0] - 1);
  return count;
}

BigInt lr_schur_peel(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  if (static_cast<int>(lam.length()) > n || static_cast<int>(mu.length()) > n ||
      static_cast<int>(nu.length()) > n)
    return 0;
  const SchurExpansion product =
      to_schur_basis(multiply(schur_polynomial(mu, n), schur_polynomial(nu, n)));
  return product.coefficient(lam);
}

namespace {

struct NormalizedTriple {
  Partition lam, mu, nu;
  bool vanishes = false;
};

NormalizedTriple normalize(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu) {
  if (lam.rank() != mu.rank() || lam.rank() != nu.rank())
    throw std::invalid_argument("LR coefficient needs equal ranks: " + lam.to_string() + ", " +
                                mu.to_string() + ", " + nu.to_string());
  const ShiftedPartition m = shift_to_partition(mu);
  const ShiftedPartition n = shift_to_partition(nu);
  const GLWeight l = lam.shifted(-(m.shift + n.shift));
  if (l.min_entry() < 0) return {{}, {}, {}, true};
  return {Partition(l.vector()), m.partition, n.partition, false};
}

}  // namespace

BigInt lr_coefficient(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu, LrCache* cache) {
  const NormalizedTriple t = normalize(lam, mu, nu);
  if (t.vanishes) return 0;
  if (cache) {
    if (auto hit = cache->find(lam, mu, nu)) return *hit;
  }
  BigInt value = lr_tableau_count(t.lam, t.mu, t.nu);
  if (cache) cache->store(lam, mu, nu, value);
  return value;
}

BigInt lr_coefficient_via_schur(const GLWeight& lam, const GLWeight& mu, const GLWeight& nu) {
  const NormalizedTriple t = normalize(lam, mu, nu);
  if (t.vanishes) return 0;
  return lr_schur_peel(t.lam, t.mu, t.nu, lam.rank());
}

BigInt triple_invariant(const WeightTriple& t, LrCache* cache) {
  if (t.lam.sum() + t.mu.sum() + t.nu.sum() != 0) return 0;
  return lr_coefficient(dual_weight(t.lam), t.mu, t.nu, cache);
}

BigInt restriction_multiplicity(const Partition& lam, const Partition& mu, int n, int k) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("restriction needs 1 <= k < n (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  if (static_cast<int>(lam.length()) > n)
    throw std::invalid_argument("partition " + lam.to_string() + " has more than n parts");
  if (static_cast<int>(mu.length()) > k)
    throw std::invalid_argument("partition " + mu.to_string() + " has more than k parts");
  if (!lam.contains(mu)) return 0;
  return skew_schur(SkewShape(lam, mu), n - k).evaluate_at_ones();
}

std::map<GLWeight, BigInt> tensor_product_multiplicities(const GLWeight& mu, const GLWeight& nu,
                                                         LrCache* cache) {
  if (mu.rank() != nu.rank()) throw std::invalid_argument("tensor product needs equal ranks");
  const int n = mu.rank();
  const ShiftedPartition m = shift_to_partition(mu);
  const ShiftedPartition v = shift_to_partition(nu);
  std::map<GLWeight, BigInt> out;
  for (const auto& lam : partitions_of(m.partition.size() + v.partition.size(), n)) {
    if (!lam.contains(m.partition) || !lam.contains(v.partition)) continue;
    const GLWeight weight = GLWeight::from_partition(lam, n).shifted(m.shift + v.shift);
    const BigInt c = lr_coefficient(weight, mu, nu, cache);
    if (c != 0) out.emplace(weight, c);
  }
  return out;
}

std::map<GLWeight, BigInt> tensor_square_multiplicities(const GLWeight& w, LrCache* cache) {
  return tensor_product_multiplicities(w, w, cache);
}

}  // namespace logcave
