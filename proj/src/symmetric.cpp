#include "logcave/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace logcave {

// ---------------------------------------------------------------------------
// MonomialExpansion

MonomialExpansion::MonomialExpansion(int num_variables) : num_variables_(num_variables) {
  if (num_variables < 1) throw std::invalid_argument("number of variables must be positive");
}

MonomialExpansion::MonomialExpansion(int num_variables, const Terms& terms)
    : MonomialExpansion(num_variables) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

MonomialExpansion MonomialExpansion::constant(int num_variables, const BigInt& c) {
  MonomialExpansion out(num_variables);
  out.add_term(Partition(), c);
  return out;
}

BigInt MonomialExpansion::coefficient(const Partition& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MonomialExpansion::add_term(const Partition& exponent, const BigInt& c) {
  if (static_cast<int>(exponent.length()) > num_variables_)
    throw std::invalid_argument("exponent " + exponent.to_string() + " needs more than " +
                                std::to_string(num_variables_) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MonomialExpansion::evaluate_at_ones() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    // Distinct permutations of e padded to n entries.
    BigInt orbit = factorial(static_cast<unsigned long>(num_variables_));
    orbit /= factorial(static_cast<unsigned long>(num_variables_ - static_cast<int>(e.length())));
    std::size_t i = 0;
    while (i < e.length()) {
      std::size_t j = i;
      while (j < e.length() && e[j] == e[i]) ++j;
      orbit /= factorial(j - i);
      i = j;
    }
    total += c * orbit;
  }
  return total;
}

void MonomialExpansion::require_same_rank(const MonomialExpansion& other) const {
  if (other.num_variables_ != num_variables_)
    throw std::invalid_argument("symmetric polynomials in " + std::to_string(num_variables_) +
                                " and " + std::to_string(other.num_variables_) + " variables");
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& other) {
  require_same_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator-=(const MonomialExpansion& other) {
  require_same_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// SchurExpansion

SchurExpansion::SchurExpansion(const Terms& terms) {
  for (const auto& [p, c] : terms) add_term(p, c);
}

BigInt SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::add_term(const Partition& p, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchurExpansion::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

// ---------------------------------------------------------------------------
// Tableau counts

namespace {

// Every ρ with μ ⊆ ρ ⊆ λ and ρ/μ a horizontal strip of `size` cells.
void for_each_horizontal_strip(const std::vector<int>& mu, const Partition& lambda, int size,
                               const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t rows = lambda.length();
  std::vector<int> rho(rows);
  std::vector<int> base(rows);
  for (std::size_t i = 0; i < rows; ++i) base[i] = i < mu.size() ? mu[i] : 0;
  // Remaining capacity of rows i.. lets us prune early.
  std::vector<int> cap(rows), suffix(rows + 1, 0);
  for (std::size_t i = 0; i < rows; ++i)
    cap[i] = std::min(lambda[i], i == 0 ? lambda[0] : base[i - 1]) - base[i];
  for (std::size_t i = rows; i-- > 0;) suffix[i] = suffix[i + 1] + std::max(cap[i], 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (remaining > suffix[i]) return;
    if (i == rows) {
      visit(rho);
      return;
    }
    for (int add = 0; add <= std::min(cap[i], remaining); ++add) {
      rho[i] = base[i] + add;
      self(self, i + 1, remaining - add);
    }
  };
  rec(rec, 0, size);
}

std::string memo_key(const std::vector<int>& rho, std::size_t depth) {
  std::string key(reinterpret_cast<const char*>(rho.data()), rho.size() * sizeof(int));
  key.append(reinterpret_cast<const char*>(&depth), sizeof(depth));
  return key;
}

}  // namespace

BigInt skew_kostka(const SkewShape& shape, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
    total += c;
  }
  if (total != shape.size()) return 0;
  const Partition& lambda = shape.outer();
  std::unordered_map<std::string, BigInt> memo;
  auto rec = [&](auto&& self, const std::vector<int>& rho, std::size_t depth) -> BigInt {
    if (depth == content.size()) return 1;  // sizes match, so rho == lambda here
    const std::string key = memo_key(rho, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt count = 0;
    for_each_horizontal_strip(rho, lambda, content[depth],
                              [&](const std::vector<int>& next) { count += self(self, next, depth + 1); });
    memo.emplace(key, count);
    return count;
  };
  std::vector<int> start(shape.inner().vector());
  start.resize(lambda.length(), 0);
  return rec(rec, start, 0);
}

MonomialExpansion skew_schur(const SkewShape& shape, int n) {
  MonomialExpansion out(n);
  for (const auto& gamma : partitions_of(shape.size(), n))
    out.add_term(gamma, skew_kostka(shape, gamma.parts()));
  return out;
}

MonomialExpansion schur_polynomial(const Partition& lambda, int n) {
  return skew_schur(SkewShape(lambda), n);
}

MonomialExpansion complete_homogeneous(int k, int n) {
  MonomialExpansion out(n);
  for (const auto& gamma : partitions_of(k, n)) out.add_term(gamma, 1);
  return out;
}

MonomialExpansion jacobi_trudi(const SkewShape& shape, int n) {
  const auto& lambda = shape.outer();
  const auto& mu = shape.inner();
  const int len = static_cast<int>(lambda.length());
  if (len > 30) throw std::invalid_argument("Jacobi-Trudi expansion limited to 30 rows");
  std::vector<std::vector<int>> index(static_cast<std::size_t>(len), std::vector<int>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j)
      index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          lambda[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)] - i + j;
  std::map<int, MonomialExpansion> h;
  auto h_of = [&](int k) -> const MonomialExpansion& {
    auto it = h.find(k);
    if (it == h.end()) it = h.emplace(k, complete_homogeneous(k, n)).first;
    return it->second;
  };
  // Laplace expansion along rows, memoized on the set of still-available columns.
  std::unordered_map<unsigned, MonomialExpansion> memo;
  auto minor = [&](auto&& self, int row, unsigned available) -> MonomialExpansion {
    if (row == len) return MonomialExpansion::constant(n, 1);
    if (auto it = memo.find(available); it != memo.end()) return it->second;
    MonomialExpansion sum(n);
    int position = 0;
    for (int col = 0; col < len; ++col) {
      if (!(available & (1u << col))) continue;
      const int k = index[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (k >= 0) {
        MonomialExpansion term = multiply(h_of(k), self(self, row + 1, available & ~(1u << col)));
        if (position % 2) sum -= term;
        else sum += term;
      }
      ++position;
    }
    memo.emplace(available, sum);
    return sum;
  };
  return minor(minor, 0, len == 0 ? 0u : (len == 32 ? ~0u : (1u << len) - 1u));
}

// ---------------------------------------------------------------------------
// Products

MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b) {
  if (a.num_variables() != b.num_variables())
    throw std::invalid_argument("cannot multiply symmetric polynomials in " +
                                std::to_string(a.num_variables()) + " and " +
                                std::to_string(b.num_variables()) + " variables");
  const int n = a.num_variables();
  MonomialExpansion out(n);
  if (a.is_zero() || b.is_zero()) return out;

  struct DegreeSlice {
    int max_part = 0;
  };
  auto slices = [](const MonomialExpansion& p) {
    std::map<int, DegreeSlice> s;
    for (const auto& [e, c] : p.terms()) {
      auto& slice = s[e.size()];
      slice.max_part = std::max(slice.max_part, e[0]);
    }
    return s;
  };
  const auto sa = slices(a), sb = slices(b);

  // Coefficient of z^γ in a·b is the sum over exponent vectors α ≤ γ of a[sort α]·b[sort(γ-α)].
  std::map<Partition, BigInt> acc;
  std::vector<int> alpha, beta;
  for (const auto& [da, slice_a] : sa)
    for (const auto& [db, slice_b] : sb) {
      for (const auto& gamma : partitions_of(da + db, n, slice_a.max_part + slice_b.max_part)) {
        const std::size_t len = gamma.length();
        std::vector<int> part(len);
        BigInt coefficient = 0;
        auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
          if (i == len) {
            if (remaining != 0) return;
            alpha.assign(part.begin(), part.end());
            beta.resize(len);
            for (std::size_t t = 0; t < len; ++t) beta[t] = gamma[t] - part[t];
            std::sort(alpha.begin(), alpha.end(), std::greater<>());
            std::sort(beta.begin(), beta.end(), std::greater<>());
            const auto ia = a.terms().find(Partition(alpha));
            if (ia == a.terms().end()) return;
            const auto ib = b.terms().find(Partition(beta));
            if (ib == b.terms().end()) return;
            coefficient += ia->second * ib->second;
            return;
          }
          // Entries left for positions i.. must be able to absorb `remaining`.
          int room = 0;
          for (std::size_t t = i; t < len; ++t) room += std::min(gamma[t], slice_a.max_part);
          if (room < remaining) return;
          const int lo = std::max(0, gamma[i] - slice_b.max_part);
          const int hi = std::min({gamma[i], slice_a.max_part, remaining});
          for (int v = lo; v <= hi; ++v) {
            part[i] = v;
            self(self, i + 1, remaining - v);
          }
        };
        rec(rec, 0, da);
        if (coefficient != 0) acc[gamma] += coefficient;
      }
    }
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

DifferenceSummary subtract_and_min_coefficient(const MonomialExpansion& a, const MonomialExpansion& b) {
  DifferenceSummary s{a - b, 0, std::nullopt};
  bool first = true;
  for (const auto& [e, c] : s.difference.terms()) {
    if (first || c < s.min_coefficient) {
      s.min_coefficient = c;
      if (c < 0) s.witness = e;
      first = false;
    }
  }
  return s;
}

SchurExpansion to_schur_basis(const MonomialExpansion& a) {
  const int n = a.num_variables();
  SchurExpansion out;
  MonomialExpansion rest = a;
  while (!rest.is_zero()) {
    const auto top = std::prev(rest.terms().end());
    const Partition lambda = top->first;
    const BigInt c = top->second;
    out.add_term(lambda, c);
    MonomialExpansion s = schur_polynomial(lambda, n);
    s *= c;
    rest -= s;
  }
  return out;
}

MonomialExpansion to_monomial_basis(const SchurExpansion& s, int n) {
  MonomialExpansion out(n);
  for (const auto& [lambda, c] : s.terms()) {
    if (static_cast<int>(lambda.length()) > n) continue;  // s_λ vanishes in n variables
    MonomialExpansion term = schur_polynomial(lambda, n);
    term *= c;
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Toeplitz slice

Rational toeplitz_schur_coefficient(const FiniteSequence& x, const GLWeight& lambda) {
  const int n = lambda.rank();
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x.at(lambda[static_cast<std::size_t>(i)] - i + j);
  return determinant(std::move(m));
}

Rational toeplitz_schur_coefficient(const FiniteSequence& x, const Partition& lambda, int n) {
  return toeplitz_schur_coefficient(x, GLWeight::from_partition(lambda, n));
}

}  // namespace logcave
