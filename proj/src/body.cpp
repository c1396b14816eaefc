#include "logcave/body.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace logcave {

ValuationPoint flag_valuation(const MultiPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("valuation of the zero polynomial");
  return f.terms().begin()->first;
}

MultiPolynomial permute_variables(const MultiPolynomial& f, const std::vector<int>& perm) {
  const int d = f.num_variables();
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d; ++i)
    if (static_cast<int>(sorted.size()) != d || sorted[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("not a permutation of the variables");
  MultiPolynomial out(d);
  ExponentVector e(static_cast<std::size_t>(d));
  for (const auto& [exp, c] : f.terms()) {
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = exp[static_cast<std::size_t>(i)];
    out.add_term(e, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspaces

PolynomialSubspace::PolynomialSubspace(int num_variables, const std::vector<MultiPolynomial>& spanning,
                                       Check check)
    : num_variables_(num_variables) {
  if (num_variables < 1) throw std::invalid_argument("subspace needs at least one variable");
  for (const auto& f : spanning) {
    if (f.num_variables() != num_variables)
      throw std::invalid_argument("basis polynomial has the wrong number of variables");
    insert(f);
  }
  if (check == Check::field_generating) {
    if (!contains_one()) throw std::invalid_argument("subspace does not contain the constant 1");
    if (!generates_field())
      throw std::invalid_argument("valuations of the subspace do not span a " + std::to_string(num_variables) +
                                  "-dimensional affine space");
  }
}

MultiPolynomial PolynomialSubspace::reduce(MultiPolynomial f, bool full) const {
  auto it = f.terms().begin();
  while (it != f.terms().end()) {
    const ValuationPoint e = it->first;
    auto b = basis_.find(e);
    if (b != basis_.end()) {
      MultiPolynomial step = b->second;
      step *= it->second;
      f -= step;
      it = f.terms().upper_bound(e);
    } else if (full) {
      ++it;
    } else {
      break;
    }
  }
  return f;
}

bool PolynomialSubspace::insert(MultiPolynomial f) {
  f = reduce(std::move(f), false);
  if (f.is_zero()) return false;
  const ValuationPoint lead = flag_valuation(f);
  f *= 1 / f.terms().begin()->second;
  basis_.emplace(lead, std::move(f));
  return true;
}

std::vector<MultiPolynomial> PolynomialSubspace::basis() const {
  std::vector<MultiPolynomial> out;
  for (const auto& [v, f] : basis_) out.push_back(f);
  return out;
}

bool PolynomialSubspace::contains(const MultiPolynomial& f) const {
  if (f.num_variables() != num_variables_) return false;
  return reduce(f, true).is_zero();
}

bool PolynomialSubspace::contains_one() const { return contains(MultiPolynomial::constant(num_variables_, 1)); }

bool PolynomialSubspace::generates_field() const {
  if (basis_.empty()) return false;
  const ValuationPoint& base = basis_.begin()->first;
  RationalMatrix diffs;
  for (const auto& [v, f] : basis_) {
    std::vector<Rational> row(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row[i] = v[i] - base[i];
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs)) == static_cast<std::size_t>(num_variables_);
}

PolynomialSubspace product_subspace(const PolynomialSubspace& a, const PolynomialSubspace& b) {
  if (a.num_variables_ != b.num_variables_) throw std::invalid_argument("subspaces have different dimensions");
  PolynomialSubspace out(a.num_variables_);
  for (const auto& [va, f] : a.basis_)
    for (const auto& [vb, g] : b.basis_) out.insert(f * g);
  return out;
}

PolynomialSubspace power_subspace(const PolynomialSubspace& s, int k) {
  if (k < 1) throw std::invalid_argument("power of a subspace needs k >= 1");
  PolynomialSubspace out = s;
  for (int i = 1; i < k; ++i) out = product_subspace(out, s);
  return out;
}

std::vector<ValuationPoint> valuation_set(const PolynomialSubspace& s) {
  std::vector<ValuationPoint> out;
  out.reserve(s.basis_.size());
  for (const auto& [v, f] : s.basis_) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Lattices and bodies

namespace {

class HermiteBuilder {
 public:
  explicit HermiteBuilder(std::size_t width) : pivot_rows_(width) {}

  void add(std::vector<BigInt> g) {
    for (std::size_t col = 0; col < g.size(); ++col) {
      if (g[col] == 0) continue;
      auto& slot = pivot_rows_[col];
      if (!slot) {
        slot = std::move(g);
        return;
      }
      std::vector<BigInt>& p = *slot;
      BigInt gcd, s, t;
      mpz_gcdext(gcd.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[col].get_mpz_t(), g[col].get_mpz_t());
      const BigInt a = p[col] / gcd, b = g[col] / gcd;
      for (std::size_t j = col; j < g.size(); ++j) {
        const BigInt pj = p[j];
        p[j] = s * pj + t * g[j];
        g[j] = a * g[j] - b * pj;
      }
    }
  }

  IntegerMatrix finish() const {
    std::vector<std::pair<std::size_t, std::vector<BigInt>>> rows;
    for (std::size_t col = 0; col < pivot_rows_.size(); ++col)
      if (pivot_rows_[col]) {
        std::vector<BigInt> r = *pivot_rows_[col];
        if (r[col] < 0)
          for (auto& x : r) x = -x;
        rows.emplace_back(col, std::move(r));
      }
    for (std::size_t j = rows.size(); j-- > 0;) {
      const auto& [col, pivot] = rows[j];
      for (std::size_t i = 0; i < j; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i].second[col].get_mpz_t(), pivot[col].get_mpz_t());
        if (q != 0)
          for (std::size_t c = col; c < pivot.size(); ++c) rows[i].second[c] -= q * pivot[c];
      }
    }
    IntegerMatrix out;
    for (auto& [col, r] : rows) out.push_back(std::move(r));
    return out;
  }

 private:
  std::vector<std::optional<std::vector<BigInt>>> pivot_rows_;
};

}  // namespace

IntegerMatrix hermite_normal_form(const std::vector<std::vector<BigInt>>& generators, std::size_t width) {
  HermiteBuilder h(width);
  for (const auto& g : generators) {
    if (g.size() != width) throw std::invalid_argument("lattice generator has the wrong length");
    h.add(g);
  }
  return h.finish();
}

BodyApprox body_approximation(const PolynomialSubspace& s, int k_max) {
  if (k_max < 1) throw std::invalid_argument("body approximation needs k_max >= 1");
  const int d = s.num_variables();
  const std::size_t D = static_cast<std::size_t>(d);
  BodyApprox out;
  out.level = k_max;
  out.num_variables = d;
  out.dimensions.push_back(1);
  HermiteBuilder lattice(D + 1);
  std::set<RationalPoint> points;
  std::vector<RationalPoint> previous;
  for (int k = 1; k <= k_max; ++k) {
    out.powers.push_back(k == 1 ? s : product_subspace(out.powers.back(), s));
    const auto values = valuation_set(out.powers.back());
    out.dimensions.push_back(values.size());
    if (k == k_max) previous.assign(points.begin(), points.end());
    for (const auto& v : values) {
      std::vector<BigInt> g{k};
      RationalPoint p(D);
      for (std::size_t i = 0; i < D; ++i) {
        g.emplace_back(v[i]);
        p[i] = Rational(v[i], k);
        p[i].canonicalize();
      }
      lattice.add(std::move(g));
      points.insert(std::move(p));
    }
  }
  out.points.assign(points.begin(), points.end());
  out.hull = ConvexHull(out.points);
  out.stable = k_max > 1 && !previous.empty() && ConvexHull(previous) == out.hull;
  out.lattice = lattice.finish();
  out.covolume = 0;
  if (out.lattice.size() == D + 1) {
    out.covolume = 1;
    for (std::size_t i = 1; i <= D; ++i) out.covolume *= out.lattice[i][i];
  }
  return out;
}

Rational normalized_volume(const BodyApprox& b, const BigInt& covolume) {
  if (b.hull.dimension() != b.num_variables)
    throw std::domain_error("hull has dimension " + std::to_string(b.hull.dimension()) + " < " +
                            std::to_string(b.num_variables) + "; the subspace is not field-generating at this level");
  if (covolume <= 0) throw std::domain_error("lattice is not full rank");
  return b.hull.volume() / Rational(covolume);
}

Rational normalized_volume(const BodyApprox& b) { return normalized_volume(b, b.covolume); }

DegreeEstimate degree_estimate(const std::vector<std::size_t>& dims, int num_variables) {
  const std::size_t d = static_cast<std::size_t>(num_variables);
  if (dims.size() < d + 2) throw std::invalid_argument("degree estimate needs k_max >= d + 1");
  const std::size_t K = dims.size() - 1;
  auto difference = [&](std::size_t end) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= d; ++i) {
      BigInt term = binomial(d, i) * BigInt(static_cast<unsigned long>(dims[end - d + i]));
      if ((d - i) % 2) s -= term;
      else s += term;
    }
    return s;
  };
  DegreeEstimate out;
  out.dimensions = dims;
  const BigInt last = difference(K), before = difference(K - 1);
  out.degree = Rational(last);
  out.stable = last == before;
  if (!out.stable)
    out.message = "d-th differences " + before.get_str() + " and " + last.get_str() +
                  " disagree; growth is not yet polynomial";
  // Lagrange interpolation through k = K-d..K, evaluated at the earlier samples.
  for (std::size_t k = 0; k + d < K; ++k) {
    Rational fit = 0;
    for (std::size_t i = K - d; i <= K; ++i) {
      Rational w = static_cast<unsigned long>(dims[i]);
      for (std::size_t j = K - d; j <= K; ++j)
        if (j != i) {
          w *= static_cast<long>(k) - static_cast<long>(j);
          w /= static_cast<long>(i) - static_cast<long>(j);
        }
      fit += w;
    }
    out.residuals.push_back(Rational(static_cast<unsigned long>(dims[k])) - fit);
  }
  return out;
}

DegreeEstimate degree_estimate(const PolynomialSubspace& s, int k_max) {
  if (k_max < s.num_variables() + 1) throw std::invalid_argument("degree estimate needs k_max >= d + 1");
  std::vector<std::size_t> dims{1};
  PolynomialSubspace power = s;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = product_subspace(power, s);
    dims.push_back(power.dimension());
  }
  return degree_estimate(dims, s.num_variables());
}

// ---------------------------------------------------------------------------
// Mixed inequalities

MinkowskiResult minkowski_inclusion_check(const PolynomialSubspace& s1, const PolynomialSubspace& s2, int k_max) {
  if (s1.num_variables() != s2.num_variables()) throw std::invalid_argument("subspaces have different dimensions");
  const BodyApprox b1 = body_approximation(s1, k_max);
  const BodyApprox b2 = body_approximation(s2, k_max);
  const BodyApprox b12 = body_approximation(product_subspace(s1, s2), k_max);
  MinkowskiResult out;
  for (const auto& v1 : b1.hull.vertices())
    for (const auto& v2 : b2.hull.vertices()) {
      RationalPoint sum(v1.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = v1[i] + v2[i];
      ++out.sums_checked;
      if (!b12.hull.contains(sum)) {
        out.pass = false;
        out.failing = std::move(sum);
        return out;
      }
    }
  return out;
}

namespace {

struct RootBounds {
  Rational lower, upper;
  bool exact = false;
};

// t^{1/d} to within 2^{-bits}/denominator, t = p/q >= 0.
RootBounds root_bounds(const Rational& t, int d, unsigned long bits) {
  const BigInt p = t.get_num(), q = t.get_den();
  BigInt n = p * power(q, static_cast<unsigned long>(d - 1));
  n <<= static_cast<mp_bitcnt_t>(bits * static_cast<unsigned long>(d));
  BigInt root;
  const bool exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d)) != 0;
  BigInt den = q;
  den <<= static_cast<mp_bitcnt_t>(bits);
  RootBounds out{Rational(root, den), Rational(BigInt(root + (exact ? 0 : 1)), den), exact};
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

std::string root_text(const Rational& x, int d) {
  return d == 1 ? to_string(x) : to_string(x) + "^(1/" + std::to_string(d) + ")";
}

}  // namespace

int compare_root_sum_with_one(const Rational& x, const Rational& y, int d) {
  if (d < 1) throw std::invalid_argument("root order must be positive");
  if (x < 0 || y < 0) throw std::invalid_argument("roots of negative numbers");
  for (unsigned long bits = 0; bits <= 4096; bits = bits ? bits * 2 : 8) {
    const RootBounds a = root_bounds(x, d, bits), b = root_bounds(y, d, bits);
    const Rational lo = a.lower + b.lower, hi = a.upper + b.upper;
    if (a.exact && b.exact) return cmp(lo, 1) < 0 ? -1 : (cmp(lo, 1) > 0 ? 1 : 0);
    // An inexact bound is strict on both sides.
    if (hi <= 1) return -1;
    if (lo >= 1) return 1;
  }
  throw std::runtime_error("root comparison did not separate");
}

BrunnMinkowskiResult brunn_minkowski_check(const PolynomialSubspace& s1, const PolynomialSubspace& s2, int k_max) {
  if (s1.num_variables() != s2.num_variables()) throw std::invalid_argument("subspaces have different dimensions");
  const int d = s1.num_variables();
  const BodyApprox b1 = body_approximation(s1, k_max);
  const BodyApprox b2 = body_approximation(s2, k_max);
  const BodyApprox b12 = body_approximation(product_subspace(s1, s2), k_max);
  if (!b1.stable || !b2.stable || !b12.stable)
    throw std::domain_error("body approximations are not stable at k_max = " + std::to_string(k_max));
  const Rational scale = Rational(factorial(static_cast<unsigned long>(d)));
  BrunnMinkowskiResult out;
  out.degree_first = scale * normalized_volume(b1, b12.covolume);
  out.degree_second = scale * normalized_volume(b2, b12.covolume);
  out.degree_product = scale * normalized_volume(b12, b12.covolume);
  const int c = compare_root_sum_with_one(out.degree_first / out.degree_product,
                                          out.degree_second / out.degree_product, d);
  out.pass = c <= 0;
  out.equality = c == 0;
  out.comparison = root_text(out.degree_product, d) + (c < 0 ? " > " : c == 0 ? " = " : " < ") +
                   root_text(out.degree_first, d) + " + " + root_text(out.degree_second, d);
  return out;
}

}  // namespace logcave
