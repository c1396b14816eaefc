#include "logcave/concavity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "logcave/parallel.hpp"

namespace logcave {

namespace {

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

IntVector concat(std::initializer_list<const std::vector<int>*> parts) {
  IntVector out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

WeightTriple split_triple(const IntVector& v) {
  const auto r = static_cast<std::ptrdiff_t>(v.size() / 3);
  return WeightTriple(GLWeight(IntVector(v.begin(), v.begin() + r)),
                      GLWeight(IntVector(v.begin() + r, v.begin() + 2 * r)),
                      GLWeight(IntVector(v.begin() + 2 * r, v.end())));
}

std::vector<IntVector> support_triples(int rank, const std::vector<GLWeight>& weights) {
  std::vector<IntVector> out;
  for (const auto& l : weights)
    for (const auto& m : weights)
      for (const auto& n : weights)
        if (l.sum() + m.sum() + n.sum() == 0 && l.rank() == rank)
          out.push_back(concat({&l.vector(), &m.vector(), &n.vector()}));
  return out;
}

std::string triple_text(const IntVector& v) { return split_triple(v).to_string(); }

}  // namespace

// ---------------------------------------------------------------------------
// Instances

ConcavityInstance ConcavityInstance::between(IntVector a, IntVector b, int p, int q) {
  if (a.size() != b.size()) throw std::invalid_argument("instance endpoints differ in length");
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("instance needs p, q >= 0 and p + q >= 1");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = p * a[i] + q * b[i];
    if (s % (p + q) != 0)
      throw std::invalid_argument("no integral point between " + vector_text(a) + " and " +
                                  vector_text(b));
    c[i] = s / (p + q);
  }
  return {std::move(a), std::move(b), std::move(c), p, q};
}

void ConcavityInstance::validate() const {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("malformed instance: bad p, q");
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("malformed instance: points differ in length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((p + q) * c[i] != p * a[i] + q * b[i])
      throw std::invalid_argument("malformed instance: (p+q)C != pA + qB");
}

std::string ConcavityInstance::to_string() const {
  return vector_text(a) + "~" + vector_text(b) + "->" + vector_text(c) + " p=" + std::to_string(p) +
         " q=" + std::to_string(q);
}

InstanceCheck check_logconcave_instance(const MultiplicityFunction& f, const ConcavityInstance& inst) {
  inst.validate();
  InstanceCheck out{true, f(inst.a), f(inst.b), f(inst.c)};
  const BigInt lhs = power(out.value_c, static_cast<unsigned long>(inst.p + inst.q));
  const BigInt rhs = power(out.value_a, static_cast<unsigned long>(inst.p)) *
                     power(out.value_b, static_cast<unsigned long>(inst.q));
  out.pass = lhs >= rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Reports

void ConcavityReport::sort_violations() { std::sort(violations.begin(), violations.end()); }

std::size_t ConcavityReport::count(const std::string& kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.kind == kind; }));
}

void ConcavityReport::merge(ConcavityReport other) {
  instances_checked += other.instances_checked;
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  sort_violations();
}

ConcavityReport logconcavity_scan(const std::string& name, const std::vector<IntVector>& domain,
                                  const MultiplicityFunction& f, const ScanOptions& options,
                                  const std::function<std::string(const IntVector&)>& describe) {
  ConcavityReport report;
  report.scan = name;
  if (domain.empty()) return report;
  const std::size_t dim = domain.front().size();
  for (const auto& v : domain)
    if (v.size() != dim) throw std::invalid_argument("scan domain points differ in length");

  std::vector<BigInt> values(domain.size());
  parallel_for(domain.size(), options.jobs, [&](std::size_t i) { values[i] = f(domain[i]); });
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (values[i] < 0) throw std::domain_error("multiplicity function returned a negative value");
    if (values[i] > 0) support.push_back(i);
  }
  auto text = [&](const IntVector& v) { return describe ? describe(v) : vector_text(v); };

  for (int p = 1; p < options.pq_bound; ++p)
    for (int q = p; p + q <= options.pq_bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const int m = p + q;
      int q_inverse = 1;
      while ((q * q_inverse) % m != 1 % m) ++q_inverse;
      auto residue = [&](const IntVector& v, int scale) {
        IntVector r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = floor_mod(scale * v[i], m);
        return r;
      };
      // Endpoints B compatible with A satisfy B ≡ -p·q⁻¹·A (mod p+q).
      std::map<IntVector, std::vector<std::size_t>> buckets;
      for (std::size_t s = 0; s < support.size(); ++s) buckets[residue(domain[support[s]], 1)].push_back(s);

      std::vector<std::vector<Violation>> found(support.size());
      std::vector<std::uint64_t> checked(support.size(), 0);
      parallel_for(support.size(), options.jobs, [&](std::size_t s) {
        const IntVector& a = domain[support[s]];
        auto it = buckets.find(residue(a, -p * q_inverse));
        if (it == buckets.end()) return;
        for (std::size_t t : it->second) {
          if (p == q ? t <= s : t == s) continue;
          const IntVector& b = domain[support[t]];
          ConcavityInstance inst = ConcavityInstance::between(a, b, p, q);
          const BigInt fa = values[support[s]], fb = values[support[t]];
          const BigInt fc = f(inst.c);
          ++checked[s];
          const BigInt lhs = power(fc, static_cast<unsigned long>(m));
          const BigInt rhs = power(fa, static_cast<unsigned long>(p)) * power(fb, static_cast<unsigned long>(q));
          if (lhs < rhs) {
            Violation v;
            v.kind = "logconcavity";
            v.instance = text(a) + " ~ " + text(b) + " -> " + text(inst.c) + " p=" + std::to_string(p) +
                         " q=" + std::to_string(q);
            v.values = {{"value_a", fa.get_str()}, {"value_b", fb.get_str()}, {"value_c", fc.get_str()}};
            v.concavity = std::move(inst);
            found[s].push_back(std::move(v));
          }
        }
      });
      for (std::size_t s = 0; s < support.size(); ++s) {
        report.instances_checked += checked[s];
        for (auto& v : found[s]) report.violations.push_back(std::move(v));
      }
    }
  report.sort_violations();
  return report;
}

// ---------------------------------------------------------------------------
// Skew Schur differences

SkewPair midpoint_shapes(const Partition& l1, const Partition& m1, const Partition& l3,
                         const Partition& m3) {
  SkewShape first(l1, m1), third(l3, m3);
  auto half = [](const Partition& a, const Partition& b, const char* what) {
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) {
      if ((a[i] + b[i]) % 2 != 0)
        throw std::invalid_argument(std::string("midpoint of ") + what + " parts is not integral");
      out[i] = (a[i] + b[i]) / 2;
    }
    return Partition(std::move(out));
  };
  SkewShape middle(half(l1, l3, "outer"), half(m1, m3, "inner"));
  const int n = std::max(1, first.size() + third.size());
  return {std::move(first), std::move(third), std::move(middle), n};
}

namespace {

const MonomialExpansion& cached_skew_schur(const SkewShape& shape, int n) {
  thread_local std::map<std::pair<SkewShape, int>, MonomialExpansion> cache;
  if (cache.size() > 20000) cache.clear();
  auto key = std::make_pair(shape, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), skew_schur(shape, n)).first;
  return it->second;
}

MonomialExpansion slm_difference(const SkewPair& s) {
  const int n = s.num_variables;
  const MonomialExpansion& mid = cached_skew_schur(s.middle, n);
  return multiply(mid, mid) - multiply(cached_skew_schur(s.first, n), cached_skew_schur(s.third, n));
}

std::string pair_text(const SkewPair& s) { return s.first.to_string() + " ~ " + s.third.to_string(); }

// Parity signature deciding whether two skew shapes have an integral midpoint.
std::vector<int> parity_key(const SkewShape& s, int width) {
  std::vector<int> key(static_cast<std::size_t>(2 * width));
  for (int i = 0; i < width; ++i) {
    key[static_cast<std::size_t>(i)] = s.outer()[static_cast<std::size_t>(i)] % 2;
    key[static_cast<std::size_t>(width + i)] = s.inner()[static_cast<std::size_t>(i)] % 2;
  }
  return key;
}

template <class Check>
ConcavityReport skew_pair_scan(const std::string& name, int size_bound, const ScanOptions& options,
                               Check&& check) {
  ConcavityReport report;
  report.scan = name;
  const auto shapes = skew_shapes_up_to(size_bound);
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    buckets[parity_key(shapes[i], std::max(size_bound, 1))].push_back(i);
  std::vector<std::size_t> position(shapes.size());
  std::vector<const std::vector<std::size_t>*> bucket_of(shapes.size());
  for (const auto& [key, members] : buckets)
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      position[members[pos]] = pos;
      bucket_of[members[pos]] = &members;
    }
  std::vector<std::vector<Violation>> found(shapes.size());
  std::vector<std::uint64_t> checked(shapes.size(), 0);
  parallel_for(shapes.size(), options.jobs, [&](std::size_t i) {
    const auto& members = *bucket_of[i];
    for (std::size_t pos = position[i]; pos < members.size(); ++pos) {
      const SkewShape& a = shapes[i];
      const SkewShape& b = shapes[members[pos]];
      ++checked[i];
      if (auto v = check(a, b)) found[i].push_back(std::move(*v));
    }
  });
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    report.instances_checked += checked[i];
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
  report.parameters = {{"bound", std::to_string(size_bound)}};
  report.sort_violations();
  return report;
}

}  // namespace

Theorem1Result theorem1_verify(const Partition& l1, const Partition& m1, const Partition& l3,
                               const Partition& m3) {
  Theorem1Result out;
  out.shapes = midpoint_shapes(l1, m1, l3, m3);
  const MonomialExpansion& mid = cached_skew_schur(out.shapes.middle, out.shapes.num_variables);
  DifferenceSummary d = subtract_and_min_coefficient(
      multiply(mid, mid), multiply(cached_skew_schur(out.shapes.first, out.shapes.num_variables),
                                   cached_skew_schur(out.shapes.third, out.shapes.num_variables)));
  out.difference = std::move(d.difference);
  out.min_coefficient = d.min_coefficient;
  out.witness = std::move(d.witness);
  out.pass = out.min_coefficient >= 0;
  return out;
}

SlmResult slm_schur_positivity(const Partition& l1, const Partition& m1, const Partition& l3,
                               const Partition& m3) {
  SlmResult out;
  out.shapes = midpoint_shapes(l1, m1, l3, m3);
  out.difference = to_schur_basis(slm_difference(out.shapes));
  for (const auto& [p, c] : out.difference.terms())
    if (c < 0) {
      out.pass = false;
      out.witness = p;
      break;
    }
  return out;
}

std::vector<SkewShape> skew_shapes_up_to(int size_bound, int max_rows) {
  std::vector<SkewShape> out;
  for (const auto& lam : partitions_up_to(size_bound, max_rows))
    for (const auto& mu : subpartitions(lam)) out.emplace_back(lam, mu);
  return out;
}

ConcavityReport theorem1_scan(int size_bound, const ScanOptions& options) {
  return skew_pair_scan("theorem1", size_bound, options,
                        [](const SkewShape& a, const SkewShape& b) -> std::optional<Violation> {
                          const Theorem1Result r = theorem1_verify(a.outer(), a.inner(), b.outer(), b.inner());
                          if (r.pass) return std::nullopt;
                          return Violation{"theorem1",
                                           pair_text(r.shapes),
                                           {{"min_coefficient", r.min_coefficient.get_str()},
                                            {"witness", r.witness->to_string()}},
                                           std::nullopt};
                        });
}

ConcavityReport slm_scan(int size_bound, const ScanOptions& options) {
  return skew_pair_scan("slm", size_bound, options,
                        [](const SkewShape& a, const SkewShape& b) -> std::optional<Violation> {
                          const SlmResult r = slm_schur_positivity(a.outer(), a.inner(), b.outer(), b.inner());
                          if (r.pass) return std::nullopt;
                          return Violation{"slm",
                                           pair_text(r.shapes),
                                           {{"witness", r.witness->to_string()},
                                            {"coefficient", r.difference.coefficient(*r.witness).get_str()}},
                                           std::nullopt};
                        });
}

// ---------------------------------------------------------------------------
// Tensor multiplicities

ConcavityReport conjecture1_scan(int weight_bound, int rank_bound, const ScanOptions& options,
                                 LrCache* cache) {
  ConcavityReport report;
  report.scan = "conj1";
  for (int r = 1; r <= rank_bound; ++r) {
    const auto weights = dominant_weights(r, -weight_bound, weight_bound);
    report.merge(logconcavity_scan(
        "conj1", support_triples(r, weights),
        [cache](const IntVector& v) { return triple_invariant(split_triple(v), cache); }, options,
        triple_text));
  }
  report.parameters = {{"bound", std::to_string(weight_bound)},
                       {"rank", std::to_string(rank_bound)},
                       {"pq", std::to_string(options.pq_bound)}};
  return report;
}

SaturationResult saturation_scan(const WeightTriple& t, int k_max, LrCache* cache) {
  if (k_max < 2) throw std::invalid_argument("saturation scan needs k_max >= 2");
  SaturationResult out{t, {}, true, true};
  const BigInt base = triple_invariant(t, cache);
  for (int k = 1; k <= k_max; ++k) {
    auto times = [k](const GLWeight& w) {
      IntVector e(w.vector());
      for (int& x : e) x *= k;
      return GLWeight(std::move(e));
    };
    SaturationRow row;
    row.k = k;
    row.value = k == 1 ? base : triple_invariant(WeightTriple(times(t.lam), times(t.mu), times(t.nu)), cache);
    row.power_bound = power(base, static_cast<unsigned long>(k));
    row.saturation_ok = !(row.value != 0 && base == 0);
    row.power_bound_ok = row.value <= row.power_bound;
    out.saturation_ok = out.saturation_ok && row.saturation_ok;
    out.power_bound_ok = out.power_bound_ok && row.power_bound_ok;
    out.rows.push_back(std::move(row));
  }
  return out;
}

ConcavityReport saturation_sweep(int rank_bound, int size_bound, int k_max, const ScanOptions& options,
                                 LrCache* cache) {
  ConcavityReport report;
  report.scan = "saturation";
  std::vector<WeightTriple> triples;
  for (int r = 1; r <= rank_bound; ++r) {
    std::vector<GLWeight> weights;
    for (auto& w : dominant_weights(r, -size_bound, size_bound)) {
      int l1 = 0;
      for (int x : w.entries()) l1 += std::abs(x);
      if (l1 <= size_bound) weights.push_back(std::move(w));
    }
    for (const auto& v : support_triples(r, weights)) triples.push_back(split_triple(v));
  }
  std::vector<std::vector<Violation>> found(triples.size());
  parallel_for(triples.size(), options.jobs, [&](std::size_t i) {
    const SaturationResult r = saturation_scan(triples[i], k_max, cache);
    for (const auto& row : r.rows) {
      if (!row.saturation_ok || !row.power_bound_ok) {
        Violation v{row.saturation_ok ? "power_bound" : "saturation",
                    triples[i].to_string(),
                    {{"k", std::to_string(row.k)},
                     {"c_1", r.rows.front().value.get_str()},
                     {"c_k", row.value.get_str()},
                     {"c_1^k", row.power_bound.get_str()}},
                    std::nullopt};
        found[i].push_back(std::move(v));
        // A saturation failure is always also reported as a power-bound failure.
        if (!row.saturation_ok) {
          Violation pb = found[i].back();
          pb.kind = "power_bound";
          found[i].push_back(std::move(pb));
        }
      }
    }
  });
  report.instances_checked = triples.size();
  for (auto& f : found)
    for (auto& v : f) report.violations.push_back(std::move(v));
  report.parameters = {{"rank", std::to_string(rank_bound)},
                       {"bound", std::to_string(size_bound)},
                       {"kmax", std::to_string(k_max)}};
  report.sort_violations();
  return report;
}

LogVResult logV_inclusion_check(const GLWeight& mu, const GLWeight& nu, LrCache* cache) {
  if (mu.rank() != nu.rank()) throw std::invalid_argument("logV check needs equal ranks");
  IntVector mid(static_cast<std::size_t>(mu.rank()));
  for (std::size_t i = 0; i < mid.size(); ++i) {
    if ((mu[i] + nu[i]) % 2 != 0)
      throw std::invalid_argument("midpoint of " + mu.to_string() + " and " + nu.to_string() +
                                  " is not integral");
    mid[i] = (mu[i] + nu[i]) / 2;
  }
  LogVResult out{true, GLWeight(mid), std::nullopt, 0, 0};
  const auto product = tensor_product_multiplicities(mu, nu, cache);
  const auto square = tensor_square_multiplicities(out.midpoint, cache);
  for (const auto& [lam, c] : product) {
    auto it = square.find(lam);
    const BigInt s = it == square.end() ? BigInt(0) : it->second;
    if (c > s) {
      out.pass = false;
      out.failing = lam;
      out.product_multiplicity = c;
      out.square_multiplicity = s;
      break;
    }
  }
  return out;
}

ConcavityReport logv_scan(int weight_bound, int rank_bound, const ScanOptions& options, LrCache* cache) {
  ConcavityReport report;
  report.scan = "logv";
  std::vector<std::pair<GLWeight, GLWeight>> pairs;
  for (int r = 1; r <= rank_bound; ++r) {
    const auto weights = dominant_weights(r, -weight_bound, weight_bound);
    for (std::size_t i = 0; i < weights.size(); ++i)
      for (std::size_t j = i; j < weights.size(); ++j) {
        bool integral = true;
        for (int t = 0; t < r; ++t)
          integral = integral && (weights[i][static_cast<std::size_t>(t)] + weights[j][static_cast<std::size_t>(t)]) % 2 == 0;
        if (integral) pairs.emplace_back(weights[i], weights[j]);
      }
  }
  std::vector<std::optional<Violation>> found(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const LogVResult r = logV_inclusion_check(pairs[i].first, pairs[i].second, cache);
    if (!r.pass)
      found[i] = Violation{"logv",
                           pairs[i].first.to_string() + " ~ " + pairs[i].second.to_string(),
                           {{"lambda", r.failing->to_string()},
                            {"product", r.product_multiplicity.get_str()},
                            {"square", r.square_multiplicity.get_str()}},
                           std::nullopt};
  });
  report.instances_checked = pairs.size();
  for (auto& v : found)
    if (v) report.violations.push_back(std::move(*v));
  report.parameters = {{"bound", std::to_string(weight_bound)}, {"rank", std::to_string(rank_bound)}};
  report.sort_violations();
  return report;
}

AlphaResult alpha_matrix_check(const WeightTriple& t, int p, int q, LrCache* cache) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("alpha check needs p, q >= 0, p + q >= 1");
  const int m = p + q;
  auto mix = [&](const GLWeight& x, int wx, const GLWeight& y, int wy) {
    IntVector e(static_cast<std::size_t>(x.rank()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int s = wx * x[i] + wy * y[i];
      if (s % m != 0) throw std::invalid_argument("alpha image of " + t.to_string() + " is not integral");
      e[i] = s / m;
    }
    return GLWeight(std::move(e));
  };
  WeightTriple image(mix(t.lam, p, t.nu, q), mix(t.lam, q, t.mu, p), mix(t.mu, q, t.nu, p));
  AlphaResult out{true, image, triple_invariant(t, cache), triple_invariant(image, cache)};
  out.pass = out.after >= out.before;
  return out;
}

ConcavityReport alpha_scan(int weight_bound, int rank_bound, const ScanOptions& options, LrCache* cache) {
  ConcavityReport report;
  report.scan = "alpha";
  std::vector<WeightTriple> triples;
  for (int r = 1; r <= rank_bound; ++r)
    for (const auto& v : support_triples(r, dominant_weights(r, -weight_bound, weight_bound)))
      triples.push_back(split_triple(v));
  std::vector<std::pair<int, int>> ratios;
  for (int p = 1; p < options.pq_bound; ++p)
    for (int q = 1; p + q <= options.pq_bound; ++q)
      if (std::gcd(p, q) == 1) ratios.emplace_back(p, q);
  std::vector<std::vector<Violation>> found(triples.size());
  std::vector<std::uint64_t> checked(triples.size(), 0);
  parallel_for(triples.size(), options.jobs, [&](std::size_t i) {
    if (triple_invariant(triples[i], cache) == 0) return;
    for (const auto& [p, q] : ratios) {
      AlphaResult r{true, triples[i], 0, 0};
      try {
        r = alpha_matrix_check(triples[i], p, q, cache);
      } catch (const std::invalid_argument&) {
        continue;  // non-integral image: not an instance
      }
      ++checked[i];
      if (!r.pass)
        found[i].push_back(Violation{"alpha",
                                     triples[i].to_string() + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                                     {{"image", r.image.to_string()},
                                      {"before", r.before.get_str()},
                                      {"after", r.after.get_str()}},
                                     std::nullopt});
    }
  });
  for (std::size_t i = 0; i < triples.size(); ++i) {
    report.instances_checked += checked[i];
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
  report.parameters = {{"bound", std::to_string(weight_bound)},
                       {"rank", std::to_string(rank_bound)},
                       {"pq", std::to_string(options.pq_bound)}};
  report.sort_violations();
  return report;
}

// ---------------------------------------------------------------------------
// Sequences and dimensions

bool is_logconcave_sequence(const std::vector<BigInt>& a) {
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (a[i] > 0) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == a.size()) return false;
  for (std::size_t i = first; i <= last; ++i)
    if (a[i] == 0) return false;
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  return true;
}

ConvolutionResult convolution_logconcavity_check(const std::vector<BigInt>& a,
                                                 const std::vector<BigInt>& b) {
  ConvolutionResult out;
  if (!is_logconcave_sequence(a) || !is_logconcave_sequence(b)) {
    out.status = ConvolutionStatus::precondition_violation;
    out.message = "inputs must be nonzero, log-concave and without internal zeros";
    return out;
  }
  out.convolution.assign(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out.convolution[i + j] += a[i] * b[j];
  const auto& c = out.convolution;
  for (std::size_t n = 1; n + 1 < c.size(); ++n)
    if (c[n] * c[n] < c[n - 1] * c[n + 1]) {
      out.status = ConvolutionStatus::fail;
      out.failing_index = n;
      return out;
    }
  return out;
}

std::vector<std::vector<BigInt>> random_logconcave_sequences(std::size_t count, int max_length,
                                                             std::uint64_t seed) {
  if (max_length < 1) throw std::invalid_argument("sequence length bound must be positive");
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<std::vector<BigInt>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const int length = static_cast<int>(uniform(1, max_length));
    const int leading = length > 2 ? static_cast<int>(uniform(0, 1)) : 0;
    const int trailing = length - leading > 2 ? static_cast<int>(uniform(0, 1)) : 0;
    const int body = length - leading - trailing;
    std::vector<BigInt> seq;
    if (uniform(0, 1) == 0) {
      // Ratio-bounded walk: each new term respects the inequality at its left neighbour.
      seq.push_back(uniform(1, 50));
      if (body > 1) seq.push_back(uniform(1, 50));
      while (static_cast<int>(seq.size()) < body) {
        const BigInt& x = seq[seq.size() - 2];
        const BigInt& y = seq.back();
        BigInt cap = y * y / x;
        if (cap > 1000000) cap = 1000000;
        if (cap < 1) break;
        seq.push_back(uniform(1, cap.get_si()));
      }
    } else {
      // Coefficients of a product of linear factors with positive coefficients.
      seq.push_back(1);
      for (int f = 1; f < body; ++f) {
        const long u = uniform(1, 5), v = uniform(1, 5);
        std::vector<BigInt> next(seq.size() + 1, 0);
        for (std::size_t i = 0; i < seq.size(); ++i) {
          next[i] += seq[i] * u;
          next[i + 1] += seq[i] * v;
        }
        seq = std::move(next);
      }
    }
    std::vector<BigInt> padded(static_cast<std::size_t>(leading), 0);
    padded.insert(padded.end(), seq.begin(), seq.end());
    padded.resize(padded.size() + static_cast<std::size_t>(trailing), 0);
    out.push_back(std::move(padded));
  }
  return out;
}

ConcavityReport convolution_scan(std::size_t count, int max_length, std::uint64_t seed,
                                 const ScanOptions& options) {
  ConcavityReport report;
  report.scan = "convolution";
  const auto seqs = random_logconcave_sequences(count, max_length, seed);
  auto text = [](const std::vector<BigInt>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].get_str();
    return out + ")";
  };
  std::vector<std::vector<Violation>> found(seqs.size());
  parallel_for(seqs.size(), options.jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < seqs.size(); ++j) {
      const ConvolutionResult r = convolution_logconcavity_check(seqs[i], seqs[j]);
      if (r.status == ConvolutionStatus::pass) continue;
      Violation v;
      v.kind = r.status == ConvolutionStatus::fail ? "convolution" : "precondition";
      v.instance = text(seqs[i]) + " * " + text(seqs[j]);
      if (r.failing_index) v.values = {{"index", std::to_string(*r.failing_index)}};
      found[i].push_back(std::move(v));
    }
  });
  report.instances_checked = seqs.size() * (seqs.size() + 1) / 2;
  for (auto& f : found)
    for (auto& v : f) report.violations.push_back(std::move(v));
  report.parameters = {{"count", std::to_string(count)},
                       {"length", std::to_string(max_length)},
                       {"seed", std::to_string(seed)}};
  report.sort_violations();
  return report;
}

ConcavityReport weyl_logconcavity_scan(int rank_bound, int entry_bound, const ScanOptions& options) {
  ConcavityReport report;
  report.scan = "weyl";
  for (int r = 1; r <= rank_bound; ++r) {
    std::vector<IntVector> domain;
    for (const auto& w : dominant_weights(r, -entry_bound, entry_bound)) domain.push_back(w.vector());
    report.merge(logconcavity_scan(
        "weyl", domain, [](const IntVector& v) { return weyl_dimension(GLWeight(v)); }, options,
        [](const IntVector& v) { return GLWeight(v).to_string(); }));
  }
  report.parameters = {{"rank", std::to_string(rank_bound)},
                       {"bound", std::to_string(entry_bound)},
                       {"pq", std::to_string(options.pq_bound)}};
  return report;
}

ConcavityReport restriction_logconcavity_scan(int n, int k, int weight_bound, const ScanOptions& options) {
  if (k < 1 || k >= n) throw std::invalid_argument("restriction scan needs 1 <= k < n");
  std::vector<IntVector> domain;
  for (const auto& lam : partitions_up_to(weight_bound, n))
    for (const auto& mu : partitions_up_to(weight_bound, k)) {
      IntVector v = GLWeight::from_partition(lam, n).vector();
      const IntVector m = GLWeight::from_partition(mu, k).vector();
      v.insert(v.end(), m.begin(), m.end());
      domain.push_back(std::move(v));
    }
  auto split = [n](const IntVector& v) {
    return std::make_pair(Partition(IntVector(v.begin(), v.begin() + n)), Partition(IntVector(v.begin() + n, v.end())));
  };
  ConcavityReport report = logconcavity_scan(
      "restriction", domain,
      [=](const IntVector& v) {
        const auto [lam, mu] = split(v);
        return restriction_multiplicity(lam, mu, n, k);
      },
      options,
      [=](const IntVector& v) {
        const auto [lam, mu] = split(v);
        return lam.to_string() + "|" + mu.to_string();
      });
  report.parameters = {{"n", std::to_string(n)},
                       {"k", std::to_string(k)},
                       {"bound", std::to_string(weight_bound)},
                       {"pq", std::to_string(options.pq_bound)}};
  return report;
}

}  // namespace logcave
