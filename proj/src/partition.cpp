#include "logcave/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace logcave {

namespace {

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

bool weakly_decreasing(std::span<const int> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_))
    throw std::invalid_argument("partition parts must be weakly decreasing: " + join(parts_));
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("partition parts must be nonnegative: " + join(parts_));
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const { return parts_.empty() ? "0" : join(parts_); }

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("weight rank must be at least 1");
  if (!weakly_decreasing(entries_))
    throw std::invalid_argument("weight entries must be weakly decreasing: " + join(entries_));
}

GLWeight GLWeight::from_partition(const Partition& p, int rank) {
  if (rank < 1 || static_cast<int>(p.length()) > rank)
    throw std::invalid_argument("partition " + p.to_string() + " does not fit rank " +
                                std::to_string(rank));
  std::vector<int> e(p.vector());
  e.resize(static_cast<std::size_t>(rank), 0);
  return GLWeight(std::move(e));
}

GLWeight GLWeight::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("weight rank must be at least 1");
  return GLWeight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

int GLWeight::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

GLWeight GLWeight::shifted(int c) const {
  std::vector<int> e(entries_);
  for (int& x : e) x += c;
  return GLWeight(std::move(e));
}

std::string GLWeight::to_string() const { return join(entries_) + "@" + std::to_string(rank()); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape " + inner_.to_string() + " not contained in " +
                                outer_.to_string());
}

std::string SkewShape::to_string() const {
  return inner_.empty() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

GLWeight dual_weight(const GLWeight& w) {
  std::vector<int> e(w.vector().rbegin(), w.vector().rend());
  for (int& x : e) x = -x;
  return GLWeight(std::move(e));
}

ShiftedPartition shift_to_partition(const GLWeight& w) {
  const int shift = std::min(0, w.min_entry());
  std::vector<int> e(w.vector());
  for (int& x : e) x -= shift;
  return {Partition(std::move(e)), shift};
}

BigInt weyl_dimension(const GLWeight& w) {
  BigInt num = 1, den = 1;
  const int n = w.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_of(int n, int max_parts) { return partitions_of(n, max_parts, n); }

std::vector<Partition> partitions_up_to(int max_size, int max_parts) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n, max_parts);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> current(p.length(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p.length()) {
      out.emplace_back(current);
      return;
    }
    const int cap = i == 0 ? p[0] : std::min(p[i], current[i - 1]);
    for (int v = 0; v <= cap; ++v) {
      current[i] = v;
      rec(i + 1);
    }
    current[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GLWeight> dominant_weights(int rank, int lo, int hi) {
  std::vector<GLWeight> out;
  if (rank < 1 || lo > hi) return out;
  std::vector<int> current(static_cast<std::size_t>(rank));
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == rank) {
      out.emplace_back(current);
      return;
    }
    for (int v = lo; v <= cap; ++v) {
      current[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  // Entry 0 is the largest; enumerate it in increasing order to get increasing lex output.
  for (int first = lo; first <= hi; ++first) {
    current[0] = first;
    rec(1, first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace logcave
