#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vector() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;

  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Componentwise containment of Young diagrams.
  bool contains(const Partition& inner) const;

  /// "3,1"; the empty partition prints as "0".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Dominant weight of U(n): weakly decreasing integers of fixed length n >= 1.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<int> entries);
  GLWeight(std::initializer_list<int> entries) : GLWeight(std::vector<int>(entries)) {}

  /// Partition padded with zeros to `rank`; throws if it has more than `rank` parts.
  static GLWeight from_partition(const Partition& p, int rank);
  static GLWeight zero(int rank);

  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vector() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int sum() const;
  int min_entry() const { return entries_.back(); }

  GLWeight shifted(int c) const;

  /// "2,1,0@3".
  std::string to_string() const;

  auto operator<=>(const GLWeight&) const = default;

 private:
  std::vector<int> entries_;
};

/// outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  std::size_t rows() const { return outer_.length(); }

  /// "3,1/1", or "3,1" when the inner shape is empty.
  std::string to_string() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);

/// (w_1,...,w_n)^* = (-w_n,...,-w_1).
GLWeight dual_weight(const GLWeight& w);

struct ShiftedPartition {
  Partition partition;
  int shift = 0;
};

/// w = partition + shift·(1,...,1) with shift = min(0, min entry).
ShiftedPartition shift_to_partition(const GLWeight& w);

/// Product over i<j of (w_i - w_j + j - i)/(j - i).
BigInt weyl_dimension(const GLWeight& w);

/// All partitions of `n` with at most `max_parts` parts, each at most `max_part`, in decreasing lex order.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);
std::vector<Partition> partitions_of(int n, int max_parts);

/// Partitions of every size 0..max_size (at most `max_parts` parts), by size then decreasing lex.
std::vector<Partition> partitions_up_to(int max_size, int max_parts);

/// Every partition contained in `p`, increasing lex order.
std::vector<Partition> subpartitions(const Partition& p);

/// Dominant weights of the given rank with every entry in [lo, hi], increasing lex order.
std::vector<GLWeight> dominant_weights(int rank, int lo, int hi);

}  // namespace logcave
