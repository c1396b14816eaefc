#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

/// Finitely supported two-sided sequence k -> x_k of nonnegative rationals.
/// Zero values are not stored.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  /// Throws std::invalid_argument on a negative value.
  explicit FiniteSequence(const std::map<int, Rational>& values);

  /// Values x_first, x_{first+1}, ... .
  static FiniteSequence from_values(const std::vector<Rational>& values, int first = 0);
  static FiniteSequence delta(int index = 0);

  Rational at(int k) const;
  const std::map<int, Rational>& support() const { return values_; }
  bool empty() const { return values_.empty(); }
  int min_index() const { return values_.begin()->first; }
  int max_index() const { return values_.rbegin()->first; }

  /// "0:1,1:1".
  std::string to_string() const;

  bool operator==(const FiniteSequence&) const = default;

 private:
  std::map<int, Rational> values_;
};

/// (x*y)_n = sum_k x_k y_{n-k}.
FiniteSequence convolve(const FiniteSequence& x, const FiniteSequence& y);

}  // namespace logcave
