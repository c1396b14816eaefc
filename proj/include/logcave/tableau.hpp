#pragma once

#include <functional>
#include <vector>

#include "logcave/partition.hpp"

namespace logcave {

/// Filling of a skew shape with rows weakly increasing and columns strictly increasing.
/// rows()[i] holds the entries of cells inner[i] .. outer[i]-1 of row i.
class SemistandardTableau {
 public:
  SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Entry at (row, column) in diagram coordinates; the cell must belong to the skew shape.
  int at(std::size_t row, int column) const;

  /// Multiplicity of 1..max_entry.
  std::vector<int> content(int max_entry) const;

  /// Row-reading word: rows top to bottom, each left to right.
  std::vector<int> reading_word() const;

  bool operator==(const SemistandardTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Visits every semistandard filling with entries in 1..max_entry exactly once,
/// in increasing lexicographic order of the row-reading word.
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardTableau&)>& visit);

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

BigInt count_ssyt(const SkewShape& shape, int max_entry);

}  // namespace logcave
