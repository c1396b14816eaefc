#include "logcave/tableau.hpp"

#include <stdexcept>

namespace logcave {

SemistandardTableau::SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto& outer = shape_.outer();
  const auto& inner = shape_.inner();
  if (rows_.size() != outer.length()) throw std::invalid_argument("tableau row count mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != outer[i] - inner[i])
      throw std::invalid_argument("tableau row length mismatch");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw std::invalid_argument("tableau entries must be positive");
      if (j > 0 && rows_[i][j - 1] > rows_[i][j])
        throw std::invalid_argument("tableau rows must weakly increase");
      const int column = inner[i] + static_cast<int>(j);
      if (i > 0 && column >= inner[i - 1] && column < outer[i - 1] &&
          at(i - 1, column) >= rows_[i][j])
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

int SemistandardTableau::at(std::size_t row, int column) const {
  return rows_[row][static_cast<std::size_t>(column - shape_.inner()[row])];
}

std::vector<int> SemistandardTableau::content(int max_entry) const {
  std::vector<int> out(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : rows_)
    for (int v : row) ++out[static_cast<std::size_t>(v - 1)];
  return out;
}

std::vector<int> SemistandardTableau::reading_word() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

namespace {

// Cells are filled in row-reading order; smallest admissible value first gives lex order.
template <class OnComplete>
void fill(const SkewShape& shape, int max_entry, std::vector<std::vector<int>>& rows,
          OnComplete&& done) {
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  const std::size_t nrows = outer.length();
  // Lowest admissible value at (i, column) given what is already placed.
  auto lower_bound = [&](std::size_t i, std::size_t j) {
    int lo = 1;
    if (j > 0) lo = rows[i][j - 1];
    const int column = inner[i] + static_cast<int>(j);
    if (i > 0 && column >= inner[i - 1] && column < outer[i - 1])
      lo = std::max(lo, rows[i - 1][static_cast<std::size_t>(column - inner[i - 1])] + 1);
    return lo;
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    while (i < nrows && j == rows[i].size()) {
      ++i;
      j = 0;
    }
    if (i == nrows) {
      done();
      return;
    }
    // Cells below in the same column need room for strictly larger entries.
    int cap = max_entry;
    const int column = inner[i] + static_cast<int>(j);
    for (std::size_t below = i + 1; below < nrows && column >= inner[below] && column < outer[below];
         ++below)
      --cap;
    for (int v = lower_bound(i, j); v <= cap; ++v) {
      rows[i][j] = v;
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::vector<int>> blank_rows(const SkewShape& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].assign(static_cast<std::size_t>(shape.outer()[i] - shape.inner()[i]), 0);
  return rows;
}

}  // namespace

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardTableau&)>& visit) {
  if (max_entry < 1) throw std::invalid_argument("max entry must be positive");
  auto rows = blank_rows(shape);
  fill(shape, max_entry, rows, [&] { visit(SemistandardTableau(shape, rows)); });
}

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<SemistandardTableau> out;
  for_each_ssyt(shape, max_entry, [&](const SemistandardTableau& t) { out.push_back(t); });
  return out;
}

BigInt count_ssyt(const SkewShape& shape, int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("max entry must be positive");
  auto rows = blank_rows(shape);
  BigInt count = 0;
  fill(shape, max_entry, rows, [&] { ++count; });
  return count;
}

}  // namespace logcave
