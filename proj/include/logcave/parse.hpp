#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "logcave/partition.hpp"
#include "logcave/polynomial.hpp"
#include "logcave/sequence.hpp"

namespace logcave {

/// Malformed input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, const std::string& text, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// "3,1"; "0" and "" are the empty partition.
Partition parse_partition(const std::string& text);

/// "2,1,0@3". Without "@n" the rank is the number of entries, or `default_rank` when
/// positive, in which case the entries are padded with zeros.
GLWeight parse_weight(const std::string& text, int default_rank = 0);

/// "3,1/1" or just "3,1".
SkewShape parse_skew_shape(const std::string& text);

/// "3*x^2*y - 1/2*y" with variables x, y, z (d <= 3) or x1..xd.
MultiPolynomial parse_polynomial(const std::string& text, int num_variables);

/// Polynomials separated by ';'.
std::vector<MultiPolynomial> parse_polynomial_list(const std::string& text, int num_variables);

/// "0:1,1:2,2:1" (index:value pairs) or "1,2,1" (values from index 0).
FiniteSequence parse_sequence(const std::string& text);

}  // namespace logcave
