#include "logcave/sequence.hpp"

#include <stdexcept>

namespace logcave {

FiniteSequence::FiniteSequence(const std::map<int, Rational>& values) {
  for (const auto& [k, v] : values) {
    if (v < 0) throw std::invalid_argument("sequence values must be nonnegative (index " +
                                           std::to_string(k) + ")");
    if (v != 0) values_.emplace(k, v);
  }
}

FiniteSequence FiniteSequence::from_values(const std::vector<Rational>& values, int first) {
  std::map<int, Rational> m;
  for (std::size_t i = 0; i < values.size(); ++i) m[first + static_cast<int>(i)] = values[i];
  return FiniteSequence(m);
}

FiniteSequence FiniteSequence::delta(int index) { return FiniteSequence({{index, Rational(1)}}); }

Rational FiniteSequence::at(int k) const {
  auto it = values_.find(k);
  return it == values_.end() ? Rational(0) : it->second;
}

std::string FiniteSequence::to_string() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    if (!out.empty()) out += ',';
    out += std::to_string(k) + ":" + logcave::to_string(v);
  }
  return out;
}

FiniteSequence convolve(const FiniteSequence& x, const FiniteSequence& y) {
  std::map<int, Rational> out;
  for (const auto& [i, a] : x.support())
    for (const auto& [j, b] : y.support()) out[i + j] += a * b;
  return FiniteSequence(out);
}

}  // namespace logcave
