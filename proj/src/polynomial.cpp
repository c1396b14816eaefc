#include "logcave/polynomial.hpp"

#include <stdexcept>

namespace logcave {

MultiPolynomial::MultiPolynomial(int num_variables) : num_variables_(num_variables) {
  if (num_variables < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

MultiPolynomial::MultiPolynomial(int num_variables, const Terms& terms) : MultiPolynomial(num_variables) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

MultiPolynomial MultiPolynomial::constant(int num_variables, const Rational& c) {
  MultiPolynomial p(num_variables);
  p.add_term(ExponentVector(static_cast<std::size_t>(num_variables), 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::monomial(const ExponentVector& e, const Rational& c) {
  MultiPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational MultiPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_variables_)
    throw std::invalid_argument("exponent length does not match the number of variables");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPolynomial::require_same_dimension(const MultiPolynomial& other) const {
  if (other.num_variables_ != num_variables_)
    throw std::invalid_argument("polynomials live in different numbers of variables");
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& other) {
  require_same_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& other) {
  require_same_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  a.require_same_dimension(b);
  MultiPolynomial out(a.num_variables_);
  ExponentVector e(static_cast<std::size_t>(a.num_variables_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string variable_name(int i, int num_variables) {
  if (num_variables <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < num_variables_; ++i) {
      const int x = e[static_cast<std::size_t>(i)];
      if (x == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(i, num_variables_);
      if (x > 1) mono += "^" + std::to_string(x);
    }
    const Rational magnitude = abs(c);
    std::string body;
    if (mono.empty())
      body = logcave::to_string(magnitude);
    else if (magnitude == 1)
      body = mono;
    else
      body = logcave::to_string(magnitude) + "*" + mono;
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace logcave
