#include "logcave/parse.hpp"

#include <cctype>
#include <map>
#include <set>

namespace logcave {

ParseError::ParseError(const std::string& what, const std::string& text, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position) + " in \"" + text + "\""),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }

  // Unsigned decimal digits.
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    bool negative = accept('-');
    if (!negative) accept('+');
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) fail_at("number out of range", at);
    const int v = std::stoi(d);
    return negative ? -v : v;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, text_, at); }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

std::vector<int> integer_list(Cursor& c) {
  std::vector<int> out{c.integer()};
  while (c.accept(',')) out.push_back(c.integer());
  return out;
}

template <class F>
auto rethrow_at(Cursor& c, std::size_t at, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    c.fail_at(e.what(), at);
  }
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Cursor c(text);
  if (c.done()) return {};
  const std::vector<int> parts = integer_list(c);
  if (!c.done()) c.fail("unexpected character");
  return rethrow_at(c, 0, [&] { return Partition(parts); });
}

GLWeight parse_weight(const std::string& text, int default_rank) {
  Cursor c(text);
  std::vector<int> entries = integer_list(c);
  int rank = default_rank > 0 ? default_rank : static_cast<int>(entries.size());
  if (c.accept('@')) {
    const std::size_t at = c.position();
    rank = c.integer();
    if (rank != static_cast<int>(entries.size()))
      c.fail_at("rank " + std::to_string(rank) + " does not match " + std::to_string(entries.size()) + " entries", at);
  }
  if (!c.done()) c.fail("unexpected character");
  if (static_cast<int>(entries.size()) > rank) c.fail_at("more entries than the rank", 0);
  entries.resize(static_cast<std::size_t>(rank), 0);
  return rethrow_at(c, 0, [&] { return GLWeight(entries); });
}

SkewShape parse_skew_shape(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(text));
  Partition outer, inner;
  try {
    outer = parse_partition(text.substr(0, slash));
  } catch (const ParseError& e) {
    throw ParseError("malformed outer partition", text, e.position());
  }
  try {
    inner = parse_partition(text.substr(slash + 1));
  } catch (const ParseError& e) {
    throw ParseError("malformed inner partition", text, slash + 1 + e.position());
  }
  Cursor c(text);
  return rethrow_at(c, slash, [&] { return SkewShape(outer, inner); });
}

MultiPolynomial parse_polynomial(const std::string& text, int num_variables) {
  if (num_variables < 1) throw std::invalid_argument("polynomial needs at least one variable");
  std::map<std::string, int> names;
  for (int i = 0; i < num_variables; ++i) {
    names[variable_name(i, num_variables)] = i;
    names["x" + std::to_string(i + 1)] = i;
  }
  Cursor c(text);
  MultiPolynomial out(num_variables);
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (!c.done()) {
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else if (!c.accept('+') && !first) c.fail("expected '+' or '-'");
    first = false;
    Rational coefficient = sign;
    ExponentVector e(static_cast<std::size_t>(num_variables), 0);
    do {
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Rational value(BigInt(c.digits()));
        if (c.accept('/')) {
          const std::size_t at = c.position();
          const BigInt den(c.digits());
          if (den == 0) c.fail_at("zero denominator", at);
          value /= Rational(den);
        }
        coefficient *= value;
      } else {
        const std::size_t at = c.position();
        const std::string name = c.identifier();
        if (name.empty()) c.fail("expected a number or a variable");
        auto it = names.find(name);
        if (it == names.end()) c.fail_at("unknown variable '" + name + "'", at);
        int exponent = 1;
        if (c.accept('^')) {
          const std::size_t eat = c.position();
          const std::string d = c.digits();
          if (d.size() > 6) c.fail_at("exponent out of range", eat);
          exponent = std::stoi(d);
        }
        e[static_cast<std::size_t>(it->second)] += exponent;
      }
    } while (c.accept('*'));
    out.add_term(e, coefficient);
  }
  return out;
}

std::vector<MultiPolynomial> parse_polynomial_list(const std::string& text, int num_variables) {
  std::vector<MultiPolynomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      out.push_back(parse_polynomial(piece, num_variables));
    } catch (const ParseError& e) {
      throw ParseError("malformed polynomial", text, start + e.position());
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

FiniteSequence parse_sequence(const std::string& text) {
  Cursor c(text);
  std::map<int, Rational> values;
  std::set<int> seen;
  int next = 0;
  if (c.done()) return {};
  do {
    const std::size_t at = c.position();
    int index = next;
    Rational value;
    // Either "index:value" or a bare value; values may be fractions.
    const int lead = c.integer();
    if (c.accept(':')) {
      index = lead;
      value = Rational(c.integer());
    } else {
      value = Rational(lead);
    }
    if (c.accept('/')) {
      const std::size_t dat = c.position();
      const BigInt den(c.digits());
      if (den == 0) c.fail_at("zero denominator", dat);
      value /= Rational(den);
    }
    if (value < 0) c.fail_at("negative sequence value", at);
    if (!seen.insert(index).second) c.fail_at("repeated index " + std::to_string(index), at);
    if (value != 0) values[index] = value;
    next = index + 1;
  } while (c.accept(','));
  if (!c.done()) c.fail("unexpected character");
  return FiniteSequence(values);
}

}  // namespace logcave
