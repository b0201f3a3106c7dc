#include "folclass/parse.hpp"

#include <cctype>
#include <optional>

#include "folclass/error.hpp"

namespace folclass {

namespace {

/// Recursive-descent parser for sums of products over a field, in one polynomial variable and
/// the field generator u.
class ExprParser {
 public:
  struct Options {
    char variable = 't';            // '\0' disables the polynomial variable
    bool generator_allowed = true;  // false for prime fields and moduli
    bool bare_exponents = false;    // accept "x3" for x^3 (modulus literals)
  };

  ExprParser(std::string_view text, const FieldSpec& field, Options options)
      : text_(text), field_(field), opts_(options) {}

  Poly parse_all() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Poly p = sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, std::string(text_), pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Poly sum() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned integer() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<unsigned>(v);
  }

  unsigned exponent() {
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return integer();
    }
    if (opts_.bare_exponents && std::isdigit(static_cast<unsigned char>(peek()))) return integer();
    return 1;
  }

  Poly power(Poly base, unsigned n) {
    Poly out = Poly::constant(field_.one());
    for (unsigned i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Poly factor() {
    skip_ws();
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(field_.from_integer(integer()));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return power(std::move(inner), exponent());
    }
    if (opts_.variable != '\0' && c == opts_.variable) {
      ++pos_;
      return Poly::monomial(field_.one(), exponent());
    }
    if (c == 'u') {
      if (!opts_.generator_allowed)
        fail("unknown generator symbol 'u' (" + field_.name() + " is a prime field)");
      ++pos_;
      return Poly::constant(field_.generator().pow(exponent()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      fail(std::string("unknown symbol '") + c + "'");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const FieldSpec& field_;
  Options opts_;
  std::size_t pos_ = 0;
};

std::string strip_ws(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

const FieldSpec& parse_field_literal(std::string_view text) {
  const std::string s = strip_ws(text);
  const std::string input(text);
  if (s.rfind("GF(", 0) != 0) throw ParseError("field literal must start with 'GF('", input, 0);
  if (s.empty() || s.back() != ')') throw ParseError("field literal must end with ')'", input, s.size());
  const std::string body = s.substr(3, s.size() - 4);
  const auto semi = body.find(';');
  const std::string order_text = body.substr(0, semi);
  if (order_text.empty() || order_text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected field order", input, 3);
  unsigned long long q = std::stoull(order_text);
  if (q < 2 || q > (1ull << 31)) throw ParseError("field order out of range", input, 3);
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned k = 0;
  for (unsigned long long r = q; r > 1; r /= p) {
    if (r % p != 0) throw ParseError("field order " + order_text + " is not a prime power", input, 3);
    ++k;
  }
  if (semi == std::string::npos) return FieldSpec::get(p, k);

  const std::string option = body.substr(semi + 1);
  if (option.rfind("mod=", 0) != 0)
    throw ParseError("expected 'mod=' option", input, 3 + semi + 1);
  const std::string mod_text = option.substr(4);
  const FieldSpec& prime = FieldSpec::get(p, 1);
  ExprParser parser(mod_text, prime, {.variable = 'x', .generator_allowed = false, .bare_exponents = true});
  const Poly m = parser.parse_all();
  if (m.degree() != Degree(static_cast<int>(k)))
    throw ParseError("modulus degree " + m.degree().to_string() + " does not match GF(" +
                         order_text + ")",
                     input, 3 + semi + 5);
  std::vector<unsigned> coeffs;
  for (std::size_t i = 0; i < m.size(); ++i) coeffs.push_back(m.raw(i));
  return FieldSpec::with_modulus(p, std::move(coeffs));
}

FieldElement parse_element_literal(std::string_view text, const FieldSpec& field) {
  ExprParser parser(text, field, {.variable = '\0', .generator_allowed = field.degree() > 1});
  return parser.parse_all().constant_term();
}

Poly parse_poly_literal(std::string_view text, const FieldSpec& field) {
  ExprParser parser(text, field, {.variable = 't', .generator_allowed = field.degree() > 1});
  return parser.parse_all();
}

}  // namespace folclass
