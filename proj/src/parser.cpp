#include "frob/parser.hpp"

#include <cctype>
#include <set>

#include "frob/error.hpp"

namespace frob {

namespace {

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isDigit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial result = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos_) + ": " + what);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = mul(acc, unary());
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '-') {
        throw Error(ErrorKind::NegativeExponent, "at offset " + std::to_string(pos_) + ": negative exponent");
      }
      if (pos_ >= text_.size() || !isDigit(text_[pos_])) fail("expected exponent");
      std::uint64_t e = 0;
      while (pos_ < text_.size() && isDigit(text_[pos_])) {
        if (e > (std::uint64_t{1} << 40)) fail("exponent too large");
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        ++pos_;
      }
      rejectJuxtaposition();
      return pow(base, e);
    }
    return base;
  }

  Polynomial atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (isDigit(c)) {
      const auto& p = ring_.modulus();
      std::uint64_t value = 0;
      while (pos_ < text_.size() && isDigit(text_[pos_])) {
        value = (value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p.value();
        ++pos_;
      }
      rejectJuxtaposition();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(value));
    }
    if (isNameStart(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && isNameChar(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = 0;
      try {
        index = ring_.indexOf(name);
      } catch (const Error&) {
        throw Error(ErrorKind::UnknownVariable,
                    "at offset " + std::to_string(start) + ": unknown variable '" + std::string(name) + "'");
      }
      rejectJuxtaposition();
      return Polynomial::variable(ring_, index);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      rejectJuxtaposition();
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // After an operand, the next token must be an operator, ')' or the end.
  void rejectJuxtaposition() {
    std::size_t save = pos_;
    skipSpace();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (isNameChar(c) || c == '(') fail("implicit multiplication is not accepted");
    }
    pos_ = save;
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, ring).run();
}

Polynomial parsePolynomial(std::string_view text, PrimeModulus p, std::vector<std::string> variables) {
  if (variables.empty()) throw Error(ErrorKind::InvalidArgument, "no variables declared");
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size()) throw Error(ErrorKind::InvalidArgument, "duplicate variable names");
  return parsePolynomial(text, PolyRing(p, std::move(variables)));
}

std::vector<std::string> parseVariableList(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty() || !isNameStart(piece.front())) {
      throw Error(ErrorKind::InvalidArgument, "bad variable name '" + std::string(piece) + "'");
    }
    for (char c : piece) {
      if (!isNameChar(c)) throw Error(ErrorKind::InvalidArgument, "bad variable name '" + std::string(piece) + "'");
    }
    if (!seen.insert(std::string(piece)).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + std::string(piece) + "'");
    }
    names.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return names;
}

}  // namespace frob
