// Copyright 2026 The harmsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "harmsum/expr_parser.hpp"

#include <cctype>
#include <string>

#include "harmsum/errors.hpp"
#include "harmsum/raw_expr.hpp"

namespace harmsum {

namespace {

class Parser {
 public:
  Parser(std::string_view text, ExactSession& session)
      : text_(text), session_(session) {}

  ClosedForm parse() {
    ClosedForm result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, pos_);
  }

  void skip_space() {
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      // Purely typographic LaTeX commands are ignored.
      if (eat_word("\\left") || eat_word("\\right") || eat_word("\\,")) continue;
      break;
    }
  }

  bool eat_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  ClosedForm expression() {
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    ClosedForm acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  ClosedForm term() {
    ClosedForm acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        acc = divide(acc, factor(), at);
      } else if (starts_primary(peek())) {
        acc = acc * factor();  // adjacency multiplication
      } else {
        return acc;
      }
    }
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == 'H' ||
           c == '(' || c == '\\';
  }

  ClosedForm divide(const ClosedForm& a, const ClosedForm& b, std::size_t at) {
    if (b.is_zero()) throw SyntaxError("division by zero", at);
    if (b.harmonic_degree() > 0) {
      throw SyntaxError("division by an expression containing harmonic numbers", at);
    }
    return a.scaled(b.coefficient(HarmonicMonomial::unit()).reciprocal());
  }

  ClosedForm factor() {
    ClosedForm base = primary();
    if (eat('^')) {
      unsigned long e = exponent();
      base = base.pow(e);
    }
    return base;
  }

  unsigned long exponent() {
    if (eat('{')) {
      unsigned long e = small_uint("exponent");
      expect('}', "after exponent");
      return e;
    }
    return small_uint("exponent");
  }

  unsigned long small_uint(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    if (pos_ - start > 6) fail(std::string(what) + " too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  long signed_int(const char* what) {
    skip_space();
    bool neg = eat('-');
    long v = static_cast<long>(small_uint(what));
    return neg ? -v : v;
  }

  ClosedForm primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ClosedForm::from_rational(RationalFunction::constant(integer_literal()));
    }
    if (c == 'n') {
      ++pos_;
      return ClosedForm::from_rational(RationalFunction::variable());
    }
    if (c == 'H') {
      ++pos_;
      return harmonic();
    }
    if (c == '(') {
      ++pos_;
      ClosedForm inner = expression();
      expect(')', "to close parenthesis");
      return inner;
    }
    if (c == '\\') {
      if (eat_word("\\frac")) {
        expect('{', "after \\frac");
        ClosedForm num = expression();
        expect('}', "after \\frac numerator");
        std::size_t at = pos_;
        expect('{', "before \\frac denominator");
        ClosedForm den = expression();
        expect('}', "after \\frac denominator");
        return divide(num, den, at);
      }
      fail("unknown command");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character");
  }

  BigRat integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return BigRat(BigInt(std::string(text_.substr(start, pos_ - start))));
  }

  // Called just past 'H'. Accepts H(n+1), H(n,2), H_{n+1}, H_n,
  // H_{n+1}^{(2)}; a plain numeric exponent (H(n+1)^2) is left for factor().
  ClosedForm harmonic() {
    int shift = 0;
    long order = 1;
    if (eat('(')) {
      shift = harmonic_argument();
      if (eat(',')) order = signed_int("harmonic order");
      expect(')', "to close harmonic argument");
    } else if (eat('_')) {
      if (eat('{')) {
        shift = harmonic_argument();
        expect('}', "to close subscript");
      } else {
        if (!eat('n')) fail("expected n in subscript");
        shift = 0;
      }
      // Order superscript ^{(m)}; any other '^' is an exponent.
      std::size_t mark = pos_;
      if (eat('^')) {
        if (eat('{') && eat('(')) {
          order = signed_int("harmonic order");
          expect(')', "in order superscript");
          expect('}', "to close order superscript");
        } else {
          pos_ = mark;
        }
      }
    } else {
      fail("expected harmonic argument");
    }
    return normalize(RawExpr::harmonic(shift, order), session_);
  }

  int harmonic_argument() {
    if (!eat('n')) fail("expected n in harmonic argument");
    if (eat('+')) {
      skip_space();
      if (!eat('1')) fail("harmonic argument must be n or n+1");
      return 1;
    }
    return 0;
  }

  std::string_view text_;
  ExactSession& session_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm parse_closed_form(std::string_view text, ExactSession& session) {
  Parser parser(text, session);
  return parser.parse();
}

}  // namespace harmsum
