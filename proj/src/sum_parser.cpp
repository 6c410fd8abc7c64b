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

#include "harmsum/sum_parser.hpp"

#include <cctype>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

class SumParser {
 public:
  explicit SumParser(std::string_view text) : text_(text) {}

  SumExprAst parse() {
    expect_word("sum");
    expect('(');
    factor();
    while (eat('*')) factor();
    expect(',');
    range();
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return ast_;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
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

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) {
      fail("expected '" + std::string(word) + "'");
    }
    pos_ += word.size();
  }

  unsigned long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  // factor := "k" ["^" INT] | "1/k" | "1/(k+1)" | harm ["^" INT]
  void factor() {
    char c = peek();
    if (c == 'k') {
      ++pos_;
      ast_.p += eat('^') ? integer() : 1;
      return;
    }
    if (c == '1') {
      ++pos_;
      expect('/');
      std::size_t at = pos_;
      if (eat('k')) {
        set_weight(1, at);
        return;
      }
      expect('(');
      expect('k');
      expect('+');
      expect('1');
      expect(')');
      set_weight(2, at);
      return;
    }
    if (c == 'H') {
      ++pos_;
      harmonic();
      return;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("expected a factor (k, 1/k, 1/(k+1), or H(...))");
  }

  void set_weight(int w, std::size_t at) {
    if (ast_.weight.has_value()) {
      throw UnsupportedSum("more than one reciprocal weight; " + supported_shapes_text());
    }
    (void)at;
    ast_.weight = w;
  }

  // harm := "H(" arg ["," INT] ")", already past 'H'; then optional ^INT.
  void harmonic() {
    expect('(');
    bool reversed = false;
    if (eat('n')) {
      expect('-');
      expect('k');
      reversed = true;
    } else if (!eat('k')) {
      fail("expected k or n-k as harmonic argument");
    }
    unsigned long order = 1;
    if (eat(',')) order = integer();
    expect(')');
    unsigned long exponent = eat('^') ? integer() : 1;
    if (exponent == 0 || exponent > 2) {
      throw UnsupportedSum("harmonic factors of degree " + std::to_string(exponent) +
                           " exceed the degree-2 cap; " + supported_shapes_text());
    }
    for (unsigned long i = 0; i < exponent; ++i) {
      if (ast_.harmonics.size() == 2) {
        throw UnsupportedSum("total harmonic degree exceeds 2; " + supported_shapes_text());
      }
      ast_.harmonics.push_back({reversed, order});
    }
  }

  // range := "k=0..n" | "k=1..n"
  void range() {
    expect('k');
    expect('=');
    char c = peek();
    if (c != '0' && c != '1') fail("range must start at 0 or 1");
    ++pos_;
    ast_.range_start = c - '0';
    expect('.');
    expect('.');
    expect('n');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SumExprAst ast_;
};

[[noreturn]] void unsupported(const std::string& reason) {
  throw UnsupportedSum(reason + "; " + supported_shapes_text());
}

SumSpec match_family(const SumExprAst& ast) {
  for (const auto& h : ast.harmonics) {
    if (h.order == 0) unsupported("harmonic order must be >= 1");
  }

  if (ast.weight.has_value()) {
    // Reciprocal weights exist only in the four classic identities, each
    // tied to the range that keeps the weight away from zero.
    if (ast.p != 0) unsupported("reciprocal weights cannot be combined with powers of k");
    if (ast.harmonics.size() != 1) {
      unsupported("reciprocal weights require exactly one harmonic factor");
    }
    const auto& h = ast.harmonics.front();
    if (h.order != 1) unsupported("weighted sums support only order-1 harmonic numbers");
    bool over_k1 = *ast.weight == 1;  // 1/k
    if (over_k1 && ast.range_start != 1) {
      unsupported("weight 1/k requires range k=1..n (k=0 would divide by zero)");
    }
    if (!over_k1 && ast.range_start != 0) {
      unsupported("weight 1/(k+1) requires range k=0..n");
    }
    Family family;
    if (over_k1) {
      family = h.reversed ? Family::ClassicC : Family::ClassicA;
    } else {
      family = h.reversed ? Family::ClassicD : Family::ClassicB;
    }
    return SumSpec{family, 0, std::nullopt};
  }

  if (ast.harmonics.empty()) {
    // Pure power sum. Over k=0..n the k=0 term contributes 0^0 = 1 when
    // p = 0, which is no longer sum_{k=1..n} k^p.
    if (ast.range_start == 0 && ast.p == 0) {
      unsupported("sum(k^0, k=0..n) counts the k=0 term; use range k=1..n");
    }
    return SumSpec{Family::Power, ast.p, std::nullopt};
  }

  if (ast.harmonics.size() == 1) {
    const auto& h = ast.harmonics.front();
    if (h.reversed) {
      unsupported("a lone H(n-k) factor has no supported closed form without a weight");
    }
    // The k=0 term k^p H_k^{(m)} always vanishes, so both ranges describe
    // the same sum.
    return SumSpec{Family::F, ast.p, static_cast<long>(h.order)};
  }

  const auto& h0 = ast.harmonics[0];
  const auto& h1 = ast.harmonics[1];
  if (h0.order != 1 || h1.order != 1) {
    unsupported("degree-2 harmonic products support only order-1 factors");
  }
  if (!h0.reversed && !h1.reversed) {
    // sum k^p H_k^2; the k=0 term vanishes for every p.
    return SumSpec{Family::S, ast.p, std::nullopt};
  }
  if (h0.reversed && h1.reversed) {
    // sum k^p H_{n-k}^2: the k=0 term is H_n^2, so the range must include it
    // unless p >= 1 forces it to zero.
    if (ast.range_start == 1 && ast.p == 0) {
      unsupported("sum(H(n-k)^2, k=1..n) drops the nonzero k=0 term; use range k=0..n");
    }
    return SumSpec{Family::T, ast.p, std::nullopt};
  }
  // Mixed H(k) * H(n-k); the k=0 term vanishes for every p.
  return SumSpec{Family::R, ast.p, std::nullopt};
}

std::string power_prefix(unsigned long p) {
  if (p == 1) return "k * ";
  return "k^" + std::to_string(p) + " * ";
}

}  // namespace

SumExprAst parse_sum_ast(std::string_view text) { return SumParser(text).parse(); }

SumSpec parse_sum_spec(std::string_view text) {
  return match_family(parse_sum_ast(text));
}

std::string canonical_sum_expression(const SumSpec& spec) {
  switch (spec.family) {
    case Family::Power:
      if (spec.p == 1) return "sum(k, k=1..n)";
      return "sum(k^" + std::to_string(spec.p) + ", k=1..n)";
    case Family::F: {
      long m = spec.m.value_or(1);
      std::string harm = m == 1 ? "H(k)" : "H(k," + std::to_string(m) + ")";
      return "sum(" + (spec.p == 0 ? harm : power_prefix(spec.p) + harm) + ", k=0..n)";
    }
    case Family::R: {
      std::string body = "H(k) * H(n-k)";
      return "sum(" + (spec.p == 0 ? body : power_prefix(spec.p) + body) + ", k=0..n)";
    }
    case Family::S: {
      std::string body = "H(k)^2";
      return "sum(" + (spec.p == 0 ? body : power_prefix(spec.p) + body) + ", k=0..n)";
    }
    case Family::T: {
      std::string body = "H(n-k)^2";
      return "sum(" + (spec.p == 0 ? body : power_prefix(spec.p) + body) + ", k=0..n)";
    }
    case Family::ClassicA: return "sum(1/k * H(k), k=1..n)";
    case Family::ClassicB: return "sum(1/(k+1) * H(k), k=0..n)";
    case Family::ClassicC: return "sum(1/k * H(n-k), k=1..n)";
    case Family::ClassicD: return "sum(1/(k+1) * H(n-k), k=0..n)";
  }
  throw DomainError("unknown family");
}

std::string latex_sum_expression(const SumSpec& spec) {
  auto kp = [&](void) -> std::string {
    if (spec.p == 0) return "";
    if (spec.p == 1) return "k ";
    return "k^" + (spec.p < 10 ? std::to_string(spec.p)
                               : "{" + std::to_string(spec.p) + "}") + " ";
  };
  switch (spec.family) {
    case Family::Power: {
      std::string power = spec.p == 1 ? "k" : "k^" +
          (spec.p < 10 ? std::to_string(spec.p) : "{" + std::to_string(spec.p) + "}");
      return "\\sum_{k=1}^{n} " + power;
    }
    case Family::F: {
      long m = spec.m.value_or(1);
      std::string harm = m == 1 ? "H_k" : "H_k^{(" + std::to_string(m) + ")}";
      return "\\sum_{k=0}^{n} " + kp() + harm;
    }
    case Family::R: return "\\sum_{k=0}^{n} " + kp() + "H_k H_{n-k}";
    case Family::S: return "\\sum_{k=0}^{n} " + kp() + "H_k^2";
    case Family::T: return "\\sum_{k=0}^{n} " + kp() + "H_{n-k}^2";
    case Family::ClassicA: return "\\sum_{k=1}^{n} \\frac{H_k}{k}";
    case Family::ClassicB: return "\\sum_{k=0}^{n} \\frac{H_k}{k+1}";
    case Family::ClassicC: return "\\sum_{k=1}^{n} \\frac{H_{n-k}}{k}";
    case Family::ClassicD: return "\\sum_{k=0}^{n} \\frac{H_{n-k}}{k+1}";
  }
  throw DomainError("unknown family");
}

std::string supported_shapes_text() {
  return "supported shapes: sum(k^p, k=1..n), sum(k^p * H(k,m), k=0..n), "
         "sum(k^p * H(k)^2, k=0..n), sum(k^p * H(k) * H(n-k), k=0..n), "
         "sum(k^p * H(n-k)^2, k=0..n), sum(1/k * H(k), k=1..n), "
         "sum(1/(k+1) * H(k), k=0..n), sum(1/k * H(n-k), k=1..n), "
         "sum(1/(k+1) * H(n-k), k=0..n)";
}

}  // namespace harmsum
