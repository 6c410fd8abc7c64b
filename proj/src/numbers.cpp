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

#include "harmsum/numbers.hpp"

#include "harmsum/errors.hpp"

namespace harmsum {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigRat rpow(const BigRat& base, unsigned long exp) {
  BigRat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return out;  // powers of a canonical rational stay canonical
}

std::string rat_str(const BigRat& r) { return r.get_str(); }

BigRat rat_from_string(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](BigInt& out) {
    std::size_t start = i;
    out = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start) throw SyntaxError("expected digits in rational literal", i);
  };
  BigInt num, den = 1;
  read_digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    read_digits(den);
  }
  if (i != text.size()) throw SyntaxError("trailing characters in rational literal", i);
  if (negative) num = -num;
  return make_rat(num, den);
}

bool is_integer(const BigRat& r) { return r.get_den() == 1; }

}  // namespace harmsum
