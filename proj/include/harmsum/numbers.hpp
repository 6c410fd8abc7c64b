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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace harmsum {

// Exact scalar domain. GMP keeps rationals canonical (positive denominator,
// coprime numerator/denominator) as long as values are built through the
// helpers below or through arithmetic on already-canonical values.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// num/den in canonical form. Throws DomainError when den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// base^exp for a nonnegative exponent. 0^0 == 1.
BigInt ipow(const BigInt& base, unsigned long exp);

/// base^exp for a nonnegative exponent on rationals.
BigRat rpow(const BigRat& base, unsigned long exp);

/// "p/q", or plain "p" when the denominator is 1.
std::string rat_str(const BigRat& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws SyntaxError otherwise.
BigRat rat_from_string(std::string_view text);

bool is_integer(const BigRat& r);

}  // namespace harmsum
