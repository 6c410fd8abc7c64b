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

#include <utility>
#include <vector>

#include "harmsum/numbers.hpp"

namespace harmsum {

/// Univariate polynomial in n over exact rationals. Coefficients are stored
/// low degree first; the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const BigRat& constant);
  explicit Polynomial(std::vector<BigRat> coefficients);

  /// The monomial c * n^k.
  static Polynomial monomial(const BigRat& c, unsigned long k);
  /// The polynomial n.
  static Polynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of n^i (0 beyond the stored degree).
  const BigRat& coeff(std::size_t i) const;
  const BigRat& leading() const;
  const std::vector<BigRat>& coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const BigRat& scalar) const;
  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  Polynomial pow(unsigned long e) const;

  /// p(n + a).
  Polynomial shifted(const BigRat& a) const;

  BigRat eval(const BigRat& x) const;

  /// Quotient and remainder of this / divisor (divisor nonzero).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Leading coefficient scaled to 1 (zero stays zero).
  Polynomial monic() const;

  /// Splits into content * primitive where the primitive part has coprime
  /// integer coefficients and a positive leading coefficient. The content
  /// carries the sign; content of the zero polynomial is 0.
  std::pair<BigRat, Polynomial> content_primitive() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

}  // namespace harmsum
