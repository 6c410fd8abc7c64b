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

#include "harmsum/polynomial.hpp"

namespace harmsum {

/// Ratio of polynomials in n, kept reduced: gcd(num, den) = 1 and the
/// denominator is monic (so the representation is unique and structural
/// equality is meaningful).
class RationalFunction {
 public:
  /// Zero.
  RationalFunction();
  /// num / 1.
  explicit RationalFunction(Polynomial num);
  /// num / den; throws DomainError when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const BigRat& c);
  /// The rational function n.
  static RationalFunction variable();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  RationalFunction reciprocal() const;

  /// Exact value at x. Throws PoleAtN when the denominator vanishes there.
  BigRat eval(const BigRat& x) const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace harmsum
