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

#include <map>
#include <vector>

#include "harmsum/exact.hpp"
#include "harmsum/rational_function.hpp"

namespace harmsum {

/// A single generalized harmonic number H_{n+shift}^{(order)} with order >= 1
/// and shift in {0, 1}. Nonpositive orders are polynomials in n and must be
/// expanded before a symbol is formed.
struct HarmonicSymbol {
  HarmonicSymbol(long order, int shift);
  long order;
  int shift;
};

/// Product of at most two harmonic symbols, all at the canonical argument
/// n+1. Stored as a sorted multiset of orders; the empty multiset is the
/// pure rational-function monomial.
struct HarmonicMonomial {
  HarmonicMonomial() = default;
  explicit HarmonicMonomial(std::vector<long> orders);

  static HarmonicMonomial unit() { return HarmonicMonomial(); }
  static HarmonicMonomial single(long order);
  static HarmonicMonomial pair(long a, long b);

  /// Combined multiset; throws DegreeOverflow beyond degree 2.
  HarmonicMonomial merged(const HarmonicMonomial& rhs) const;

  int degree() const { return static_cast<int>(orders.size()); }
  bool operator==(const HarmonicMonomial& rhs) const { return orders == rhs.orders; }

  std::vector<long> orders;  // ascending, size <= 2, each >= 1
};

/// Orders monomials by harmonic degree (descending), then lexicographically
/// by the sorted order lists. This is both the storage order and the
/// rendering order.
struct MonomialOrder {
  bool operator()(const HarmonicMonomial& a, const HarmonicMonomial& b) const {
    if (a.orders.size() != b.orders.size()) return a.orders.size() > b.orders.size();
    return a.orders < b.orders;
  }
};

/// Canonical closed form: a finite map monomial -> rational-function
/// coefficient, with no zero coefficients stored. Structural equality of two
/// ClosedForms is coefficient-wise equality. Values are immutable in spirit:
/// every operation returns a new form.
class ClosedForm {
 public:
  using TermMap = std::map<HarmonicMonomial, RationalFunction, MonomialOrder>;

  ClosedForm() = default;

  static ClosedForm zero() { return ClosedForm(); }
  static ClosedForm from_rational(RationalFunction coefficient);
  static ClosedForm term(HarmonicMonomial monomial, RationalFunction coefficient);
  static ClosedForm one() { return from_rational(RationalFunction::constant(BigRat(1))); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Coefficient of a monomial (zero when absent).
  RationalFunction coefficient(const HarmonicMonomial& m) const;

  int harmonic_degree() const;
  /// True when every stored coefficient is a polynomial (denominator 1).
  bool all_polynomial_coefficients() const;

  ClosedForm operator+(const ClosedForm& rhs) const;
  ClosedForm operator-(const ClosedForm& rhs) const;
  ClosedForm operator-() const;
  /// Distributed product; throws DegreeOverflow past harmonic degree 2.
  ClosedForm operator*(const ClosedForm& rhs) const;
  ClosedForm scaled(const RationalFunction& c) const;
  ClosedForm scaled(const BigRat& c) const;
  ClosedForm pow(unsigned long e) const;

  bool operator==(const ClosedForm& rhs) const { return terms_ == rhs.terms_; }

  /// Exact value at nonnegative n: substitutes H_{n+1}^{(m)} for each symbol
  /// and evaluates each coefficient at n. Throws PoleAtN on a vanishing
  /// coefficient denominator.
  BigRat evaluate(ExactSession& session, unsigned long n) const;

 private:
  void insert_term(const HarmonicMonomial& m, const RationalFunction& c);
  TermMap terms_;
};

}  // namespace harmsum
