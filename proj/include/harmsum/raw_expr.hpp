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

#include <variant>
#include <vector>

#include "harmsum/closed_form.hpp"

namespace harmsum {

/// Pre-normalization expression tree: sums, products and scalar multiples
/// over rational-function leaves and harmonic leaves H_{n+shift}^{(order)}
/// with any integer order and shift in {0, 1}.
class RawExpr {
 public:
  static RawExpr rational(RationalFunction value);
  static RawExpr constant(const BigRat& value);
  static RawExpr constant(long value);
  /// Harmonic leaf; order may be any integer (nonpositive orders normalize
  /// to power-sum polynomials), shift must be 0 or 1.
  static RawExpr harmonic(int shift, long order);
  static RawExpr sum(std::vector<RawExpr> children);
  static RawExpr product(std::vector<RawExpr> children);
  static RawExpr scaled(const BigRat& scalar, RawExpr child);

  friend ClosedForm normalize(const RawExpr& e, ExactSession& session);

 private:
  RawExpr() = default;

  struct Harmonic {
    int shift;
    long order;
  };
  struct Scaled {
    BigRat scalar;
    std::vector<RawExpr> child;  // exactly one element
  };
  struct Sum {
    std::vector<RawExpr> children;
  };
  struct Product {
    std::vector<RawExpr> children;
  };

  std::variant<RationalFunction, Harmonic, Scaled, Sum, Product> node_;
};

/// Rewrites e into the unique canonical ClosedForm: nonpositive-order
/// harmonics become power-sum polynomials, shift-0 symbols are moved to the
/// canonical argument n+1 via H_n^{(m)} = H_{n+1}^{(m)} - (n+1)^{-m},
/// products are distributed, and zero coefficients are dropped. Throws
/// DegreeOverflow when distribution would exceed harmonic degree 2.
ClosedForm normalize(const RawExpr& e, ExactSession& session);

}  // namespace harmsum
