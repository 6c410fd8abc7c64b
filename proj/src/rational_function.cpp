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

#include "harmsum/rational_function.hpp"

#include "harmsum/errors.hpp"

namespace harmsum {

RationalFunction::RationalFunction() : num_(), den_(BigRat(1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(BigRat(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw DomainError("rational function with zero denominator");
  }
  reduce();
}

RationalFunction RationalFunction::constant(const BigRat& c) {
  return RationalFunction(Polynomial(c));
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::variable());
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(BigRat(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  BigRat lead = den_.leading();
  if (lead != 1) {
    BigRat inv = BigRat(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  return *this * rhs.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) {
    throw DomainError("reciprocal of the zero rational function");
  }
  return RationalFunction(den_, num_);
}

BigRat RationalFunction::eval(const BigRat& x) const {
  BigRat d = den_.eval(x);
  if (d == 0) {
    throw PoleAtN("coefficient denominator vanishes at n = " + rat_str(x));
  }
  return num_.eval(x) / d;
}

}  // namespace harmsum
