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

#include "harmsum/closed_form.hpp"

#include <algorithm>
#include <string>

#include "harmsum/errors.hpp"

namespace harmsum {

HarmonicSymbol::HarmonicSymbol(long order_, int shift_) : order(order_), shift(shift_) {
  if (order < 1) {
    throw DomainError("harmonic symbol requires order >= 1, got " + std::to_string(order));
  }
  if (shift != 0 && shift != 1) {
    throw DomainError("harmonic symbol shift must be 0 or 1");
  }
}

HarmonicMonomial::HarmonicMonomial(std::vector<long> orders_) : orders(std::move(orders_)) {
  std::sort(orders.begin(), orders.end());
  if (orders.size() > 2) {
    throw DegreeOverflow("harmonic monomial of degree " + std::to_string(orders.size()));
  }
  for (long m : orders) {
    if (m < 1) {
      throw DomainError("harmonic monomial with order " + std::to_string(m));
    }
  }
}

HarmonicMonomial HarmonicMonomial::single(long order) {
  return HarmonicMonomial(std::vector<long>{order});
}

HarmonicMonomial HarmonicMonomial::pair(long a, long b) {
  return HarmonicMonomial(std::vector<long>{a, b});
}

HarmonicMonomial HarmonicMonomial::merged(const HarmonicMonomial& rhs) const {
  if (orders.size() + rhs.orders.size() > 2) {
    throw DegreeOverflow("product exceeds harmonic degree 2");
  }
  std::vector<long> merged_orders(orders);
  merged_orders.insert(merged_orders.end(), rhs.orders.begin(), rhs.orders.end());
  return HarmonicMonomial(std::move(merged_orders));
}

ClosedForm ClosedForm::from_rational(RationalFunction coefficient) {
  ClosedForm out;
  out.insert_term(HarmonicMonomial::unit(), coefficient);
  return out;
}

ClosedForm ClosedForm::term(HarmonicMonomial monomial, RationalFunction coefficient) {
  ClosedForm out;
  out.insert_term(monomial, coefficient);
  return out;
}

RationalFunction ClosedForm::coefficient(const HarmonicMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

int ClosedForm::harmonic_degree() const {
  int deg = 0;
  for (const auto& [mono, coeff] : terms_) {
    deg = std::max(deg, mono.degree());
  }
  return deg;
}

bool ClosedForm::all_polynomial_coefficients() const {
  for (const auto& [mono, coeff] : terms_) {
    if (!coeff.is_polynomial()) return false;
  }
  return true;
}

void ClosedForm::insert_term(const HarmonicMonomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClosedForm ClosedForm::operator+(const ClosedForm& rhs) const {
  ClosedForm out(*this);
  for (const auto& [mono, coeff] : rhs.terms_) {
    out.insert_term(mono, coeff);
  }
  return out;
}

ClosedForm ClosedForm::operator-() const {
  ClosedForm out;
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, -coeff);
  }
  return out;
}

ClosedForm ClosedForm::operator-(const ClosedForm& rhs) const { return *this + (-rhs); }

ClosedForm ClosedForm::operator*(const ClosedForm& rhs) const {
  ClosedForm out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.insert_term(ma.merged(mb), ca * cb);
    }
  }
  return out;
}

ClosedForm ClosedForm::scaled(const RationalFunction& c) const {
  ClosedForm out;
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    out.insert_term(mono, coeff * c);
  }
  return out;
}

ClosedForm ClosedForm::scaled(const BigRat& c) const {
  return scaled(RationalFunction::constant(c));
}

ClosedForm ClosedForm::pow(unsigned long e) const {
  ClosedForm out = one();
  for (unsigned long i = 0; i < e; ++i) {
    out = out * (*this);
  }
  return out;
}

BigRat ClosedForm::evaluate(ExactSession& session, unsigned long n) const {
  BigRat x(static_cast<unsigned long>(n));
  BigRat acc(0);
  for (const auto& [mono, coeff] : terms_) {
    BigRat v = coeff.eval(x);
    session.charge_ops(coeff.num().coefficients().size() + coeff.den().coefficients().size());
    for (long order : mono.orders) {
      v *= session.harmonic_exact(n + 1, order);
      session.charge_ops(1);
    }
    acc += v;
    session.charge_ops(1);
  }
  return acc;
}

}  // namespace harmsum
