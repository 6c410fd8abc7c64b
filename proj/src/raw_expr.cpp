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

#include "harmsum/raw_expr.hpp"

#include <utility>

#include "harmsum/errors.hpp"
#include "harmsum/faulhaber.hpp"

namespace harmsum {

RawExpr RawExpr::rational(RationalFunction value) {
  RawExpr e;
  e.node_ = std::move(value);
  return e;
}

RawExpr RawExpr::constant(const BigRat& value) {
  return rational(RationalFunction::constant(value));
}

RawExpr RawExpr::constant(long value) { return constant(BigRat(value)); }

RawExpr RawExpr::harmonic(int shift, long order) {
  if (shift != 0 && shift != 1) {
    throw DomainError("harmonic shift must be 0 or 1");
  }
  RawExpr e;
  e.node_ = Harmonic{shift, order};
  return e;
}

RawExpr RawExpr::sum(std::vector<RawExpr> children) {
  RawExpr e;
  e.node_ = Sum{std::move(children)};
  return e;
}

RawExpr RawExpr::product(std::vector<RawExpr> children) {
  RawExpr e;
  e.node_ = Product{std::move(children)};
  return e;
}

RawExpr RawExpr::scaled(const BigRat& scalar, RawExpr child) {
  RawExpr e;
  std::vector<RawExpr> box;
  box.push_back(std::move(child));
  e.node_ = Scaled{scalar, std::move(box)};
  return e;
}

namespace {

ClosedForm normalize_harmonic(int shift, long order, ExactSession& session) {
  if (order <= 0) {
    // H_{n+shift}^{(-p)} is the degree-(p+1) power-sum polynomial in n+shift.
    Polynomial poly =
        faulhaber_polynomial(session, static_cast<unsigned long>(-order));
    if (shift == 1) poly = poly.shifted(1);
    return ClosedForm::from_rational(RationalFunction(std::move(poly)));
  }
  ClosedForm form = ClosedForm::term(HarmonicMonomial::single(order),
                                     RationalFunction::constant(BigRat(1)));
  if (shift == 0) {
    // H_n^{(m)} = H_{n+1}^{(m)} - 1/(n+1)^m.
    Polynomial np1 = Polynomial::monomial(BigRat(1), 1) + Polynomial(BigRat(1));
    RationalFunction correction(Polynomial(BigRat(-1)),
                                np1.pow(static_cast<unsigned long>(order)));
    form = form + ClosedForm::from_rational(correction);
  }
  return form;
}

}  // namespace

ClosedForm normalize(const RawExpr& e, ExactSession& session) {
  struct Visitor {
    ExactSession& session;

    ClosedForm operator()(const RationalFunction& rf) const {
      return ClosedForm::from_rational(rf);
    }
    ClosedForm operator()(const RawExpr::Harmonic& h) const {
      return normalize_harmonic(h.shift, h.order, session);
    }
    ClosedForm operator()(const RawExpr::Scaled& s) const {
      return normalize(s.child.front(), session).scaled(s.scalar);
    }
    ClosedForm operator()(const RawExpr::Sum& s) const {
      ClosedForm acc = ClosedForm::zero();
      for (const RawExpr& child : s.children) acc = acc + normalize(child, session);
      return acc;
    }
    ClosedForm operator()(const RawExpr::Product& p) const {
      ClosedForm acc = ClosedForm::one();
      for (const RawExpr& child : p.children) acc = acc * normalize(child, session);
      return acc;
    }
  };
  return std::visit(Visitor{session}, e.node_);
}

}  // namespace harmsum
