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

#include "harmsum/engine.hpp"

#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/faulhaber.hpp"
#include "harmsum/raw_expr.hpp"

namespace harmsum {

namespace {

Polynomial n_plus_1_pow(unsigned long e) {
  return (Polynomial::variable() + Polynomial(BigRat(1))).pow(e);
}

RationalFunction rf(Polynomial p) { return RationalFunction(std::move(p)); }

// Canonicalized fraction (the raw two-integer mpq constructor does not
// reduce, so 2/4 would otherwise compare unequal to 1/2).
BigRat frac(long num, unsigned long den) {
  return make_rat(BigInt(num), BigInt(den));
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Power: return "Power";
    case Family::F: return "F";
    case Family::R: return "R";
    case Family::S: return "S";
    case Family::T: return "T";
    case Family::ClassicA: return "ClassicA";
    case Family::ClassicB: return "ClassicB";
    case Family::ClassicC: return "ClassicC";
    case Family::ClassicD: return "ClassicD";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::Power, Family::F, Family::R, Family::S, Family::T,
                   Family::ClassicA, Family::ClassicB, Family::ClassicC,
                   Family::ClassicD}) {
    if (name == family_name(f)) return f;
  }
  throw DomainError("unknown family '" + std::string(name) +
                    "' (expected Power, F, R, S, T, or ClassicA..ClassicD)");
}

const ClosedForm& Engine::faulhaber_closed(unsigned long p) {
  auto it = faulhaber_.find(p);
  if (it != faulhaber_.end()) return it->second;
  ClosedForm form =
      ClosedForm::from_rational(rf(faulhaber_polynomial(session_, p)));
  return faulhaber_.emplace(p, std::move(form)).first->second;
}

const ClosedForm& Engine::power_harmonic_sum(unsigned long p, long m) {
  if (m < 1) throw DomainError("power_harmonic_sum requires order m >= 1");
  auto key = std::make_pair(p, m);
  auto it = master_.find(key);
  if (it != master_.end()) return it->second;

  // F(n,p,m) = H_n^{(-p)} H_n^{(m)} + H_n^{(m-p)}
  //            - (1/(p+1)) sum_{k=1..p+1} C(p+1,k) B+_{p-k+1} H_n^{(m-k)}.
  long lp = static_cast<long>(p);
  std::vector<RawExpr> pieces;
  pieces.push_back(RawExpr::product(
      {RawExpr::harmonic(0, -lp), RawExpr::harmonic(0, m)}));
  pieces.push_back(RawExpr::harmonic(0, m - lp));

  std::vector<RawExpr> tail;
  for (unsigned long k = 1; k <= p + 1; ++k) {
    BigRat weight = BigRat(session_.binomial(p + 1, static_cast<long>(k))) *
                    session_.bernoulli_plus(p + 1 - k);
    if (weight == 0) continue;
    tail.push_back(
        RawExpr::scaled(weight, RawExpr::harmonic(0, m - static_cast<long>(k))));
  }
  pieces.push_back(RawExpr::scaled(frac(-1, p + 1), RawExpr::sum(std::move(tail))));

  ClosedForm form = normalize(RawExpr::sum(std::move(pieces)), session_);
  return master_.emplace(key, std::move(form)).first->second;
}

ClosedForm Engine::classic_identity(Family which) {
  const BigRat half(1, 2);
  switch (which) {
    case Family::ClassicA:
      // sum 1/k H_k = (1/2)(H_n^2 + H_n^{(2)}).
      return normalize(
          RawExpr::scaled(half, RawExpr::sum({RawExpr::product({RawExpr::harmonic(0, 1),
                                                                RawExpr::harmonic(0, 1)}),
                                              RawExpr::harmonic(0, 2)})),
          session_);
    case Family::ClassicB:
      // sum 1/(k+1) H_k = (1/2)(H_{n+1}^2 - H_{n+1}^{(2)}).
      return normalize(
          RawExpr::scaled(half, RawExpr::sum({RawExpr::product({RawExpr::harmonic(1, 1),
                                                                RawExpr::harmonic(1, 1)}),
                                              RawExpr::scaled(BigRat(-1),
                                                              RawExpr::harmonic(1, 2))})),
          session_);
    case Family::ClassicC:
      // sum 1/k H_{n-k} = H_n^2 - H_n^{(2)}.
      return normalize(
          RawExpr::sum({RawExpr::product({RawExpr::harmonic(0, 1), RawExpr::harmonic(0, 1)}),
                        RawExpr::scaled(BigRat(-1), RawExpr::harmonic(0, 2))}),
          session_);
    case Family::ClassicD:
      // sum 1/(k+1) H_{n-k} = H_{n+1}^2 - H_{n+1}^{(2)}.
      return normalize(
          RawExpr::sum({RawExpr::product({RawExpr::harmonic(1, 1), RawExpr::harmonic(1, 1)}),
                        RawExpr::scaled(BigRat(-1), RawExpr::harmonic(1, 2))}),
          session_);
    default:
      throw DomainError("classic_identity expects a Classic family");
  }
}

const ClosedForm& Engine::conv_power_sum(unsigned long p) {
  auto it = conv_.find(p);
  if (it != conv_.end()) return it->second;

  ClosedForm form;
  if (p == 0) {
    // (n+1)[(H_{n+1}-1)^2 - H_{n+1}^{(2)} + 1].
    RawExpr h_minus_1 =
        RawExpr::sum({RawExpr::harmonic(1, 1), RawExpr::constant(-1)});
    RawExpr bracket = RawExpr::sum(
        {RawExpr::product({h_minus_1, h_minus_1}),
         RawExpr::scaled(BigRat(-1), RawExpr::harmonic(1, 2)), RawExpr::constant(1)});
    form = normalize(bracket, session_)
               .scaled(rf(n_plus_1_pow(1)));
  } else {
    // R(n,p) = (1/(p+1)) { -n(n+1)^p H_{n+1}
    //   + sum_{k=0}^{p-1} C(p,k) [ (n - k/(p-k+1)) R(n,k)
    //       + (1 + (-1)^k ((p-k)/p) (n+1)^{p-k-1}) F(n,k+1,1)
    //       + ((p-k)/p) H_n^{(-k-1)} ] }.
    Polynomial lead = -(Polynomial::variable() * n_plus_1_pow(p));
    ClosedForm acc = ClosedForm::term(HarmonicMonomial::single(1), rf(lead));
    for (unsigned long k = 0; k < p; ++k) {
      BigRat pk_over_p = frac(static_cast<long>(p - k), p);
      Polynomial r_weight =
          Polynomial::variable() +
          Polynomial(frac(-static_cast<long>(k), p - k + 1));
      BigRat f_scale = pk_over_p;
      if (k % 2 == 1) f_scale = -f_scale;
      Polynomial f_weight =
          Polynomial(BigRat(1)) + n_plus_1_pow(p - k - 1) * f_scale;

      ClosedForm inner = conv_power_sum(k).scaled(rf(r_weight)) +
                         power_harmonic_sum(k + 1, 1).scaled(rf(f_weight)) +
                         faulhaber_closed(k + 1).scaled(pk_over_p);
      acc = acc + inner.scaled(BigRat(session_.binomial(p, static_cast<long>(k))));
    }
    form = acc.scaled(frac(1, p + 1));
  }
  return conv_.emplace(p, std::move(form)).first->second;
}

const ClosedForm& Engine::square_power_sum(unsigned long p) {
  auto it = square_.find(p);
  if (it != square_.end()) return it->second;

  ClosedForm form;
  if (p == 0) {
    // (n+1)H_{n+1}^2 - (2n+3)H_{n+1} + 2(n+1).
    Polynomial np1 = n_plus_1_pow(1);
    form = ClosedForm::term(HarmonicMonomial::pair(1, 1), rf(np1)) +
           ClosedForm::term(HarmonicMonomial::single(1),
                            rf(-(Polynomial::monomial(BigRat(2), 1) +
                                 Polynomial(BigRat(3))))) +
           ClosedForm::from_rational(rf(np1 * BigRat(2)));
  } else {
    // S(n,p) = (1/(p+1)) { (n+1)[(n+1)^p (H_{n+1}^2 - H_{n+1}) - H_{n+1} + 1]
    //   - sum_{k=0}^{p-1} C(p,k) [ (1 + k/(p-k+1)) S(n,k)
    //       + ((p-k)/(k+1) - 1) F(n,k+1,1) - ((p-k)/p) H_n^{(-k-1)} ] }.
    Polynomial q = n_plus_1_pow(p + 1);
    Polynomial np1 = n_plus_1_pow(1);
    ClosedForm acc = ClosedForm::term(HarmonicMonomial::pair(1, 1), rf(q)) +
                     ClosedForm::term(HarmonicMonomial::single(1), rf(-(q + np1))) +
                     ClosedForm::from_rational(rf(np1));
    for (unsigned long k = 0; k < p; ++k) {
      BigRat s_weight = BigRat(1) + frac(static_cast<long>(k), p - k + 1);
      BigRat f_weight = frac(static_cast<long>(p - k), k + 1) - BigRat(1);
      BigRat h_weight = frac(static_cast<long>(p - k), p);

      ClosedForm inner = square_power_sum(k).scaled(s_weight) +
                         power_harmonic_sum(k + 1, 1).scaled(f_weight) -
                         faulhaber_closed(k + 1).scaled(h_weight);
      acc = acc - inner.scaled(BigRat(session_.binomial(p, static_cast<long>(k))));
    }
    form = acc.scaled(frac(1, p + 1));
  }
  return square_.emplace(p, std::move(form)).first->second;
}

ClosedForm Engine::reversed_square_power_sum(unsigned long p) {
  // sum_{k=0..n} k^p H_{n-k}^2 = sum_{k=0..p} (-1)^k C(p,k) n^{p-k} S(n,k).
  ClosedForm acc;
  for (unsigned long k = 0; k <= p; ++k) {
    BigRat c(session_.binomial(p, static_cast<long>(k)));
    if (k % 2 == 1) c = -c;
    Polynomial weight = Polynomial::monomial(c, p - k);
    acc = acc + square_power_sum(k).scaled(rf(weight));
  }
  return acc;
}

ClosedForm Engine::synthesize(const SumSpec& spec) {
  if (spec.family == Family::F) {
    if (!spec.m.has_value()) throw DomainError("family F requires an order m");
  } else if (spec.m.has_value()) {
    throw DomainError("order m is only meaningful for family F");
  }
  switch (spec.family) {
    case Family::Power: return faulhaber_closed(spec.p);
    case Family::F: return power_harmonic_sum(spec.p, *spec.m);
    case Family::R: return conv_power_sum(spec.p);
    case Family::S: return square_power_sum(spec.p);
    case Family::T: return reversed_square_power_sum(spec.p);
    case Family::ClassicA:
    case Family::ClassicB:
    case Family::ClassicC:
    case Family::ClassicD:
      if (spec.p != 0) throw DomainError("classic identities have no power parameter");
      return classic_identity(spec.family);
  }
  throw DomainError("unknown family");
}

}  // namespace harmsum
