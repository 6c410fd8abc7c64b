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

#include "harmsum/polynomial.hpp"

#include <cassert>
#include <cstddef>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {
const BigRat kZero(0);
}

Polynomial::Polynomial(const BigRat& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
  }
}

Polynomial::Polynomial(std::vector<BigRat> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const BigRat& c, unsigned long k) {
  if (c == 0) return Polynomial();
  std::vector<BigRat> v(k + 1, kZero);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(BigRat(1), 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

const BigRat& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigRat& Polynomial::leading() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<BigRat> v(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<BigRat> v(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const BigRat& scalar) const {
  if (scalar == 0) return Polynomial();
  Polynomial out(*this);
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial out{BigRat(1)};
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Polynomial Polynomial::shifted(const BigRat& a) const {
  // Horner in (n + a).
  Polynomial shift_base({std::vector<BigRat>{a, BigRat(1)}});
  Polynomial out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    out = out * shift_base + Polynomial(coeffs_[i]);
  }
  return out;
}

BigRat Polynomial::eval(const BigRat& x) const {
  BigRat out(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    out = out * x + coeffs_[i];
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw DomainError("polynomial division by zero");
  }
  Polynomial rem(*this);
  std::vector<BigRat> q;
  int dd = divisor.degree();
  if (rem.degree() >= dd) {
    q.assign(rem.degree() - dd + 1, kZero);
  }
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    BigRat f = rem.leading() / divisor.leading();
    q[k] = f;
    rem = rem - divisor * Polynomial::monomial(f, k);
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  return *this * (BigRat(1) / leading());
}

std::pair<BigRat, Polynomial> Polynomial::content_primitive() const {
  if (is_zero()) return {BigRat(0), Polynomial()};
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRat content = make_rat(num_gcd, den_lcm);
  if (leading() < 0) content = -content;
  Polynomial primitive = *this * (BigRat(1) / content);
  return {content, primitive};
}

}  // namespace harmsum
