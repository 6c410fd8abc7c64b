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

#include "harmsum/exact.hpp"

#include <cassert>

#include "harmsum/errors.hpp"

namespace harmsum {

BigInt ExactSession::binomial(unsigned long a, long b) const {
  if (b < 0 || static_cast<unsigned long>(b) > a) {
    return BigInt(0);
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, static_cast<unsigned long>(b));
  return out;
}

const BigRat& ExactSession::bernoulli_plus(unsigned long k) {
  if (bernoulli_.empty()) {
    bernoulli_.emplace_back(1);  // B_0^+ = 1
  }
  // Solve sum_{j=0..m} C(m+1, j) B_j^+ = m+1 incrementally for B_m^+.
  while (bernoulli_.size() <= k) {
    unsigned long m = bernoulli_.size();
    BigRat acc(0);
    for (unsigned long j = 0; j < m; ++j) {
      acc += BigRat(binomial(m + 1, static_cast<long>(j))) * bernoulli_[j];
      charge_ops(2);
    }
    bernoulli_.push_back((BigRat(m + 1) - acc) / BigRat(m + 1));
  }
  return bernoulli_[k];
}

const BigRat& ExactSession::harmonic_exact(unsigned long n, long m) {
  auto& table = harmonic_[m];
  if (table.empty()) {
    table.emplace_back(0);  // H_0^{(m)} = 0
  }
  while (table.size() <= n) {
    unsigned long k = table.size();
    BigRat term = m >= 0 ? make_rat(1, ipow(BigInt(k), static_cast<unsigned long>(m)))
                         : BigRat(ipow(BigInt(k), static_cast<unsigned long>(-m)));
    // Materialize before push_back: a lazy GMP expression would hold a
    // reference into the vector across a potential reallocation.
    BigRat next = table.back() + term;
    table.push_back(std::move(next));
    charge_ops(2);
  }
  return table[n];
}

const BigInt& ExactSession::factorial(unsigned long n) {
  if (factorials_.empty()) {
    factorials_.emplace_back(1);
  }
  while (factorials_.size() <= n) {
    BigInt next = factorials_.back() * BigInt(factorials_.size());
    factorials_.push_back(std::move(next));
  }
  return factorials_[n];
}

BigInt ExactSession::stirling_cycle2(unsigned long n) {
  if (n == 0) {
    return BigInt(0);
  }
  BigRat v = BigRat(factorial(n - 1)) * harmonic_exact(n - 1, 1);
  assert(v.get_den() == 1);  // (n-1)! clears every denominator of H_{n-1}
  return v.get_num();
}

}  // namespace harmsum
