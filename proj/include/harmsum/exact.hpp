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

#include <cstdint>
#include <map>
#include <vector>

#include "harmsum/numbers.hpp"

namespace harmsum {

/// Exact-arithmetic layer with session-local caches.
///
/// All operations are deterministic; the caches (Bernoulli numbers,
/// factorials, harmonic prefix tables) are append-only and never mutate a
/// stored entry. A session is single-owner: concurrent use requires either
/// independent sessions or external synchronization.
///
/// Members returning const references return them into the caches. Such a
/// reference stays valid only until a later call grows the same cache
/// (the backing vector may reallocate); copy the value if it must outlive
/// further session calls, and never combine two such calls in one
/// expression unless the cache is already warm.
class ExactSession {
 public:
  /// C(a, b). Returns 0 when b < 0 or b > a.
  BigInt binomial(unsigned long a, long b) const;

  /// Bernoulli number in the plus convention: B_k^+ = (-1)^k B_k, so
  /// B_1^+ = +1/2.
  const BigRat& bernoulli_plus(unsigned long k);

  /// H_n^{(m)} = sum_{k=1..n} k^{-m}, exactly. H_0^{(m)} = 0. A
  /// nonpositive m sums positive powers of k.
  const BigRat& harmonic_exact(unsigned long n, long m);

  /// n!
  const BigInt& factorial(unsigned long n);

  /// Stirling cycle number [n choose-cycles 2]: 0 for n = 0, else
  /// (n-1)! * H_{n-1}, which is always an integer.
  BigInt stirling_cycle2(unsigned long n);

  /// Count of rational operations charged against this session. Cache hits
  /// charge nothing; the counter reflects work actually performed.
  std::uint64_t ops() const { return ops_; }
  void charge_ops(std::uint64_t k) { ops_ += k; }

 private:
  std::vector<BigRat> bernoulli_;
  std::vector<BigInt> factorials_;
  std::map<long, std::vector<BigRat>> harmonic_;  // order -> prefix sums
  std::uint64_t ops_ = 0;
};

}  // namespace harmsum
