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

#include <cstddef>
#include <optional>
#include <vector>

#include "harmsum/engine.hpp"

namespace harmsum {

struct VerifyFailure {
  unsigned long n = 0;
  BigRat expected;  // direct summation
  BigRat got;       // closed-form evaluation
};

struct VerifyReport {
  SumSpec spec;
  unsigned long n_begin = 0;
  unsigned long n_end = 0;
  bool passed = false;
  std::optional<VerifyFailure> first_failure;
};

/// Exact term-by-term summation of the sum a spec describes; no closed
/// forms are involved. Throws DomainError for n = 0 on ClassicA/ClassicC
/// (their sums carry a 1/k weight and start at k = 1).
BigRat direct_sum(const SumSpec& spec, unsigned long n, ExactSession& session);

/// Smallest n direct_sum accepts: 1 for ClassicA/ClassicC, otherwise 0.
unsigned long first_admissible_n(const SumSpec& spec);

/// Compares evaluate(form, n) to direct_sum(spec, n) for every admissible
/// n <= n_max, stopping at the first mismatch.
VerifyReport verify_form(const ClosedForm& form, const SumSpec& spec,
                         unsigned long n_max, ExactSession& session);

/// Synthesizes the spec's closed form and checks it against direct_sum.
VerifyReport verify(Engine& engine, const SumSpec& spec, unsigned long n_max);

/// Checks the summation-by-parts identity
///   sum_{k=a}^{b-1} x_k y_k = s_{b-1} y_b - sum_{k=a}^{b-1} s_k (y_{k+1} - y_k)
/// with s_k = sum_{i=a}^{k} x_i, exactly. Sequences are indexed absolutely
/// (x_k is x[k]). Throws IndexError when an access would fall outside a
/// sequence and DomainError when a > b.
bool summation_by_parts_check(const std::vector<BigRat>& x,
                              const std::vector<BigRat>& y, std::size_t a,
                              std::size_t b);

}  // namespace harmsum
