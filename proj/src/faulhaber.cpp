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

#include "harmsum/faulhaber.hpp"

namespace harmsum {

Polynomial faulhaber_polynomial(ExactSession& session, unsigned long p) {
  std::vector<BigRat> coeffs(p + 2, BigRat(0));
  BigRat scale = make_rat(1, BigInt(p + 1));
  for (unsigned long k = 1; k <= p + 1; ++k) {
    coeffs[k] = scale * BigRat(session.binomial(p + 1, static_cast<long>(k))) *
                session.bernoulli_plus(p - k + 1);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace harmsum
