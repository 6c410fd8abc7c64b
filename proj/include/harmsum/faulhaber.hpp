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

#include "harmsum/exact.hpp"
#include "harmsum/polynomial.hpp"

namespace harmsum {

/// The power-sum polynomial: faulhaber_polynomial(p) evaluated at integer x
/// equals sum_{k=1..x} k^p. Built from Bernoulli-plus numbers as
/// (1/(p+1)) sum_{k=1..p+1} C(p+1,k) B^+_{p-k+1} x^k; degree p+1, zero
/// constant term.
Polynomial faulhaber_polynomial(ExactSession& session, unsigned long p);

}  // namespace harmsum
