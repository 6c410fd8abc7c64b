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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "harmsum/closed_form.hpp"

namespace harmsum {

/// The supported sum families:
///   Power    : sum_{k=1..n} k^p
///   F        : sum_{k=0..n} k^p H_k^{(m)}
///   R        : sum_{k=0..n} k^p H_k H_{n-k}
///   S        : sum_{k=0..n} k^p H_k^2
///   T        : sum_{k=0..n} k^p H_{n-k}^2
///   ClassicA : sum_{k=1..n} (1/k) H_k
///   ClassicB : sum_{k=0..n} (1/(k+1)) H_k
///   ClassicC : sum_{k=1..n} (1/k) H_{n-k}
///   ClassicD : sum_{k=0..n} (1/(k+1)) H_{n-k}
enum class Family { Power, F, R, S, T, ClassicA, ClassicB, ClassicC, ClassicD };

std::string_view family_name(Family family);
/// Throws DomainError for an unknown name.
Family family_from_name(std::string_view name);

/// Structured description of a target sum. p is the power of k; m is the
/// harmonic order and is present exactly for family F (m >= 1).
struct SumSpec {
  Family family = Family::Power;
  unsigned long p = 0;
  std::optional<long> m;

  bool operator==(const SumSpec& rhs) const = default;
};

/// Builds canonical closed forms for every family, memoizing the recursive
/// ones. Memo entries are canonical ClosedForms and are never mutated once
/// stored; an Engine is single-owner while synthesizing (produced forms are
/// immutable and freely shareable).
class Engine {
 public:
  explicit Engine(ExactSession& session) : session_(session) {}

  ExactSession& session() { return session_; }

  /// sum_{k=1..n} k^p as a pure polynomial form; degree p+1, no constant term.
  const ClosedForm& faulhaber_closed(unsigned long p);

  /// sum_{k=0..n} k^p H_k^{(m)} for m >= 1 (the master formula F(n,p,m)).
  const ClosedForm& power_harmonic_sum(unsigned long p, long m);

  /// The four reciprocal-weight identities (families ClassicA..ClassicD).
  ClosedForm classic_identity(Family which);

  /// sum_{k=0..n} k^p H_k H_{n-k} (convolution family R).
  const ClosedForm& conv_power_sum(unsigned long p);

  /// sum_{k=0..n} k^p H_k^2 (square family S).
  const ClosedForm& square_power_sum(unsigned long p);

  /// sum_{k=0..n} k^p H_{n-k}^2 (reversed square family T), assembled by
  /// binomial combination of memoized S forms.
  ClosedForm reversed_square_power_sum(unsigned long p);

  /// Dispatches on spec.family. Throws DomainError when spec violates its
  /// invariants (e.g. missing or out-of-range m for family F).
  ClosedForm synthesize(const SumSpec& spec);

 private:
  ExactSession& session_;
  std::map<unsigned long, ClosedForm> faulhaber_;
  std::map<unsigned long, ClosedForm> conv_;
  std::map<unsigned long, ClosedForm> square_;
  std::map<std::pair<unsigned long, long>, ClosedForm> master_;
};

}  // namespace harmsum
