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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmsum/engine.hpp"

namespace harmsum {

/// Surface form of a sum over the bound variable k, before family matching:
/// an accumulated power of k, at most one reciprocal weight, the harmonic
/// factors (with H(...)^2 expanded to two entries), and the range.
struct SumExprAst {
  struct HarmonicFactor {
    bool reversed = false;  // argument n-k instead of k
    unsigned long order = 1;
  };

  unsigned long p = 0;
  std::optional<int> weight;  // 1 for 1/k, 2 for 1/(k+1)
  std::vector<HarmonicFactor> harmonics;
  int range_start = 0;  // 0 or 1
};

/// Grammar:
///   sum      := "sum" "(" term "," range ")"
///   term     := factor { "*" factor }
///   factor   := "k" ["^" INT] | "1/k" | "1/(k+1)" | harm ["^" INT]
///   harm     := "H(" arg ["," INT] ")"
///   arg      := "k" | "n-k"
///   range    := "k=0..n" | "k=1..n"
/// Whitespace is insignificant between tokens. Throws SyntaxError (with
/// byte offset) on malformed input.
SumExprAst parse_sum_ast(std::string_view text);

/// Parses and pattern-matches onto a supported family. Factor order is
/// irrelevant. Throws SyntaxError for malformed input and UnsupportedSum
/// (listing the supported shapes) for well-formed sums outside the
/// families, including weight/range mismatches that would divide by zero.
SumSpec parse_sum_spec(std::string_view text);

/// A canonical expression string that parses back to the same SumSpec.
std::string canonical_sum_expression(const SumSpec& spec);

/// The same sum in display LaTeX (for table output).
std::string latex_sum_expression(const SumSpec& spec);

/// One-line list of the supported shapes (used in UnsupportedSum messages).
std::string supported_shapes_text();

}  // namespace harmsum
