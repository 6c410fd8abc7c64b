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

#include <string_view>

#include "harmsum/closed_form.hpp"

namespace harmsum {

/// Parses a closed-form expression in n and returns its canonical form.
///
/// Accepts both the plain renderer dialect ("1/6*n*(n+1)*(2*n+1)",
/// "H(n+1,2)", "H(n+1)^2") and the LaTeX dialect ("\frac{1}{6}n(n+1)(2n+1)",
/// "H_{n+1}^{(2)}", "H_{n+1}^2"), with implicit multiplication by
/// adjacency. Harmonic arguments may be n or n+1 and orders may be any
/// integer; the result is shift-normalized like any other input.
///
/// Division is only defined by subexpressions free of harmonic symbols.
/// Throws SyntaxError (with byte offset) on malformed input.
ClosedForm parse_closed_form(std::string_view text, ExactSession& session);

}  // namespace harmsum
