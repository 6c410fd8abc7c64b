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

#include <string>
#include <string_view>

#include "harmsum/closed_form.hpp"

namespace harmsum {

enum class RenderFormat { Plain, Latex, Json };

/// Parses a --format flag value. Throws DomainError on anything else.
RenderFormat render_format_from_name(std::string_view name);

/// Deterministic text for a canonical form.
///
/// Terms follow the monomial storage order (harmonic degree descending,
/// then lexicographic). Each coefficient is printed as a factored-out
/// rational constant times a product of primitive integer-coefficient
/// polynomial factors (split at rational roots), e.g. the p = 2 power sum
/// renders as "1/6*n*(n+1)*(2*n+1)". The empty form renders as "0".
///
/// Json emits {"terms": [{"orders": [...], "num": [...], "den": [...]}]}
/// with coefficient polynomials listed low-to-high degree as exact "p/q"
/// strings.
std::string render(const ClosedForm& f, RenderFormat format);

/// The factored coefficient notation above, for a bare polynomial.
std::string render_polynomial(const Polynomial& p, RenderFormat format);

}  // namespace harmsum
