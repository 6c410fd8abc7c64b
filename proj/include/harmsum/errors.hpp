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
#include <stdexcept>
#include <string>

namespace harmsum {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A product would exceed harmonic degree 2.
class DegreeOverflow : public Error {
 public:
  explicit DegreeOverflow(const std::string& what) : Error(what) {}
};

/// A coefficient denominator vanishes at the requested evaluation point.
class PoleAtN : public Error {
 public:
  explicit PoleAtN(const std::string& what) : Error(what) {}
};

/// Malformed input text. Carries the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed sum that falls outside the supported families.
class UnsupportedSum : public Error {
 public:
  explicit UnsupportedSum(const std::string& what) : Error(what) {}
};

/// Argument outside an operation's domain (e.g. n = 0 where n >= 1 is required).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Sequence access outside the declared index range.
class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error(what) {}
};

}  // namespace harmsum
