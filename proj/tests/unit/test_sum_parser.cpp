// Copyright 2026 The harmsum Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/sum_parser.hpp"

namespace hs = harmsum;

namespace {

hs::SumSpec spec_of(const std::string& text) { return hs::parse_sum_spec(text); }

hs::SumSpec make(hs::Family f, unsigned long p,
                 std::optional<long> m = std::nullopt) {
  return hs::SumSpec{f, p, m};
}

}  // namespace

TEST_CASE("recognized sum shapes") {
  CHECK(spec_of("sum(k^2 * H(k)^2, k=0..n)") == make(hs::Family::S, 2));
  CHECK(spec_of("sum(H(k) * H(n-k), k=0..n)") == make(hs::Family::R, 0));
  CHECK(spec_of("sum(1/(k+1) * H(n-k), k=0..n)") ==
        make(hs::Family::ClassicD, 0));
  CHECK(spec_of("sum(1/k * H(k), k=1..n)") == make(hs::Family::ClassicA, 0));
  CHECK(spec_of("sum(1/(k+1) * H(k), k=0..n)") ==
        make(hs::Family::ClassicB, 0));
  CHECK(spec_of("sum(1/k * H(n-k), k=1..n)") == make(hs::Family::ClassicC, 0));

  CHECK(spec_of("sum(k, k=1..n)") == make(hs::Family::Power, 1));
  CHECK(spec_of("sum(k^7, k=1..n)") == make(hs::Family::Power, 7));
  CHECK(spec_of("sum(k^2, k=0..n)") == make(hs::Family::Power, 2));
  CHECK(spec_of("sum(k^0, k=1..n)") == make(hs::Family::Power, 0));
  CHECK(spec_of("sum(k * k^2, k=1..n)") == make(hs::Family::Power, 3));

  CHECK(spec_of("sum(H(k), k=0..n)") == make(hs::Family::F, 0, 1));
  CHECK(spec_of("sum(k^3 * H(k,4), k=0..n)") == make(hs::Family::F, 3, 4));
  CHECK(spec_of("sum(H(k,2) * k, k=0..n)") == make(hs::Family::F, 1, 2));

  CHECK(spec_of("sum(k^4 * H(n-k)^2, k=0..n)") == make(hs::Family::T, 4));
  CHECK(spec_of("sum(H(n-k) * H(n-k), k=0..n)") == make(hs::Family::T, 0));
  CHECK(spec_of("sum(H(k) * H(k), k=0..n)") == make(hs::Family::S, 0));
  CHECK(spec_of("sum(k * H(n-k) * H(k), k=0..n)") == make(hs::Family::R, 1));
}

TEST_CASE("range handling") {
  // The k = 0 term vanishes in these families, so both ranges are the same sum.
  CHECK(spec_of("sum(k * H(k)^2, k=1..n)") ==
        spec_of("sum(k * H(k)^2, k=0..n)"));
  CHECK(spec_of("sum(H(k,3), k=1..n)") == spec_of("sum(H(k,3), k=0..n)"));
  CHECK(spec_of("sum(H(k) * H(n-k), k=1..n)") ==
        spec_of("sum(H(k) * H(n-k), k=0..n)"));
  CHECK(spec_of("sum(k * H(n-k)^2, k=1..n)") ==
        spec_of("sum(k * H(n-k)^2, k=0..n)"));

  // Where the k = 0 term is nonzero, the range matters.
  CHECK_THROWS_AS(spec_of("sum(k^0, k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(n-k)^2, k=1..n)"), hs::UnsupportedSum);

  // Weights are tied to the range that avoids dividing by zero.
  CHECK_THROWS_AS(spec_of("sum(1/k * H(k), k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(1/(k+1) * H(k), k=1..n)"), hs::UnsupportedSum);
}

TEST_CASE("unsupported shapes") {
  CHECK_THROWS_AS(spec_of("sum(H(k)^3, k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(k)^0, k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(k) * H(k) * H(n-k), k=0..n)"),
                  hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(n-k), k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(k * H(n-k,2), k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(k,2)^2, k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(k,2) * H(k), k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(H(k,0), k=0..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(1/k * 1/k, k=1..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(1/k * k, k=1..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(1/k * H(k,2), k=1..n)"), hs::UnsupportedSum);
  CHECK_THROWS_AS(spec_of("sum(1/k * H(k) * H(k), k=1..n)"),
                  hs::UnsupportedSum);

  // The message names the supported shapes.
  try {
    spec_of("sum(H(k)^3, k=0..n)");
    FAIL("expected UnsupportedSum");
  } catch (const hs::UnsupportedSum& e) {
    CHECK(std::string(e.what()).find("supported shapes") != std::string::npos);
  }
}

TEST_CASE("malformed sums are syntax errors") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      hs::parse_sum_spec(text);
    } catch (const hs::SyntaxError& e) {
      return e.offset();
    }
    FAIL("expected SyntaxError for " << text);
    return SIZE_MAX;
  };

  CHECK(offset_of("total(k, k=1..n)") == 0);
  CHECK(offset_of("sum(q, k=1..n)") == 4);
  CHECK(offset_of("sum(k; k=1..n)") == 5);
  CHECK(offset_of("sum(k, k=2..n)") == 9);
  CHECK(offset_of("sum(k, k=1..m)") == 12);
  CHECK(offset_of("sum(k, k=1..n) extra") == 15);
  CHECK(offset_of("sum(H(j), k=0..n)") == 6);
  CHECK(offset_of("sum(1*k, k=1..n)") == 5);
  CHECK(offset_of("sum(k^, k=1..n)") == 6);
  CHECK(offset_of("sum()") == 4);
}

TEST_CASE("canonical expressions round-trip") {
  std::vector<hs::SumSpec> specs = {
      make(hs::Family::Power, 0),     make(hs::Family::Power, 1),
      make(hs::Family::Power, 5),     make(hs::Family::F, 0, 1),
      make(hs::Family::F, 2, 1),      make(hs::Family::F, 3, 4),
      make(hs::Family::R, 0),         make(hs::Family::R, 3),
      make(hs::Family::S, 0),         make(hs::Family::S, 2),
      make(hs::Family::T, 0),         make(hs::Family::T, 5),
      make(hs::Family::ClassicA, 0),  make(hs::Family::ClassicB, 0),
      make(hs::Family::ClassicC, 0),  make(hs::Family::ClassicD, 0),
  };
  for (const hs::SumSpec& spec : specs) {
    std::string text = hs::canonical_sum_expression(spec);
    CAPTURE(text);
    CHECK(hs::parse_sum_spec(text) == spec);
    // LaTeX display strings exist for every family.
    CHECK_FALSE(hs::latex_sum_expression(spec).empty());
  }
}

TEST_CASE("whitespace insensitivity") {
  CHECK(spec_of("sum( k^2*H(k)^2 ,k=0..n )") == make(hs::Family::S, 2));
  CHECK(spec_of("  sum ( 1/(k+1) * H(n-k) , k = 0 .. n )  ") ==
        make(hs::Family::ClassicD, 0));
  CHECK(spec_of("sum(k^2\t*\tH(k,3), k=0..n)") == make(hs::Family::F, 2, 3));
}
