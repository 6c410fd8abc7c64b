// Copyright 2026 The harmsum Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/exact.hpp"
#include "harmsum/numbers.hpp"

namespace hs = harmsum;

TEST_CASE("binomial coefficients") {
  hs::ExactSession session;
  CHECK(session.binomial(5, 2) == hs::BigInt(10));
  CHECK(session.binomial(7, 0) == hs::BigInt(1));
  CHECK(session.binomial(7, 7) == hs::BigInt(1));
  CHECK(session.binomial(4, 6) == hs::BigInt(0));
  CHECK(session.binomial(4, -1) == hs::BigInt(0));
  CHECK(session.binomial(40, 20) == hs::BigInt("137846528820"));

  // Pascal identity on a block of the triangle.
  for (unsigned long r = 1; r <= 25; ++r) {
    for (long c = 0; c <= static_cast<long>(r); ++c) {
      CHECK(session.binomial(r, c) ==
            session.binomial(r - 1, c - 1) + session.binomial(r - 1, c));
    }
  }
}

TEST_CASE("Bernoulli numbers with positive B_1 convention") {
  hs::ExactSession session;
  const std::vector<hs::BigRat> expected = {
      hs::make_rat(1, 1),      hs::make_rat(1, 2),   hs::make_rat(1, 6),
      hs::make_rat(0, 1),      hs::make_rat(-1, 30), hs::make_rat(0, 1),
      hs::make_rat(1, 42),     hs::make_rat(0, 1),   hs::make_rat(-1, 30),
      hs::make_rat(0, 1),      hs::make_rat(5, 66),  hs::make_rat(0, 1),
      hs::make_rat(-691, 2730), hs::make_rat(0, 1),  hs::make_rat(7, 6),
      hs::make_rat(0, 1)};
  for (unsigned long k = 0; k < expected.size(); ++k) {
    CHECK(session.bernoulli_plus(k) == expected[k]);
  }

  // Defining recurrence: sum_{j=0..m} C(m+1, j) B_j = m + 1.
  for (unsigned long m = 0; m <= 12; ++m) {
    hs::BigRat acc(0);
    for (unsigned long j = 0; j <= m; ++j) {
      acc += hs::BigRat(session.binomial(m + 1, static_cast<long>(j))) *
             session.bernoulli_plus(j);
    }
    CHECK(acc == hs::BigRat(static_cast<long>(m) + 1));
  }

  // Odd Bernoulli numbers beyond B_1 vanish.
  for (unsigned long k = 3; k <= 15; k += 2) {
    CHECK(session.bernoulli_plus(k) == hs::BigRat(0));
  }
}

TEST_CASE("generalized harmonic numbers") {
  hs::ExactSession session;
  CHECK(session.harmonic_exact(0, 5) == hs::BigRat(0));
  CHECK(session.harmonic_exact(0, -3) == hs::BigRat(0));
  CHECK(session.harmonic_exact(3, 1) == hs::make_rat(11, 6));
  CHECK(session.harmonic_exact(4, 1) == hs::make_rat(25, 12));
  CHECK(session.harmonic_exact(4, 2) == hs::make_rat(205, 144));
  CHECK(session.harmonic_exact(3, -1) == hs::BigRat(6));
  CHECK(session.harmonic_exact(5, -2) == hs::BigRat(55));
  CHECK(session.harmonic_exact(2, 3) == hs::make_rat(9, 8));

  // Telescoping: H_n^{(m)} - H_{n-1}^{(m)} = n^{-m}.
  for (long m = -5; m <= 5; ++m) {
    hs::BigRat running(0);
    for (unsigned long n = 1; n <= 200; ++n) {
      const hs::BigInt k(static_cast<long>(n));
      running += m >= 0
                     ? hs::make_rat(1, hs::ipow(k, static_cast<unsigned long>(m)))
                     : hs::BigRat(hs::ipow(k, static_cast<unsigned long>(-m)));
      CHECK(session.harmonic_exact(n, m) == running);
    }
  }
}

TEST_CASE("factorials and Stirling cycle numbers") {
  hs::ExactSession session;
  CHECK(session.factorial(0) == hs::BigInt(1));
  CHECK(session.factorial(5) == hs::BigInt(120));
  CHECK(session.factorial(20) == hs::BigInt("2432902008176640000"));

  CHECK(session.stirling_cycle2(0) == hs::BigInt(0));
  CHECK(session.stirling_cycle2(1) == hs::BigInt(0));
  CHECK(session.stirling_cycle2(2) == hs::BigInt(1));
  CHECK(session.stirling_cycle2(3) == hs::BigInt(3));
  CHECK(session.stirling_cycle2(4) == hs::BigInt(11));
  CHECK(session.stirling_cycle2(5) == hs::BigInt(50));

  // Independent recurrence oracle: c(n, 2) = c(n-1, 1) + (n-1) c(n-1, 2)
  // with c(n, 1) = (n-1)!.
  std::map<unsigned long, hs::BigInt> cycle2;
  cycle2[1] = 0;
  for (unsigned long n = 2; n <= 20; ++n) {
    cycle2[n] = session.factorial(n - 2) +
                hs::BigInt(static_cast<long>(n - 1)) * cycle2[n - 1];
  }
  for (unsigned long n = 1; n <= 20; ++n) {
    CHECK(session.stirling_cycle2(n) == cycle2[n]);
  }

  // Closed identity: c(n, 2) = (n-1)! * H_{n-1}.
  for (unsigned long n = 1; n <= 20; ++n) {
    hs::BigRat lhs(session.stirling_cycle2(n));
    hs::BigRat rhs =
        hs::BigRat(session.factorial(n - 1)) * session.harmonic_exact(n - 1, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rational helpers") {
  CHECK(hs::make_rat(2, 4) == hs::make_rat(1, 2));
  CHECK(hs::make_rat(3, -6) == hs::make_rat(-1, 2));
  CHECK_THROWS_AS(hs::make_rat(1, 0), hs::DomainError);
  CHECK(hs::rat_str(hs::make_rat(-3, 4)) == "-3/4");
  CHECK(hs::rat_str(hs::BigRat(7)) == "7");
  CHECK(hs::rat_from_string("22/7") == hs::make_rat(22, 7));
  CHECK(hs::is_integer(hs::BigRat(9)));
  CHECK_FALSE(hs::is_integer(hs::make_rat(9, 2)));
  CHECK(hs::ipow(hs::BigInt(3), 4) == hs::BigInt(81));
  CHECK(hs::ipow(hs::BigInt(0), 0) == hs::BigInt(1));
  CHECK(hs::rpow(hs::make_rat(1, 2), 3) == hs::make_rat(1, 8));
}

TEST_CASE("operation counter is monotone") {
  hs::ExactSession session;
  const unsigned long long before = session.ops();
  (void)session.harmonic_exact(50, 2);
  const unsigned long long mid = session.ops();
  CHECK(mid > before);
  (void)session.bernoulli_plus(10);
  CHECK(session.ops() > mid);
}
