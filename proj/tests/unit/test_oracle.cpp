// Copyright 2026 The harmsum Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/oracle.hpp"

namespace hs = harmsum;

TEST_CASE("direct summation of every family") {
  hs::ExactSession session;

  CHECK(hs::direct_sum({hs::Family::Power, 2, std::nullopt}, 3, session) ==
        hs::BigRat(14));
  CHECK(hs::direct_sum({hs::Family::F, 1, 1}, 3, session) ==
        hs::make_rat(19, 2));
  CHECK(hs::direct_sum({hs::Family::R, 0, std::nullopt}, 3, session) ==
        hs::BigRat(3));
  CHECK(hs::direct_sum({hs::Family::S, 0, std::nullopt}, 2, session) ==
        hs::make_rat(13, 4));
  CHECK(hs::direct_sum({hs::Family::T, 1, std::nullopt}, 1, session) ==
        hs::BigRat(0));
  CHECK(hs::direct_sum({hs::Family::ClassicA, 0, std::nullopt}, 3, session) ==
        hs::make_rat(85, 36));
  CHECK(hs::direct_sum({hs::Family::ClassicC, 0, std::nullopt}, 3, session) ==
        hs::BigRat(2));

  // n = 0 edge: every sum that admits it is empty or zero.
  for (hs::Family f : {hs::Family::Power, hs::Family::F, hs::Family::R,
                       hs::Family::S, hs::Family::T, hs::Family::ClassicB,
                       hs::Family::ClassicD}) {
    hs::SumSpec spec{f, 1, f == hs::Family::F ? std::optional<long>(1)
                                              : std::nullopt};
    CHECK(hs::first_admissible_n(spec) == 0);
    CHECK(hs::direct_sum(spec, 0, session) == hs::BigRat(0));
  }

  // The 1/k-weighted sums start at n = 1.
  for (hs::Family f : {hs::Family::ClassicA, hs::Family::ClassicC}) {
    hs::SumSpec spec{f, 0, std::nullopt};
    CHECK(hs::first_admissible_n(spec) == 1);
    CHECK_THROWS_AS(hs::direct_sum(spec, 0, session), hs::DomainError);
  }
}

TEST_CASE("convolution symmetry of the direct sums") {
  // sum k^0 H_k H_{n-k} is symmetric under k -> n-k, and the reversed-square
  // sum is the k -> n-k reading of the square sum.
  hs::ExactSession session;
  for (unsigned long n = 0; n <= 40; ++n) {
    hs::BigRat forward(0), backward(0), weighted(0), mirrored(0);
    session.harmonic_exact(n, 1);
    for (unsigned long k = 0; k <= n; ++k) {
      hs::BigRat hk = session.harmonic_exact(k, 1);
      hs::BigRat hnk = session.harmonic_exact(n - k, 1);
      forward += hk * hnk;
      backward += hnk * hk;
      weighted += hs::BigRat(k) * hnk * hnk;
      mirrored += hs::BigRat(n - k) * hk * hk;
    }
    CHECK(forward == backward);
    CHECK(hs::direct_sum({hs::Family::R, 0, std::nullopt}, n, session) ==
          forward);
    CHECK(hs::direct_sum({hs::Family::T, 1, std::nullopt}, n, session) ==
          weighted);
    CHECK(weighted == mirrored);
  }
}

TEST_CASE("verification of synthesized forms") {
  hs::ExactSession session;
  hs::Engine engine(session);

  hs::VerifyReport r1 = hs::verify(engine, {hs::Family::T, 5, std::nullopt}, 30);
  CHECK(r1.passed);
  CHECK(r1.n_begin == 0);
  CHECK(r1.n_end == 30);
  CHECK_FALSE(r1.first_failure.has_value());

  CHECK(hs::verify(engine, {hs::Family::Power, 10, std::nullopt}, 100).passed);
  CHECK(hs::verify(engine, {hs::Family::R, 0, std::nullopt}, 0).passed);
  CHECK(hs::verify(engine, {hs::Family::ClassicA, 0, std::nullopt}, 25).passed);
  CHECK(hs::verify(engine, {hs::Family::F, 3, 4}, 25).passed);
}

TEST_CASE("verification pinpoints the first mismatch") {
  hs::ExactSession session;
  hs::Engine engine(session);
  hs::SumSpec spec{hs::Family::S, 1, std::nullopt};

  // Corrupt the constant coefficient: correct at no n.
  hs::ClosedForm wrong = engine.synthesize(spec) + hs::ClosedForm::one();
  hs::VerifyReport report = hs::verify_form(wrong, spec, 10, session);
  CHECK_FALSE(report.passed);
  REQUIRE(report.first_failure.has_value());
  CHECK(report.first_failure->n == 0);
  CHECK(report.first_failure->got ==
        report.first_failure->expected + hs::BigRat(1));

  // A corruption proportional to n(n-1)(n-2) first shows at n = 3.
  hs::ClosedForm late = engine.synthesize(spec) +
                        hs::ClosedForm::from_rational(hs::RationalFunction(
                            hs::Polynomial(std::vector<hs::BigRat>{
                                hs::BigRat(0), hs::BigRat(2), hs::BigRat(-3),
                                hs::BigRat(1)})));
  hs::VerifyReport late_report = hs::verify_form(late, spec, 10, session);
  CHECK_FALSE(late_report.passed);
  REQUIRE(late_report.first_failure.has_value());
  CHECK(late_report.first_failure->n == 3);
}

TEST_CASE("summation by parts identity") {
  // Constant sequences: both sides collapse to (b-a) * y_b.
  std::vector<hs::BigRat> ones(8, hs::BigRat(1));
  CHECK(hs::summation_by_parts_check(ones, ones, 0, 3));
  CHECK(hs::summation_by_parts_check(ones, ones, 2, 7));
  CHECK(hs::summation_by_parts_check(ones, ones, 4, 4));  // empty range

  // Harmonic prefix data.
  hs::ExactSession session;
  std::vector<hs::BigRat> h;
  for (unsigned long k = 0; k <= 11; ++k) {
    h.push_back(session.harmonic_exact(k, 1));
  }
  CHECK(hs::summation_by_parts_check(h, h, 0, 10));
  CHECK(hs::summation_by_parts_check(h, h, 3, 11));

  // Random exact sequences.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> v(-9, 9);
  std::uniform_int_distribution<unsigned long> d(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<hs::BigRat> x, y;
    for (int i = 0; i < 12; ++i) {
      x.push_back(hs::make_rat(v(rng), d(rng)));
      y.push_back(hs::make_rat(v(rng), d(rng)));
    }
    unsigned long a = d(rng) - 1;
    unsigned long b = std::min<unsigned long>(a + d(rng), x.size() - 1);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(hs::summation_by_parts_check(x, y, a, b));
  }

  // Domain and index errors.
  CHECK_THROWS_AS(hs::summation_by_parts_check(ones, ones, 5, 2),
                  hs::DomainError);
  std::vector<hs::BigRat> short_y(3, hs::BigRat(1));
  CHECK_THROWS_AS(hs::summation_by_parts_check(ones, short_y, 0, 3),
                  hs::IndexError);  // needs y[3]
  CHECK_THROWS_AS(hs::summation_by_parts_check(short_y, ones, 0, 5),
                  hs::IndexError);  // needs x[3], x[4]
}
