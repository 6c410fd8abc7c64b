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

#include "harmsum/oracle.hpp"

#include <string>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

// k^p as a rational; 0^0 = 1 (the k = 0, p = 0 term of sum_{k=0}^n
// conventions, always multiplied by a vanishing harmonic factor here).
BigRat kpow(unsigned long k, unsigned long p, ExactSession& session) {
  session.charge_ops(1);
  return BigRat(ipow(BigInt(k), p));
}

void require_positive_n(const SumSpec& spec, unsigned long n) {
  if (n == 0) {
    throw DomainError(std::string("family ") + std::string(family_name(spec.family)) +
                      " requires n >= 1 (its sum starts at k = 1 with a 1/k weight)");
  }
}

}  // namespace

unsigned long first_admissible_n(const SumSpec& spec) {
  return spec.family == Family::ClassicA || spec.family == Family::ClassicC ? 1 : 0;
}

BigRat direct_sum(const SumSpec& spec, unsigned long n, ExactSession& session) {
  BigRat acc(0);
  switch (spec.family) {
    case Family::Power:
      // sum_{k=1..n} k^p is the order -p harmonic prefix sum by definition.
      return session.harmonic_exact(n, -static_cast<long>(spec.p));
    case Family::F: {
      long m = spec.m.value();
      for (unsigned long k = 0; k <= n; ++k) {
        acc += kpow(k, spec.p, session) * session.harmonic_exact(k, m);
        session.charge_ops(2);
      }
      return acc;
    }
    case Family::R:
      session.harmonic_exact(n, 1);  // grow the table once; the references below stay valid
      for (unsigned long k = 0; k <= n; ++k) {
        acc += kpow(k, spec.p, session) * session.harmonic_exact(k, 1) *
               session.harmonic_exact(n - k, 1);
        session.charge_ops(3);
      }
      return acc;
    case Family::S:
      session.harmonic_exact(n, 1);
      for (unsigned long k = 0; k <= n; ++k) {
        const BigRat& h = session.harmonic_exact(k, 1);
        acc += kpow(k, spec.p, session) * h * h;
        session.charge_ops(3);
      }
      return acc;
    case Family::T:
      session.harmonic_exact(n, 1);
      for (unsigned long k = 0; k <= n; ++k) {
        const BigRat& h = session.harmonic_exact(n - k, 1);
        acc += kpow(k, spec.p, session) * h * h;
        session.charge_ops(3);
      }
      return acc;
    case Family::ClassicA:
      require_positive_n(spec, n);
      for (unsigned long k = 1; k <= n; ++k) {
        acc += session.harmonic_exact(k, 1) / BigRat(k);
        session.charge_ops(2);
      }
      return acc;
    case Family::ClassicB:
      for (unsigned long k = 0; k <= n; ++k) {
        acc += session.harmonic_exact(k, 1) / BigRat(k + 1);
        session.charge_ops(2);
      }
      return acc;
    case Family::ClassicC:
      require_positive_n(spec, n);
      for (unsigned long k = 1; k <= n; ++k) {
        acc += session.harmonic_exact(n - k, 1) / BigRat(k);
        session.charge_ops(2);
      }
      return acc;
    case Family::ClassicD:
      for (unsigned long k = 0; k <= n; ++k) {
        acc += session.harmonic_exact(n - k, 1) / BigRat(k + 1);
        session.charge_ops(2);
      }
      return acc;
  }
  throw DomainError("unknown family");
}

VerifyReport verify_form(const ClosedForm& form, const SumSpec& spec,
                         unsigned long n_max, ExactSession& session) {
  VerifyReport report;
  report.spec = spec;
  report.n_begin = first_admissible_n(spec);
  report.n_end = n_max;
  report.passed = true;
  for (unsigned long n = report.n_begin; n <= n_max; ++n) {
    BigRat expected = direct_sum(spec, n, session);
    BigRat got = form.evaluate(session, n);
    if (expected != got) {
      report.passed = false;
      report.first_failure = VerifyFailure{n, std::move(expected), std::move(got)};
      break;
    }
  }
  return report;
}

VerifyReport verify(Engine& engine, const SumSpec& spec, unsigned long n_max) {
  return verify_form(engine.synthesize(spec), spec, n_max, engine.session());
}

bool summation_by_parts_check(const std::vector<BigRat>& x,
                              const std::vector<BigRat>& y, std::size_t a,
                              std::size_t b) {
  if (a > b) throw DomainError("summation range with a > b");
  auto at = [](const std::vector<BigRat>& seq, std::size_t i, const char* name) -> const BigRat& {
    if (i >= seq.size()) {
      throw IndexError(std::string(name) + "[" + std::to_string(i) + "] is outside the sequence");
    }
    return seq[i];
  };

  BigRat lhs(0);
  for (std::size_t k = a; k < b; ++k) {
    lhs += at(x, k, "x") * at(y, k, "y");
  }

  // s_k = sum_{i=a..k} x_i, accumulated in step with the right-hand side.
  BigRat rhs(0);
  BigRat s(0);
  for (std::size_t k = a; k < b; ++k) {
    s += at(x, k, "x");
    rhs -= s * (at(y, k + 1, "y") - at(y, k, "y"));
  }
  if (b > a) {
    rhs += s * at(y, b, "y");  // s now holds s_{b-1}
  }
  return lhs == rhs;
}

}  // namespace harmsum
