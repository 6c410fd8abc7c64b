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

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmsum/engine.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/oracle.hpp"
#include "harmsum/render.hpp"
#include "harmsum/sum_parser.hpp"

namespace {

using harmsum::ClosedForm;
using harmsum::Engine;
using harmsum::ExactSession;
using harmsum::Family;
using harmsum::RenderFormat;
using harmsum::SumSpec;

const std::vector<std::string> kFormats = {"plain", "latex", "json"};
const std::vector<std::string> kFamilies = {"Power",    "F",        "R",
                                            "S",        "T",        "ClassicA",
                                            "ClassicB", "ClassicC", "ClassicD"};

nlohmann::ordered_json spec_json(const SumSpec& spec, const ClosedForm& form) {
  nlohmann::ordered_json out;
  out["family"] = std::string(family_name(spec.family));
  out["p"] = spec.p;
  if (spec.m.has_value()) out["m"] = *spec.m;
  out["sum"] = canonical_sum_expression(spec);
  out["closedForm"] =
      nlohmann::ordered_json::parse(render(form, RenderFormat::Json));
  return out;
}

int cmd_closed_form(const std::string& expr, const std::string& format) {
  SumSpec spec = harmsum::parse_sum_spec(expr);
  ExactSession session;
  Engine engine(session);
  ClosedForm form = engine.synthesize(spec);
  RenderFormat fmt = harmsum::render_format_from_name(format);
  if (fmt == RenderFormat::Json) {
    std::cout << spec_json(spec, form).dump() << "\n";
  } else {
    std::cout << render(form, fmt) << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& expr, unsigned long n) {
  SumSpec spec = harmsum::parse_sum_spec(expr);
  ExactSession session;
  Engine engine(session);
  std::cout << harmsum::rat_str(engine.synthesize(spec).evaluate(session, n)) << "\n";
  return 0;
}

int cmd_verify(const std::string& expr, unsigned long max_n, bool corrupt) {
  SumSpec spec = harmsum::parse_sum_spec(expr);
  ExactSession session;
  Engine engine(session);
  ClosedForm form = engine.synthesize(spec);
  if (corrupt) form = form + ClosedForm::one();  // test hook: force a mismatch
  harmsum::VerifyReport report = harmsum::verify_form(form, spec, max_n, session);
  std::string name = canonical_sum_expression(spec);
  if (report.passed) {
    std::cout << "pass: " << name << " matches direct summation for n = "
              << report.n_begin << ".." << report.n_end << "\n";
    return 0;
  }
  const harmsum::VerifyFailure& f = *report.first_failure;
  std::cout << "fail: " << name << " diverges at n = " << f.n
            << ": direct summation gives " << harmsum::rat_str(f.expected)
            << ", closed form gives " << harmsum::rat_str(f.got) << "\n";
  return 1;
}

int cmd_table(const std::optional<std::string>& family, unsigned long max_p,
              long m, const std::string& format) {
  std::vector<Family> families;
  if (family.has_value()) {
    families.push_back(harmsum::family_from_name(*family));
  } else {
    for (const std::string& name : kFamilies) {
      families.push_back(harmsum::family_from_name(name));
    }
  }

  ExactSession session;
  Engine engine(session);
  RenderFormat fmt = harmsum::render_format_from_name(format);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();

  for (Family f : families) {
    bool classic = f == Family::ClassicA || f == Family::ClassicB ||
                   f == Family::ClassicC || f == Family::ClassicD;
    unsigned long p_last = classic ? 0 : max_p;
    for (unsigned long p = 0; p <= p_last; ++p) {
      SumSpec spec{f, p, f == Family::F ? std::optional<long>(m) : std::nullopt};
      ClosedForm form = engine.synthesize(spec);
      switch (fmt) {
        case RenderFormat::Plain:
          std::cout << canonical_sum_expression(spec) << " = "
                    << render(form, fmt) << "\n";
          break;
        case RenderFormat::Latex:
          std::cout << latex_sum_expression(spec) << " = " << render(form, fmt)
                    << "\n";
          break;
        case RenderFormat::Json:
          rows.push_back(spec_json(spec, form));
          break;
      }
    }
  }
  if (fmt == RenderFormat::Json) {
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& family, unsigned long p, long m, unsigned long n) {
  Family f = harmsum::family_from_name(family);
  SumSpec spec{f, p, f == Family::F ? std::optional<long>(m) : std::nullopt};
  using Clock = std::chrono::steady_clock;
  auto us = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
  };

  ExactSession closed_session;
  Engine engine(closed_session);
  auto t0 = Clock::now();
  ClosedForm form = engine.synthesize(spec);
  auto t1 = Clock::now();
  harmsum::BigRat closed_value = form.evaluate(closed_session, n);
  auto t2 = Clock::now();

  ExactSession direct_session;
  auto t3 = Clock::now();
  harmsum::BigRat direct_value = harmsum::direct_sum(spec, n, direct_session);
  auto t4 = Clock::now();

  std::cout << canonical_sum_expression(spec) << ", n = " << n << "\n";
  std::cout << "closed form : synthesis " << us(t0, t1) << " us, evaluation "
            << us(t1, t2) << " us, " << closed_session.ops()
            << " rational ops\n";
  std::cout << "direct sum  : " << us(t3, t4) << " us, "
            << direct_session.ops() << " rational ops\n";
  std::string value = harmsum::rat_str(direct_value);
  if (value.size() <= 60) {
    std::cout << "value       : " << value << "\n";
  } else {
    std::cout << "value       : " << direct_value.get_num().get_str().size()
              << "-digit numerator / " << direct_value.get_den().get_str().size()
              << "-digit denominator\n";
  }
  if (closed_value != direct_value) {
    std::cout << "values equal: NO — closed form gives "
              << harmsum::rat_str(closed_value) << "\n";
    return 1;
  }
  std::cout << "values equal: yes\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closed forms for finite sums of powers times harmonic numbers"};
  app.require_subcommand(1);

  std::string cf_expr, cf_format = "plain";
  auto* cf = app.add_subcommand("closed-form", "Print the closed form of a sum");
  cf->add_option("expr", cf_expr, "sum expression, e.g. \"sum(k * H(k)^2, k=0..n)\"")
      ->required();
  cf->add_option("--format", cf_format, "output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();

  std::string ev_expr;
  unsigned long ev_n = 0;
  auto* ev = app.add_subcommand("eval", "Evaluate a sum exactly at a given n");
  ev->add_option("expr", ev_expr, "sum expression")->required();
  ev->add_option("--n", ev_n, "evaluation point (nonnegative)")->required();

  std::string vf_expr;
  unsigned long vf_max_n = 30;
  bool vf_corrupt = false;
  auto* vf = app.add_subcommand("verify",
                                "Check a closed form against direct summation");
  vf->add_option("expr", vf_expr, "sum expression")->required();
  vf->add_option("--max-n", vf_max_n, "verify for all admissible n up to this bound")
      ->capture_default_str();
  vf->add_flag("--corrupt-form", vf_corrupt)->group("");  // test hook

  std::optional<std::string> tb_family;
  unsigned long tb_max_p = 5;
  long tb_m = 1;
  std::string tb_format = "plain";
  auto* tb = app.add_subcommand("table", "Print closed forms for p = 0..max-p");
  tb->add_option("--family", tb_family, "restrict to one family")
      ->check(CLI::IsMember(kFamilies));
  tb->add_option("--max-p", tb_max_p, "largest power of k")->capture_default_str();
  tb->add_option("--m", tb_m, "harmonic order for family F")->capture_default_str();
  tb->add_option("--format", tb_format, "output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();

  std::string bc_family;
  unsigned long bc_p = 0;
  long bc_m = 1;
  unsigned long bc_n = 1000;
  auto* bc = app.add_subcommand(
      "bench", "Compare closed-form evaluation against direct summation");
  bc->add_option("--family", bc_family, "sum family")
      ->check(CLI::IsMember(kFamilies))
      ->required();
  bc->add_option("--p", bc_p, "power of k")->capture_default_str();
  bc->add_option("--m", bc_m, "harmonic order for family F")->capture_default_str();
  bc->add_option("--n", bc_n, "evaluation point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cf->parsed()) return cmd_closed_form(cf_expr, cf_format);
    if (ev->parsed()) return cmd_eval(ev_expr, ev_n);
    if (vf->parsed()) return cmd_verify(vf_expr, vf_max_n, vf_corrupt);
    if (tb->parsed()) return cmd_table(tb_family, tb_max_p, tb_m, tb_format);
    if (bc->parsed()) return cmd_bench(bc_family, bc_p, bc_m, bc_n);
  } catch (const harmsum::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const harmsum::UnsupportedSum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const harmsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
