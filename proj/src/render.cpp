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

#include "harmsum/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include <json.hpp>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

struct FactorAtom {
  Polynomial poly;  // primitive integer coefficients, positive leading
  unsigned long mult;
};

// Positive divisors, ascending. Gives up (empty result) past the trial
// division budget; the caller then leaves the polynomial unfactored.
std::vector<BigInt> divisors(const BigInt& x) {
  static const BigInt kBudget = BigInt("1000000000000");
  std::vector<BigInt> out;
  if (x > kBudget) return out;
  std::vector<BigInt> high;
  for (unsigned long d = 1;; ++d) {
    BigInt dd(d);
    if (dd * dd > x) break;
    if (mpz_divisible_ui_p(x.get_mpz_t(), d)) {
      out.push_back(dd);
      BigInt q = x / dd;
      if (q != dd) high.push_back(q);
    }
  }
  out.insert(out.end(), high.rbegin(), high.rend());
  return out;
}

Polynomial linear_factor(const BigInt& q, const BigInt& p) {
  // q*n - p, the primitive factor for the rational root p/q.
  return Polynomial(std::vector<BigRat>{BigRat(-p), BigRat(q)});
}

// Splits a primitive integer polynomial at its rational roots. The product
// of the returned atoms (with multiplicities) is the input.
std::vector<FactorAtom> factor_primitive(const Polynomial& input) {
  std::vector<FactorAtom> atoms;
  if (input.degree() < 1) return atoms;

  std::vector<BigRat> cs = input.coefficients();
  unsigned long zeros = 0;
  while (zeros < cs.size() && cs[zeros] == 0) ++zeros;
  if (zeros > 0) {
    atoms.push_back({Polynomial::variable(), zeros});
    cs.erase(cs.begin(), cs.begin() + static_cast<long>(zeros));
  }
  Polynomial rem(cs);

  while (rem.degree() >= 1) {
    BigInt a0 = abs(rem.coeff(0).get_num());
    BigInt ad = rem.leading().get_num();
    std::vector<BigInt> ps = divisors(a0);
    std::vector<BigInt> qs = divisors(ad);
    if (ps.empty() || qs.empty()) break;

    bool found = false;
    for (const BigInt& q : qs) {
      for (const BigInt& p : ps) {
        if (gcd(p, q) != 1) continue;
        for (int sign : {+1, -1}) {
          BigInt ps_signed = sign > 0 ? p : BigInt(-p);
          BigRat root = make_rat(ps_signed, q);
          if (rem.eval(root) != 0) continue;
          Polynomial factor = linear_factor(q, ps_signed);
          unsigned long mult = 0;
          while (true) {
            auto [quot, r] = rem.divmod(factor);
            if (!r.is_zero()) break;
            rem = quot;
            ++mult;
            if (rem.degree() < 1) break;
          }
          atoms.push_back({factor, mult});
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (rem.degree() >= 1) atoms.push_back({rem, 1});

  std::sort(atoms.begin(), atoms.end(), [](const FactorAtom& a, const FactorAtom& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (int i = a.poly.degree(); i >= 0; --i) {
      const BigRat& ca = a.poly.coeff(static_cast<std::size_t>(i));
      const BigRat& cb = b.poly.coeff(static_cast<std::size_t>(i));
      if (ca != cb) return ca < cb;
    }
    return false;
  });
  return atoms;
}

std::string exponent_suffix(unsigned long e, bool latex) {
  if (e == 1) return "";
  std::string digits = std::to_string(e);
  if (latex && digits.size() > 1) return "^{" + digits + "}";
  return "^" + digits;
}

std::string var_power(unsigned long k, bool latex) {
  return "n" + exponent_suffix(k, latex);
}

// "2*n^2+3*n+1" (plain) or "2n^2+3n+1" (latex), highest power first.
std::string poly_body(const Polynomial& p, bool latex) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRat& c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    BigInt mag = abs(c.get_num());
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        if (!latex) out += "*";
      }
      out += var_power(static_cast<unsigned long>(i), latex);
    }
  }
  return out;
}

std::string atom_text(const FactorAtom& atom, bool latex) {
  std::string body;
  if (atom.poly == Polynomial::variable()) {
    body = "n";
  } else {
    body = "(" + poly_body(atom.poly, latex) + ")";
  }
  return body + exponent_suffix(atom.mult, latex);
}

struct CoeffText {
  bool negative = false;
  std::string text;   // magnitude only
  bool unit = false;  // |coefficient| is exactly 1 (text is "1")
};

struct CoeffParts {
  BigRat magnitude;  // > 0
  bool negative = false;
  std::vector<FactorAtom> num_atoms;
  std::vector<FactorAtom> den_atoms;
};

CoeffParts split_coefficient(const RationalFunction& rf) {
  CoeffParts parts;
  auto [cn, pn] = rf.num().content_primitive();
  auto [cd, pd] = rf.den().content_primitive();
  BigRat c = cn / cd;
  parts.negative = c < 0;
  parts.magnitude = abs(c);
  if (pn.degree() >= 1) parts.num_atoms = factor_primitive(pn);
  if (pd.degree() >= 1) parts.den_atoms = factor_primitive(pd);
  return parts;
}

CoeffText plain_coeff(const RationalFunction& rf) {
  CoeffParts p = split_coefficient(rf);
  CoeffText out;
  out.negative = p.negative;
  out.unit = p.magnitude == 1 && p.num_atoms.empty() && p.den_atoms.empty();

  std::vector<std::string> pieces;
  if (p.magnitude != 1 || p.num_atoms.empty()) pieces.push_back(rat_str(p.magnitude));
  for (const FactorAtom& a : p.num_atoms) pieces.push_back(atom_text(a, false));
  std::string text;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) text += "*";
    text += pieces[i];
  }
  if (!p.den_atoms.empty()) {
    std::string den;
    if (p.den_atoms.size() == 1) {
      den = atom_text(p.den_atoms.front(), false);
    } else {
      den = "(";
      for (std::size_t i = 0; i < p.den_atoms.size(); ++i) {
        if (i > 0) den += "*";
        den += atom_text(p.den_atoms[i], false);
      }
      den += ")";
    }
    text += "/" + den;
  }
  out.text = text;
  return out;
}

CoeffText latex_coeff(const RationalFunction& rf) {
  CoeffParts p = split_coefficient(rf);
  CoeffText out;
  out.negative = p.negative;
  out.unit = p.magnitude == 1 && p.num_atoms.empty() && p.den_atoms.empty();

  BigInt P = p.magnitude.get_num();
  BigInt Q = p.magnitude.get_den();
  std::string atoms;
  for (const FactorAtom& a : p.num_atoms) atoms += atom_text(a, true);
  if (p.den_atoms.empty()) {
    // Constant-first style: \frac{1}{6}n(n+1)(2n+1).
    std::string c;
    if (Q != 1) {
      c = "\\frac{" + P.get_str() + "}{" + Q.get_str() + "}";
    } else if (P != 1 || p.num_atoms.empty()) {
      c = P.get_str();
    }
    out.text = c + atoms;
    return out;
  }
  std::string num;
  if (P != 1 || p.num_atoms.empty()) num = P.get_str();
  num += atoms;
  std::string den;
  if (Q != 1) den = Q.get_str();
  if (Q == 1 && p.den_atoms.size() == 1 && p.den_atoms.front().mult == 1) {
    // The \frac braces already group a lone atom: \frac{1}{n+1}.
    const FactorAtom& a = p.den_atoms.front();
    den = a.poly == Polynomial::variable() ? "n" : poly_body(a.poly, true);
  } else {
    for (const FactorAtom& a : p.den_atoms) den += atom_text(a, true);
  }
  out.text = "\\frac{" + num + "}{" + den + "}";
  return out;
}

std::string plain_symbol(long order) {
  if (order == 1) return "H(n+1)";
  return "H(n+1," + std::to_string(order) + ")";
}

std::string latex_symbol(long order) {
  if (order == 1) return "H_{n+1}";
  return "H_{n+1}^{(" + std::to_string(order) + ")}";
}

std::string monomial_text(const HarmonicMonomial& m, bool latex) {
  const std::vector<long>& o = m.orders;
  if (o.empty()) return "";
  if (o.size() == 1) return latex ? latex_symbol(o[0]) : plain_symbol(o[0]);
  if (o[0] == o[1]) {
    if (latex && o[0] != 1) return latex_symbol(o[0]) + " " + latex_symbol(o[1]);
    return (latex ? latex_symbol(o[0]) : plain_symbol(o[0])) + "^2";
  }
  if (latex) return latex_symbol(o[0]) + " " + latex_symbol(o[1]);
  return plain_symbol(o[0]) + "*" + plain_symbol(o[1]);
}

std::string render_text(const ClosedForm& f, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : f.terms()) {
    CoeffText c = latex ? latex_coeff(coeff) : plain_coeff(coeff);
    std::string symbols = monomial_text(mono, latex);
    std::string body;
    if (symbols.empty()) {
      body = c.text;
    } else if (c.unit) {
      body = symbols;
    } else if (latex) {
      body = c.text + symbols;
    } else {
      body = c.text + "*" + symbols;
    }
    if (first) {
      out += c.negative ? "-" : "";
      first = false;
    } else {
      out += c.negative ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

std::string render_json(const ClosedForm& f) {
  nlohmann::ordered_json root;
  root["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : f.terms()) {
    nlohmann::ordered_json term;
    term["orders"] = mono.orders;
    auto poly_strings = [](const Polynomial& p) {
      std::vector<std::string> out;
      out.reserve(p.coefficients().size());
      for (const BigRat& c : p.coefficients()) out.push_back(rat_str(c));
      if (out.empty()) out.push_back("0");
      return out;
    };
    term["num"] = poly_strings(coeff.num());
    term["den"] = poly_strings(coeff.den());
    root["terms"].push_back(std::move(term));
  }
  return root.dump();
}

}  // namespace

RenderFormat render_format_from_name(std::string_view name) {
  if (name == "plain") return RenderFormat::Plain;
  if (name == "latex") return RenderFormat::Latex;
  if (name == "json") return RenderFormat::Json;
  throw DomainError("unknown format '" + std::string(name) +
                    "' (expected plain, latex, or json)");
}

std::string render(const ClosedForm& f, RenderFormat format) {
  switch (format) {
    case RenderFormat::Plain:
      return render_text(f, false);
    case RenderFormat::Latex:
      return render_text(f, true);
    case RenderFormat::Json:
      return render_json(f);
  }
  return {};
}

std::string render_polynomial(const Polynomial& p, RenderFormat format) {
  return render(ClosedForm::from_rational(RationalFunction(p)), format);
}

}  // namespace harmsum
