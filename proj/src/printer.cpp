#include "germtype/printer.hpp"

#include <algorithm>

namespace germtype {

std::string variable_name(int i, int nvars_z, bool has_w) {
  if (has_w && i == nvars_z) return "w";
  return "z" + std::to_string(i + 1);
}

namespace {

std::string monomial(const Exponent& a, int nz, bool has_w) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(static_cast<int>(i), nz, has_w);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

std::string coeff_prefix(const GaussianRational& c) {
  if (c == GaussianRational(1)) return "";
  if (c.is_real()) return rat_str(c.re) + "*";
  if (c == GaussianRational::unit_i()) return "i*";
  return "(" + c.str() + ")*";
}

struct Term {
  bool negative;
  std::string body;
};

}  // namespace

std::string print_expression(const HermitianJet& jet, int nz, bool has_w,
                             bool include_directive) {
  std::vector<Term> terms;

  std::vector<ExponentPair> reps;
  for (auto& [p, c] : jet.coeffs) {
    ExponentPair sw = p.swapped();
    if (sw < p) continue;  // keep the lexicographically small side as class rep
    reps.push_back(p);
  }
  std::sort(reps.begin(), reps.end());
  std::stable_sort(reps.begin(), reps.end(), [](const ExponentPair& a, const ExponentPair& b) {
    return a.order() < b.order();
  });

  for (auto& rep : reps) {
    GaussianRational c = jet.coeff(rep);
    if (rep.diagonal()) {
      // real by Hermitian symmetry
      Term t;
      t.negative = c.re < 0;
      Rat mag = t.negative ? Rat(-c.re) : c.re;
      std::string mono = monomial(rep.alpha, nz, has_w);
      if (mono.empty())
        t.body = rat_str(mag);
      else
        t.body = (mag == 1 ? "" : rat_str(mag) + "*") + "|" + mono + "|^2";
      terms.push_back(t);
      continue;
    }
    // representative with the larger holomorphic side reads better
    ExponentPair p = degree(rep.alpha) >= degree(rep.beta) ? rep : rep.swapped();
    c = jet.coeff(p);
    Term t;
    t.negative = false;
    if (c.is_real() && c.re < 0) {
      t.negative = true;
      c = -c;
    }
    std::string body = "2*Re(" + coeff_prefix(c);
    std::string zpart = monomial(p.alpha, nz, has_w);
    std::string cpart = monomial(p.beta, nz, has_w);
    body += zpart.empty() ? "" : zpart;
    if (!cpart.empty()) {
      if (!zpart.empty()) body += "*";
      body += "conj(" + cpart + ")";
    }
    if (zpart.empty() && cpart.empty()) body += "1";
    body += ")";
    t.body = body;
    terms.push_back(t);
  }

  std::string out;
  if (include_directive) {
    out += "# n=" + std::to_string(nz);
    if (!jet.complete || !jet.tails.empty()) out += " T=" + std::to_string(jet.truncation);
    for (auto& [k, t] : jet.tails) {
      out += " tail=z" + std::to_string(k + 1) + ":";
      switch (t.kind) {
        case TailRule::Unknown:
          out += "unknown:" + std::to_string(t.from);
          break;
        case TailRule::Geometric:
          out += "geometric:" + rat_str(t.ratio) + ":" + std::to_string(t.from);
          break;
        case TailRule::PowerFactorial:
          out += "factorial:" + std::to_string(t.power) + ":" + std::to_string(t.from);
          break;
        case TailRule::PolynomialRate:
          out += "poly:" + std::to_string(t.power) + ":" + std::to_string(t.from);
          break;
      }
    }
    out += "\n";
  }
  if (terms.empty()) return out + "0";
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" : "";
    else
      out += terms[i].negative ? " - " : " + ";
    out += terms[i].body;
  }
  return out;
}

std::string print_expression(const DefiningFunction& def, bool include_directive) {
  return print_expression(def.jet, def.nvars_z, def.has_w, include_directive);
}

}  // namespace germtype
