#include "germtype/curve.hpp"

#include <cctype>
#include <numeric>

namespace germtype {

bool UniPoly::is_zero() const {
  for (auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

long UniPoly::ord() const {
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) return static_cast<long>(k);
  return -1;
}

long UniPoly::deg() const {
  for (size_t k = c.size(); k > 0; --k)
    if (!c[k - 1].is_zero()) return static_cast<long>(k - 1);
  return -1;
}

const GaussianRational& UniPoly::at(long k) const {
  static const GaussianRational zero;
  if (k < 0 || k >= static_cast<long>(c.size())) return zero;
  return c[k];
}

void UniPoly::set(long k, const GaussianRational& v) {
  if (k >= static_cast<long>(c.size())) c.resize(k + 1);
  c[k] = v;
}

void UniPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
  for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
  r.trim();
  return r;
}

UniPoly uni_neg(const UniPoly& a) {
  UniPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, long cap) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  long da = a.deg(), db = b.deg();
  long dr = da + db;
  if (cap >= 0) dr = std::min(dr, cap);
  r.c.assign(dr + 1, GaussianRational());
  for (long i = a.ord(); i <= da; ++i) {
    if (a.c[i].is_zero()) continue;
    for (long j = b.ord(); j <= db && i + j <= dr; ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

UniPoly uni_pow(const UniPoly& a, long k, long cap) {
  UniPoly r;
  r.c = {GaussianRational(1)};
  UniPoly base = a;
  while (k > 0) {
    if (k & 1) r = uni_mul(r, base, cap);
    base = uni_mul(base, base, cap);
    k >>= 1;
  }
  return r;
}

UniPoly uni_conj(const UniPoly& a) {
  UniPoly r = a;
  for (auto& x : r.c) x = x.conj();
  return r;
}

UniPoly uni_truncate(const UniPoly& a, long maxdeg) {
  UniPoly r = a;
  if (static_cast<long>(r.c.size()) > maxdeg + 1) r.c.resize(maxdeg + 1);
  r.trim();
  return r;
}

long CurveJet::ord() const {
  long m = -1;
  for (auto& p : comp) {
    long o = p.ord();
    if (o >= 0 && (m < 0 || o < m)) m = o;
  }
  return m;
}

CurveJet make_curve(std::vector<UniPoly> comp, CurveJet::Kind kind, std::optional<long> validity,
                    bool normalize_parametrization) {
  for (auto& p : comp) p.trim();
  bool nonconstant = false;
  long g = 0;
  for (auto& p : comp) {
    if (!p.at(0).is_zero()) throw Error("CurveThroughOrigin", "curve components must vanish at t=0");
    for (long k = 1; k <= p.deg(); ++k)
      if (!p.at(k).is_zero()) {
        nonconstant = true;
        g = std::gcd(g, k);
      }
  }
  if (!nonconstant) throw Error("ConstantCurve", "curve must be nonconstant");
  if (g != 1) {
    if (!normalize_parametrization)
      throw Error("NotGoodParametrization",
                  "exponent gcd is " + std::to_string(g) + "; parametrization is not good");
    std::vector<UniPoly> squeezed(comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
      for (long k = 0; k <= comp[i].deg(); ++k)
        if (!comp[i].at(k).is_zero()) squeezed[i].set(k / g, comp[i].at(k));
    comp = std::move(squeezed);
    if (validity) validity = *validity / g;
  }
  CurveJet c;
  c.kind = kind;
  c.comp = std::move(comp);
  c.validity = validity;
  return c;
}

namespace {

struct CurveLexer {
  const std::string& s;
  size_t at = 0;
  explicit CurveLexer(const std::string& str) : s(str) {}
  void skip() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
  }
  bool eat(char c) {
    skip();
    if (at < s.size() && s[at] == c) {
      ++at;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s.compare(at, w.size(), w) == 0) {
      at += w.size();
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (start == at) throw Error("SyntaxError", "expected integer in curve", static_cast<long>(at));
    return std::stol(s.substr(start, at - start));
  }
};

// coefficient := [rational] [ 'i' ] with optional '*' separators, or '(a+b*i)'
GaussianRational parse_coeff(CurveLexer& lx, bool& any);

// monomial := coefficient? 't' ['^' int] | coefficient
// poly := ['-'] monomial (('+'|'-') monomial)* | '(' poly ')' leading minus form
UniPoly parse_poly(CurveLexer& lx);

GaussianRational parse_simple_number(CurveLexer& lx, bool& got) {
  lx.skip();
  got = false;
  Rat num(0);
  bool have_num = false;
  if (lx.at < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.at]))) {
    num = Rat(lx.integer());
    if (lx.eat('/')) num /= Rat(lx.integer());
    have_num = true;
  }
  bool have_i = false;
  size_t save = lx.at;
  if (have_num) {
    if (lx.eat('*')) {
      if (lx.eat_word("i"))
        have_i = true;
      else
        lx.at = save;  // the '*' belongs to a 't' factor
    } else if (lx.eat_word("i")) {
      have_i = true;
    }
  } else if (lx.eat_word("i")) {
    have_i = true;
    num = 1;
  }
  if (!have_num && !have_i) return GaussianRational(0);
  got = true;
  return have_i ? GaussianRational(Rat(0), num) : GaussianRational(num);
}

UniPoly parse_monomial_seq(CurveLexer& lx) {
  UniPoly acc;
  bool first = true;
  for (;;) {
    lx.skip();
    bool neg = false;
    if (!first) {
      if (lx.eat('+')) {
      } else if (lx.eat('-')) {
        neg = true;
      } else {
        break;
      }
    } else {
      if (lx.eat('-')) neg = true;
      first = false;
    }
    lx.skip();
    if (lx.at < lx.s.size() && lx.s[lx.at] == '(') {
      // parenthesized subpolynomial (used for "-(t^16+t^18)")
      lx.eat('(');
      UniPoly sub = parse_monomial_seq(lx);
      if (!lx.eat(')')) throw Error("SyntaxError", "expected ')' in curve", static_cast<long>(lx.at));
      if (neg) sub = uni_neg(sub);
      acc = uni_add(acc, sub);
      continue;
    }
    bool got = false;
    GaussianRational coef = parse_simple_number(lx, got);
    bool have_t = false;
    long k = 1;
    size_t save = lx.at;
    if (got && lx.eat('*')) {
      if (!lx.eat_word("t")) lx.at = save;
      else have_t = true;
    } else if (lx.eat_word("t")) {
      have_t = true;
    }
    if (have_t) {
      if (!got) coef = GaussianRational(1);
      if (lx.eat('^')) k = lx.integer();
    } else {
      if (!got) throw Error("SyntaxError", "expected curve monomial", static_cast<long>(lx.at));
      k = 0;
    }
    if (neg) coef = -coef;
    UniPoly mono;
    mono.set(k, coef);
    acc = uni_add(acc, mono);
  }
  return acc;
}

}  // namespace

CurveJet parse_curve(const std::string& text, CurveJet::Kind kind) {
  CurveLexer lx(text);
  lx.eat_word("gamma");
  lx.eat('=');
  if (!lx.eat('(')) throw Error("SyntaxError", "curve must start with '('", static_cast<long>(lx.at));
  std::vector<UniPoly> comps;
  for (;;) {
    comps.push_back(parse_monomial_seq(lx));
    lx.skip();
    if (lx.eat(',')) continue;
    if (lx.eat(')')) break;
    throw Error("SyntaxError", "expected ',' or ')' in curve", static_cast<long>(lx.at));
  }
  std::optional<long> validity;
  if (lx.eat_word("valid")) validity = lx.integer();
  lx.skip();
  if (lx.at != text.size())
    throw Error("SyntaxError", "trailing input after curve", static_cast<long>(lx.at));
  return make_curve(std::move(comps), kind, validity);
}

std::string print_unipoly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long k = p.ord(); k <= p.deg(); ++k) {
    const GaussianRational& c = p.at(k);
    if (c.is_zero()) continue;
    GaussianRational v = c;
    bool neg = v.is_real() && v.re < 0;
    if (neg) v = -v;
    std::string coef;
    if (!(v == GaussianRational(1)) || k == 0)
      coef = v.is_real() ? rat_str(v.re) : (v == GaussianRational::unit_i() ? "i" : "(" + v.str() + ")");
    std::string body = coef;
    if (k > 0) {
      if (!coef.empty()) body += "*";
      body += "t";
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string print_curve(const CurveJet& g) {
  std::string out = "(";
  for (size_t i = 0; i < g.comp.size(); ++i) {
    if (i) out += ", ";
    out += print_unipoly(g.comp[i]);
  }
  out += ")";
  if (g.validity) out += " valid " + std::to_string(*g.validity);
  return out;
}

}  // namespace germtype
