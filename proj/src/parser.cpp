#include "germtype/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace germtype {

namespace {

// Complex polynomial in (z, zbar); no reality constraint while parsing.
using PolyC = std::map<ExponentPair, GaussianRational>;

void padd(PolyC& a, const ExponentPair& p, const GaussianRational& c) {
  auto it = a.find(p);
  if (it == a.end()) {
    if (!c.is_zero()) a[p] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

PolyC pmul(const PolyC& a, const PolyC& b) {
  PolyC r;
  for (auto& [p, cp] : a)
    for (auto& [q, cq] : b)
      padd(r, ExponentPair{exp_add(p.alpha, q.alpha), exp_add(p.beta, q.beta)}, cp * cq);
  return r;
}

PolyC pconj(const PolyC& a) {
  PolyC r;
  for (auto& [p, c] : a) r[p.swapped()] = c.conj();
  return r;
}

PolyC pscale(const PolyC& a, const GaussianRational& s) {
  PolyC r;
  for (auto& [p, c] : a) {
    auto v = c * s;
    if (!v.is_zero()) r[p] = v;
  }
  return r;
}

PolyC ppow(PolyC a, long k, int nv) {
  PolyC r;
  r[ExponentPair{Exponent(nv, 0), Exponent(nv, 0)}] = GaussianRational(1);
  while (k > 0) {
    if (k & 1) r = pmul(r, a);
    a = pmul(a, a);
    k >>= 1;
  }
  return r;
}

long long pmaxdeg(const PolyC& a) {
  long long d = 0;
  for (auto& [p, c] : a) d = std::max(d, p.order());
  return d;
}

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Bar, End } kind;
  long pos;
  std::string text;
  long value = 0;
};

struct Lexer {
  const std::string& src;
  size_t at;
  explicit Lexer(const std::string& s, size_t start) : src(s), at(start) {}

  Token next() {
    while (at < src.size() && std::isspace(static_cast<unsigned char>(src[at]))) ++at;
    long pos = static_cast<long>(at);
    if (at >= src.size()) return {Token::End, pos, ""};
    char c = src[at];
    auto one = [&](Token::Kind k) {
      ++at;
      return Token{k, pos, std::string(1, c)};
    };
    switch (c) {
      case '+': return one(Token::Plus);
      case '-': return one(Token::Minus);
      case '*': return one(Token::Star);
      case '^': return one(Token::Caret);
      case '/': return one(Token::Slash);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      case '|': return one(Token::Bar);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = at;
      while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]))) ++at;
      Token t{Token::Int, pos, src.substr(start, at - start)};
      if (t.text.size() > 9) throw Error("SyntaxError", "integer literal too large", pos);
      t.value = std::stol(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = at;
      while (at < src.size() && std::isalnum(static_cast<unsigned char>(src[at]))) ++at;
      return Token{Token::Ident, pos, src.substr(start, at - start)};
    }
    throw Error("SyntaxError", std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  int nv;  // total variables (z count + w slot when present)
  int nz;  // z variables
  bool w_used;
  std::optional<int> declared_n;

  Parser(const std::string& s, size_t start, int nz_, bool w, std::optional<int> declared)
      : lex(s, start), nv(nz_ + (w ? 1 : 0)), nz(nz_), w_used(w), declared_n(declared) {
    advance();
  }

  void advance() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw Error("SyntaxError", "expected " + expected, tok.pos);
  }

  void expect(Token::Kind k, const std::string& what) {
    if (tok.kind != k) fail(what);
    advance();
  }

  PolyC constant(const GaussianRational& c) {
    PolyC r;
    if (!c.is_zero()) r[ExponentPair{Exponent(nv, 0), Exponent(nv, 0)}] = c;
    return r;
  }

  long posint(const std::string& what) {
    if (tok.kind != Token::Int || tok.value <= 0) fail(what);
    long v = tok.value;
    advance();
    return v;
  }

  PolyC parse_expr() {
    bool neg = false;
    if (tok.kind == Token::Minus) {
      neg = true;
      advance();
    }
    PolyC acc = parse_term();
    if (neg) acc = pscale(acc, GaussianRational(-1));
    while (tok.kind == Token::Plus || tok.kind == Token::Minus) {
      bool minus = tok.kind == Token::Minus;
      advance();
      PolyC rhs = parse_term();
      if (minus) rhs = pscale(rhs, GaussianRational(-1));
      for (auto& [p, c] : rhs) padd(acc, p, c);
    }
    return acc;
  }

  PolyC parse_term() {
    PolyC acc = parse_factor();
    while (tok.kind == Token::Star) {
      advance();
      acc = pmul(acc, parse_factor());
      if (pmaxdeg(acc) > kMaxDegree)
        throw Error("DegreeOverflow", "expression degree exceeds limit", tok.pos);
    }
    return acc;
  }

  PolyC parse_factor() {
    PolyC base = parse_primary();
    if (tok.kind == Token::Caret) {
      long cpos = tok.pos;
      advance();
      long k = posint("positive integer exponent");
      if (pmaxdeg(base) * k > kMaxDegree)
        throw Error("DegreeOverflow", "expression degree exceeds limit", cpos);
      base = ppow(std::move(base), k, nv);
    }
    return base;
  }

  PolyC parse_primary() {
    switch (tok.kind) {
      case Token::Int: {
        Rat num(tok.value);
        advance();
        if (tok.kind == Token::Slash) {
          advance();
          if (tok.kind != Token::Int || tok.value <= 0) fail("positive integer denominator");
          num /= Rat(tok.value);
          advance();
        }
        return constant(GaussianRational(num));
      }
      case Token::LParen: {
        advance();
        PolyC e = parse_expr();
        expect(Token::RParen, "')'");
        return e;
      }
      case Token::Bar: {
        long bpos = tok.pos;
        advance();
        PolyC e = parse_expr();
        expect(Token::Bar, "closing '|'");
        if (tok.kind != Token::Caret) fail("'^' after '|...|'");
        advance();
        if (tok.kind != Token::Int || tok.value <= 0 || tok.value % 2 != 0)
          fail("even positive exponent for '|...|'");
        long k = tok.value / 2;
        advance();
        PolyC sq = pmul(e, pconj(e));
        if (pmaxdeg(sq) * k > kMaxDegree)
          throw Error("DegreeOverflow", "expression degree exceeds limit", bpos);
        return ppow(std::move(sq), k, nv);
      }
      case Token::Ident:
        return parse_ident();
      default:
        fail("a factor (number, variable, Re/Im/conj, '|', or '(')");
    }
  }

  PolyC parse_ident() {
    std::string name = tok.text;
    long pos = tok.pos;
    advance();
    if (name == "i") return constant(GaussianRational::unit_i());
    if (name == "w") {
      PolyC r;
      r[ExponentPair{unit_exp(nv, nz), Exponent(nv, 0)}] = GaussianRational(1);
      return r;
    }
    if (name == "Re" || name == "Im" || name == "conj") {
      expect(Token::LParen, "'(' after " + name);
      PolyC e = parse_expr();
      expect(Token::RParen, "')'");
      if (name == "conj") return pconj(e);
      PolyC cj = pconj(e);
      if (name == "Re") {
        PolyC r = e;
        for (auto& [p, c] : cj) padd(r, p, c);
        return pscale(r, GaussianRational(Rat(1, 2)));
      }
      // Im(E) = (E - conj E) * (-i/2)
      PolyC r = e;
      for (auto& [p, c] : cj) padd(r, p, -c);
      return pscale(r, GaussianRational(Rat(0), Rat(-1, 2)));
    }
    if (name.size() > 1 && name[0] == 'z') {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        long idx = std::stol(name.substr(1));
        if (idx < 1) throw Error("SyntaxError", "variable index must be >= 1", pos);
        if (declared_n && idx > *declared_n)
          throw Error("SyntaxError", "variable index exceeds declared n", pos);
        PolyC r;
        r[ExponentPair{unit_exp(nv, static_cast<int>(idx - 1)), Exponent(nv, 0)}] =
            GaussianRational(1);
        return r;
      }
    }
    throw Error("SyntaxError", "unknown identifier '" + name + "'", pos);
  }
};

struct Directive {
  std::optional<int> n, T;
  std::map<int, TailRule> tails;  // keyed by z index - 1
  size_t body_start = 0;
};

int parse_int_field(const std::string& v, long pos, const char* what) {
  try {
    size_t used = 0;
    int x = std::stoi(v, &used);
    if (used != v.size() || x < 0) throw std::invalid_argument("range");
    return x;
  } catch (...) {
    throw Error("SyntaxError", std::string("bad integer for ") + what, pos);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Directive parse_directive(const std::string& text) {
  Directive d;
  size_t at = 0;
  while (at < text.size() && (text[at] == ' ' || text[at] == '\t' || text[at] == '\n')) ++at;
  if (at >= text.size() || text[at] != '#') {
    d.body_start = 0;
    return d;
  }
  size_t eol = text.find('\n', at);
  std::string line = text.substr(at + 1, (eol == std::string::npos ? text.size() : eol) - at - 1);
  d.body_start = eol == std::string::npos ? text.size() : eol + 1;

  size_t i = 0;
  long base = static_cast<long>(at + 1);
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::string item = line.substr(start, i - start);
    long pos = base + static_cast<long>(start);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("SyntaxError", "directive item needs key=value", pos);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "n")
      d.n = parse_int_field(val, pos, "n");
    else if (key == "T")
      d.T = parse_int_field(val, pos, "T");
    else if (key == "tail") {
      auto parts = split(val, ':');
      if (parts.size() < 2) throw Error("SyntaxError", "tail spec is var:kind[:param[:from]]", pos);
      if (parts[0].size() < 2 || parts[0][0] != 'z')
        throw Error("SyntaxError", "tail variable must be a z variable", pos);
      int var = parse_int_field(parts[0].substr(1), pos, "tail variable") - 1;
      TailRule rule;
      if (parts[1] == "unknown") {
        rule.kind = TailRule::Unknown;
        rule.from = parts.size() > 2 ? parse_int_field(parts[2], pos, "tail from") : -1;
      } else if (parts[1] == "geometric") {
        if (parts.size() < 3) throw Error("SyntaxError", "geometric tail needs a ratio", pos);
        rule.kind = TailRule::Geometric;
        rule.ratio = rat_from_string(parts[2]);
        if (rule.ratio <= 0) throw Error("SyntaxError", "geometric ratio must be positive", pos);
        rule.from = parts.size() > 3 ? parse_int_field(parts[3], pos, "tail from") : 2;
      } else if (parts[1] == "factorial") {
        rule.kind = TailRule::PowerFactorial;
        rule.power = parts.size() > 2 ? parse_int_field(parts[2], pos, "factorial power") : 1;
        if (rule.power < 1) throw Error("SyntaxError", "factorial power must be >= 1", pos);
        rule.from = parts.size() > 3 ? parse_int_field(parts[3], pos, "tail from") : 2;
      } else if (parts[1] == "poly") {
        rule.kind = TailRule::PolynomialRate;
        rule.power = parts.size() > 2 ? parse_int_field(parts[2], pos, "poly degree") : 1;
        rule.from = parts.size() > 3 ? parse_int_field(parts[3], pos, "tail from") : 2;
      } else {
        throw Error("SyntaxError", "unknown tail kind '" + parts[1] + "'", pos);
      }
      if (d.tails.count(var)) throw Error("SyntaxError", "duplicate tail for variable", pos);
      d.tails[var] = rule;
    } else {
      throw Error("SyntaxError", "unknown directive key '" + key + "'", pos);
    }
  }
  return d;
}

}  // namespace

DefiningFunction parse_defining_function(const std::string& text) {
  Directive dir = parse_directive(text);

  // prescan for variables
  int max_z = 0;
  bool has_w = false;
  {
    Lexer lx(text, dir.body_start);
    for (;;) {
      Token t = lx.next();
      if (t.kind == Token::End) break;
      if (t.kind != Token::Ident) continue;
      if (t.text == "w") has_w = true;
      if (t.text.size() > 1 && t.text[0] == 'z') {
        bool digits = true;
        for (size_t i = 1; i < t.text.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
        if (digits) max_z = std::max(max_z, static_cast<int>(std::stol(t.text.substr(1))));
      }
    }
  }
  int nz = dir.n ? std::max(*dir.n, max_z) : max_z;
  if (nz == 0 && !has_w) nz = 1;  // constant expressions still need an ambient space
  for (auto& [var, rule] : dir.tails) nz = std::max(nz, var + 1);

  Parser p(text, dir.body_start, nz, has_w, dir.n);
  PolyC poly = p.parse_expr();
  if (p.tok.kind != Token::End) p.fail("end of input");

  // reality
  for (auto& [pair, c] : poly) {
    auto it = poly.find(pair.swapped());
    if (it == poly.end() || it->second != c.conj())
      throw Error("NonRealExpression", "expression is not real-valued", 0);
  }

  DefiningFunction def;
  def.nvars_z = nz;
  def.has_w = has_w;
  def.source_text = text;

  HermitianJet jet;
  jet.nvars = nz + (has_w ? 1 : 0);
  long long maxdeg = 0;
  for (auto& [pair, c] : poly) maxdeg = std::max(maxdeg, pair.order());

  int T = dir.T ? *dir.T : static_cast<int>(maxdeg);
  bool complete = !dir.T.has_value() || !dir.tails.empty();
  jet.truncation = T;
  jet.complete = complete;

  for (auto& [var, rule] : dir.tails) {
    TailRule r = rule;
    if (r.kind == TailRule::Unknown && r.from < 0) r.from = T + 1;
    jet.tails[var] = r;
  }

  for (auto& [pair, c] : poly) {
    long long deg = pair.order();
    if (deg > T && dir.T && dir.tails.empty())
      throw Error("DegreeOverflow", "term of degree " + std::to_string(deg) +
                                        " exceeds declared truncation " + std::to_string(T),
                  0);
    jet.coeffs[pair] = c;
  }

  // stored pure coefficients must agree with value tails on the overlap, and
  // must not reach into a declared unknown tail
  for (auto& [var, rule] : jet.tails) {
    for (auto& [pair, c] : jet.coeffs) {
      if (degree(pair.beta) != 0) continue;
      auto sup = exp_support(pair.alpha);
      if (sup.size() != 1 || sup[0] != var) continue;
      int j = pair.alpha[var];
      if (j < rule.from) continue;
      if (rule.kind == TailRule::Unknown)
        throw Error("TailMismatch", "stored coefficient inside declared unknown tail", 0);
      if (!(c == GaussianRational(rule.coeff(j))))
        throw Error("TailMismatch", "stored coefficient disagrees with tail rule", 0);
    }
    if (rule.kind != TailRule::Unknown) {
      for (int j = std::max(rule.from, 1); j <= jet.truncation; ++j) {
        ExponentPair slot{unit_exp(jet.nvars, var, j), Exponent(jet.nvars, 0)};
        if (!jet.coeffs.count(slot))
          throw Error("TailMismatch", "tail rule value missing from stored range", 0);
      }
    }
  }

  def.jet = std::move(jet);
  return def;
}

}  // namespace germtype
