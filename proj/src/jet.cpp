#include "germtype/jet.hpp"

#include <algorithm>
#include <limits>

namespace germtype {

Rat TailRule::coeff(long j) const {
  switch (kind) {
    case Geometric: {
      Rat r(1);
      for (long i = 0; i < j; ++i) r *= ratio;
      return r;
    }
    case PowerFactorial: {
      mpz_class f = 1;
      for (long i = 2; i <= j; ++i) f *= i;
      mpz_class acc = 1;
      for (int i = 0; i < power; ++i) acc *= f;
      return Rat(acc);
    }
    case PolynomialRate: {
      mpz_class acc = 1;
      for (int i = 0; i < power; ++i) acc *= j;
      return Rat(acc);
    }
    case Unknown:
      break;
  }
  throw Error("UnknownTail", "tail rule does not define values");
}

std::string TailRule::str() const {
  switch (kind) {
    case Unknown:
      return "unknown(from=" + std::to_string(from) + ")";
    case Geometric:
      return "geometric(" + rat_str(ratio) + ",from=" + std::to_string(from) + ")";
    case PowerFactorial:
      return "factorial(" + std::to_string(power) + ",from=" + std::to_string(from) + ")";
    case PolynomialRate:
      return "poly(" + std::to_string(power) + ",from=" + std::to_string(from) + ")";
  }
  return "?";
}

bool HermitianJet::has_value_tails() const {
  for (auto& [k, t] : tails)
    if (t.defines_values()) return true;
  return false;
}

std::optional<long long> HermitianJet::first_unknown_degree() const {
  if (!complete) return truncation + 1;
  long long first = -1;
  for (auto& [k, t] : tails) {
    if (t.kind == TailRule::Unknown) {
      if (first < 0 || t.from < first) first = t.from;
    }
  }
  if (first < 0) return std::nullopt;
  return first;
}

const GaussianRational& HermitianJet::coeff(const ExponentPair& p) const {
  static const GaussianRational zero;
  auto it = coeffs.find(p);
  return it == coeffs.end() ? zero : it->second;
}

void HermitianJet::set_coeff(const ExponentPair& p, const GaussianRational& c) {
  if (c.is_zero())
    coeffs.erase(p);
  else
    coeffs[p] = c;
}

GaussianRational HermitianJet::pure_coeff(int k, long j) const {
  ExponentPair p{unit_exp(nvars, k, static_cast<int>(j)), Exponent(nvars, 0)};
  if (j <= truncation) return coeff(p);  // stored data matches any tail on the overlap
  auto it = tails.find(k);
  if (it != tails.end() && j >= it->second.from) {
    if (it->second.defines_values()) return GaussianRational(it->second.coeff(j));
    throw Error("UnknownCoefficient", "pure coefficient lies in a declared unknown tail");
  }
  if (complete) return GaussianRational(0);
  throw Error("UnknownCoefficient", "pure coefficient beyond jet truncation");
}

long long HoloPoly::max_degree() const {
  long long d = 0;
  for (auto& [a, c] : coeffs) d = std::max(d, degree(a));
  return d;
}

static void check_dims(const HermitianJet& f, const HermitianJet& g) {
  if (f.nvars != g.nvars) throw Error("DimensionMismatch", "jets have different variable counts");
}

HermitianJet build_jet(int n, const std::vector<std::pair<ExponentPair, GaussianRational>>& entries,
                       int truncation, bool symmetrize) {
  HermitianJet f;
  f.nvars = n;
  f.truncation = truncation;
  f.complete = true;
  for (auto& [p, c] : entries) {
    if (static_cast<int>(p.alpha.size()) != n || static_cast<int>(p.beta.size()) != n)
      throw Error("DimensionMismatch", "exponent dimension differs from variable count");
    if (p.order() > truncation)
      throw Error("DegreeOverflow", "entry of total degree " + std::to_string(p.order()) +
                                        " exceeds truncation " + std::to_string(truncation));
    if (c.is_zero()) continue;
    auto it = f.coeffs.find(p);
    if (it == f.coeffs.end())
      f.coeffs[p] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) f.coeffs.erase(it);
    }
  }
  // Enforce or repair Hermitian symmetry.
  for (auto& [p, c] : f.coeffs) {
    ExponentPair q = p.swapped();
    auto it = f.coeffs.find(q);
    if (it == f.coeffs.end()) {
      if (!symmetrize)
        throw Error("NonRealInput", "missing conjugate partner for a stored coefficient");
      f.coeffs[q] = c.conj();
    } else if (it->second != c.conj()) {
      throw Error("NonRealInput", "conjugate coefficient pair is not Hermitian");
    }
  }
  return f;
}

HermitianJet jet_add(const HermitianJet& f, const HermitianJet& g) {
  check_dims(f, g);
  HermitianJet r;
  r.nvars = f.nvars;
  if (f.is_zero() && f.complete && f.tails.empty()) {
    r = g;
    return r;
  }
  if (g.is_zero() && g.complete && g.tails.empty()) {
    r = f;
    return r;
  }
  r.truncation = std::min(f.truncation, g.truncation);
  r.complete = f.complete && g.complete;
  if (f.complete && g.complete) r.truncation = std::max(f.truncation, g.truncation);
  r.coeffs = f.coeffs;
  for (auto& [p, c] : g.coeffs) {
    auto it = r.coeffs.find(p);
    if (it == r.coeffs.end())
      r.coeffs[p] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs.erase(it);
    }
  }
  // Tails cannot be merged symbolically in general; additions are only used
  // on tail-free operands or disjoint tail variables.
  for (auto& [k, t] : f.tails) r.tails[k] = t;
  for (auto& [k, t] : g.tails) {
    if (r.tails.count(k)) throw Error("TailClash", "adding jets with tails on the same variable");
    r.tails[k] = t;
  }
  if (!r.complete) {
    HermitianJet trimmed = jet_truncate(r, r.truncation);
    trimmed.tails = r.tails;
    return trimmed;
  }
  return r;
}

HermitianJet jet_scale(const HermitianJet& f, const Rat& s) {
  HermitianJet r = f;
  if (s == 0) {
    r.coeffs.clear();
    return r;
  }
  for (auto& [p, c] : r.coeffs) c = c * GaussianRational(s);
  return r;
}

HermitianJet jet_sub(const HermitianJet& f, const HermitianJet& g) {
  return jet_add(f, jet_scale(g, Rat(-1)));
}

static long long min_order(const HermitianJet& f) {
  long long m = -1;
  for (auto& [p, c] : f.coeffs) {
    long long o = p.order();
    if (m < 0 || o < m) m = o;
  }
  for (auto& [k, t] : f.tails) m = (m < 0 || t.from < m) ? t.from : m;
  return m < 0 ? 0 : m;
}

HermitianJet jet_mul(const HermitianJet& f, const HermitianJet& g) {
  check_dims(f, g);
  if (f.has_any_tail() || g.has_any_tail())
    throw Error("TailClash", "multiplication of jets with symbolic tails is not supported");
  HermitianJet r;
  r.nvars = f.nvars;
  if (f.is_zero() || g.is_zero()) {
    r.complete = f.complete && g.complete;
    r.truncation = std::max(f.truncation, g.truncation);
    if (f.is_zero() && f.complete) r.complete = true;  // exact zero annihilates
    if (g.is_zero() && g.complete) r.complete = true;
    return r;
  }
  r.complete = f.complete && g.complete;
  if (r.complete) {
    r.truncation = 0;
  } else {
    // faithful through min(T_f + ord g, T_g + ord f)
    long long tf = f.complete ? std::numeric_limits<long long>::max() / 4
                              : f.truncation + min_order(g);
    long long tg = g.complete ? std::numeric_limits<long long>::max() / 4
                              : g.truncation + min_order(f);
    r.truncation = static_cast<int>(std::min(tf, tg));
  }
  for (auto& [p, a] : f.coeffs) {
    for (auto& [q, b] : g.coeffs) {
      ExponentPair pq{exp_add(p.alpha, q.alpha), exp_add(p.beta, q.beta)};
      if (!r.complete && pq.order() > r.truncation) continue;
      GaussianRational prod = a * b;
      auto it = r.coeffs.find(pq);
      if (it == r.coeffs.end()) {
        if (!prod.is_zero()) r.coeffs[pq] = prod;
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.coeffs.erase(it);
      }
    }
  }
  if (r.complete) {
    long long d = 0;
    for (auto& [p, c] : r.coeffs) d = std::max(d, p.order());
    r.truncation = static_cast<int>(d);
  }
  return r;
}

HermitianJet squared_modulus(const HoloPoly& h) {
  HermitianJet r;
  r.nvars = h.nvars;
  r.complete = true;
  for (auto& [a, ca] : h.coeffs)
    for (auto& [b, cb] : h.coeffs) {
      ExponentPair p{a, b};
      GaussianRational prod = ca * cb.conj();
      auto it = r.coeffs.find(p);
      if (it == r.coeffs.end()) {
        if (!prod.is_zero()) r.coeffs[p] = prod;
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.coeffs.erase(it);
      }
    }
  long long d = 0;
  for (auto& [p, c] : r.coeffs) d = std::max(d, p.order());
  r.truncation = static_cast<int>(d);
  return r;
}

HermitianJet two_re(const HoloPoly& h) {
  HermitianJet r;
  r.nvars = h.nvars;
  r.complete = true;
  Exponent zero(h.nvars, 0);
  for (auto& [a, c] : h.coeffs) {
    if (exp_is_zero(a)) {
      GaussianRational v = c + c.conj();
      if (!v.is_zero()) r.coeffs[ExponentPair{a, a}] = v;
      continue;
    }
    r.coeffs[ExponentPair{a, zero}] = c;
    r.coeffs[ExponentPair{zero, a}] = c.conj();
  }
  long long d = 0;
  for (auto& [p, c] : r.coeffs) d = std::max(d, p.order());
  r.truncation = static_cast<int>(d);
  return r;
}

std::pair<HermitianJet, HermitianJet> pure_mixed_split(const HermitianJet& f) {
  HermitianJet pure, mixed;
  pure.nvars = mixed.nvars = f.nvars;
  pure.truncation = mixed.truncation = f.truncation;
  pure.complete = mixed.complete = f.complete;
  for (auto& [p, c] : f.coeffs) {
    if (p.pure())
      pure.coeffs[p] = c;
    else
      mixed.coeffs[p] = c;
  }
  for (auto& [k, t] : f.tails) pure.tails[k] = t;  // tails are pure by definition
  return {pure, mixed};
}

VanishingOrder vanishing_order(const HermitianJet& f) {
  VanishingOrder o;
  long long m = -1;
  for (auto& [p, c] : f.coeffs) {
    long long d = p.order();
    if (m < 0 || d < m) m = d;
  }
  for (auto& [k, t] : f.tails)
    if (t.defines_values() && (m < 0 || t.from < m)) m = t.from;
  if (m < 0) {
    o.infinite = true;
    long long w = f.complete ? -1 : f.truncation;  // -1: genuinely flat Taylor data
    for (auto& [k, t] : f.tails)
      if (!t.defines_values()) w = (w < 0) ? t.from - 1 : std::min<long long>(w, t.from - 1);
    o.witnessed_to = w;
    return o;
  }
  o.value = m;
  return o;
}

GaussianRational evaluate(const HermitianJet& f, const std::vector<GaussianRational>& z) {
  if (static_cast<int>(z.size()) != f.nvars) throw Error("DimensionMismatch", "evaluation point dimension");
  GaussianRational acc;
  for (auto& [p, c] : f.coeffs) {
    GaussianRational term = c;
    for (int i = 0; i < f.nvars; ++i) {
      if (p.alpha[i]) term *= z[i].pow(p.alpha[i]);
      if (p.beta[i]) term *= z[i].conj().pow(p.beta[i]);
    }
    acc += term;
  }
  return acc;
}

GaussianRational evaluate(const HoloPoly& h, const std::vector<GaussianRational>& z) {
  GaussianRational acc;
  for (auto& [a, c] : h.coeffs) {
    GaussianRational term = c;
    for (int i = 0; i < h.nvars; ++i)
      if (a[i]) term *= z[i].pow(a[i]);
    acc += term;
  }
  return acc;
}

std::set<Exponent> support(const HermitianJet& f) {
  std::set<Exponent> s;
  for (auto& [p, c] : f.coeffs) s.insert(p.total());
  // A value tail starting beyond the stored range contributes its first axis
  // point (rule coefficients are never zero); further points lie deeper in
  // the polyhedron and cannot change it.
  for (auto& [k, t] : f.tails)
    if (t.defines_values() && t.from > f.truncation)
      s.insert(unit_exp(f.nvars, k, t.from));
  return s;
}

HermitianJet jet_truncate(const HermitianJet& f, int T) {
  HermitianJet r;
  r.nvars = f.nvars;
  r.truncation = T;
  r.complete = false;
  for (auto& [p, c] : f.coeffs)
    if (p.order() <= T) r.coeffs[p] = c;
  return r;
}

HermitianJet jet_kill_vars(const HermitianJet& f, const std::vector<int>& kill) {
  std::vector<bool> dead(f.nvars, false);
  for (int k : kill) dead[k] = true;
  HermitianJet r;
  r.nvars = f.nvars;
  r.truncation = f.truncation;
  r.complete = f.complete;
  for (auto& [p, c] : f.coeffs) {
    bool survives = true;
    for (int i = 0; i < f.nvars && survives; ++i)
      if (dead[i] && (p.alpha[i] || p.beta[i])) survives = false;
    if (survives) r.coeffs[p] = c;
  }
  for (auto& [k, t] : f.tails)
    if (!dead[k]) r.tails[k] = t;
  return r;
}

HoloPoly holo_mul(const HoloPoly& a, const HoloPoly& b) {
  HoloPoly r;
  r.nvars = a.nvars;
  for (auto& [x, cx] : a.coeffs)
    for (auto& [y, cy] : b.coeffs) {
      Exponent e = exp_add(x, y);
      GaussianRational prod = cx * cy;
      auto it = r.coeffs.find(e);
      if (it == r.coeffs.end()) {
        if (!prod.is_zero()) r.coeffs[e] = prod;
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.coeffs.erase(it);
      }
    }
  return r;
}

HoloPoly holo_pow(const HoloPoly& a, long k) {
  HoloPoly r;
  r.nvars = a.nvars;
  r.coeffs[Exponent(a.nvars, 0)] = GaussianRational(1);
  HoloPoly base = a;
  while (k > 0) {
    if (k & 1) r = holo_mul(r, base);
    base = holo_mul(base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace germtype
