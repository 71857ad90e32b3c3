#include "germtype/contact.hpp"

#include <algorithm>

namespace germtype {

void BiPoly::add(long p, long q, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(p, q);
  auto it = c.find(key);
  if (it == c.end())
    c[key] = v;
  else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

long BiPoly::min_total_degree() const {
  long m = -1;
  for (auto& [pq, v] : c) {
    long d = pq.first + pq.second;
    if (m < 0 || d < m) m = d;
  }
  return m;
}

Rat ContactResult::ratio_value() const {
  if (order.kind == ContactOrder::InfiniteZero)
    throw Error("InfiniteRatio", "contact order is infinite");
  Rat r = rat_ll(order.value) / rat_ll(curve_ord);
  r.canonicalize();
  return r;
}

namespace {

// largest total degree any stored term of r can reach along g
long stored_degree_bound(const HermitianJet& r, const CurveJet& g) {
  long bound = 0;
  std::vector<long> degs(g.comp.size());
  for (size_t i = 0; i < g.comp.size(); ++i) degs[i] = std::max<long>(g.comp[i].deg(), 0);
  for (auto& [p, c] : r.coeffs) {
    long d = 0;
    for (size_t i = 0; i < degs.size(); ++i) d += (p.alpha[i] + p.beta[i]) * degs[i];
    bound = std::max(bound, d);
  }
  return bound;
}

}  // namespace

ComposeResult compose(const HermitianJet& r, const CurveJet& g, long horizon_hint) {
  if (static_cast<int>(g.comp.size()) != r.nvars)
    throw Error("DimensionMismatch", "curve component count differs from jet variables");

  long m = g.ord();
  if (m < 0) throw Error("ConstantCurve", "curve is constant");

  // validity bound from jet honesty and curve validity
  std::optional<long> valid_to;
  auto tighten = [&](long v) {
    if (!valid_to || v < *valid_to) valid_to = v;
  };
  bool jet_has_data = !r.coeffs.empty() || r.has_value_tails();
  if (g.validity && jet_has_data) tighten(*g.validity);
  if (!r.complete) tighten((static_cast<long>(r.truncation) + 1) * m - 1);
  bool value_tail_active = false;
  for (auto& [k, t] : r.tails) {
    if (g.comp[k].is_zero()) continue;
    long mk = g.comp[k].ord();
    if (t.kind == TailRule::Unknown)
      tighten(static_cast<long>(t.from) * mk - 1);
    else
      value_tail_active = true;
  }

  ComposeResult out;
  out.valid_to = valid_to;

  long cap = -1;  // -1: no cap, exact expansion
  if (valid_to)
    cap = *valid_to;
  else if (value_tail_active) {
    long base = stored_degree_bound(r, g);
    long hint = horizon_hint > 0 ? horizon_hint : 0;
    cap = std::max({base + 2 * m + 2, 4 * (static_cast<long>(r.truncation) + 1) * m, hint, 32L});
    out.rule_capped = true;
  }
  out.horizon = cap;

  // stored terms
  std::vector<std::map<long, UniPoly>> pow_cache(r.nvars);
  auto comp_pow = [&](int i, long e) -> const UniPoly& {
    auto it = pow_cache[i].find(e);
    if (it != pow_cache[i].end()) return it->second;
    return pow_cache[i].emplace(e, uni_pow(g.comp[i], e, cap)).first->second;
  };

  for (auto& [pair, coeff] : r.coeffs) {
    UniPoly hol;
    hol.c = {GaussianRational(1)};
    bool dead = false;
    for (int i = 0; i < r.nvars && !dead; ++i)
      if (pair.alpha[i]) {
        hol = uni_mul(hol, comp_pow(i, pair.alpha[i]), cap);
        if (hol.is_zero()) dead = true;
      }
    if (dead) continue;
    UniPoly anti;
    anti.c = {GaussianRational(1)};
    for (int i = 0; i < r.nvars && !dead; ++i)
      if (pair.beta[i]) {
        anti = uni_mul(anti, uni_conj(comp_pow(i, pair.beta[i])), cap);
        if (anti.is_zero()) dead = true;
      }
    if (dead) continue;
    for (long p = hol.ord(); p <= hol.deg(); ++p) {
      if (hol.at(p).is_zero()) continue;
      for (long q = anti.ord(); q <= anti.deg(); ++q) {
        if (anti.at(q).is_zero()) continue;
        if (cap >= 0 && p + q > cap) continue;
        out.series.add(p, q, coeff * hol.at(p) * anti.at(q));
      }
    }
  }

  // value tails: pure powers of the ruled variable beyond the stored range
  for (auto& [k, t] : r.tails) {
    if (!t.defines_values() || g.comp[k].is_zero()) continue;
    long mk = g.comp[k].ord();
    long j0 = std::max<long>(t.from, static_cast<long>(r.truncation) + 1);
    for (long j = j0; cap >= 0 && j * mk <= cap; ++j) {
      GaussianRational cj(t.coeff(j));
      UniPoly pj = comp_pow(static_cast<int>(k), j);
      for (long d = pj.ord(); d <= pj.deg() && d <= cap; ++d) {
        if (pj.at(d).is_zero()) continue;
        out.series.add(d, 0, cj * pj.at(d));
        out.series.add(0, d, (cj * pj.at(d)).conj());
      }
    }
  }

  return out;
}

ContactResult contact_order(const HermitianJet& r, const CurveJet& g) {
  ContactResult res;
  res.curve_ord = g.ord();

  long hint = -1;
  for (int round = 0; round < 6; ++round) {
    ComposeResult comp = compose(r, g, hint);
    long d = comp.series.min_total_degree();
    if (d >= 0 && (!comp.valid_to || d <= *comp.valid_to)) {
      res.order = {ContactOrder::Finite, d};
      return res;
    }
    if (comp.valid_to) {
      res.order = {ContactOrder::AtLeast, *comp.valid_to + 1};
      return res;
    }
    if (!comp.rule_capped) {
      res.order = {ContactOrder::InfiniteZero, 0};
      return res;
    }
    // rule-capped and nothing visible: for monomial ruled components the
    // first pure tail degree past the stored bound must appear, so growing
    // the horizon terminates; keep doubling otherwise and censor at the end.
    hint = comp.horizon * 2;
    if (hint > (1L << 14)) {
      res.order = {ContactOrder::AtLeast, comp.horizon + 1};
      return res;
    }
  }
  throw Error("Internal", "contact order escalation failed");
}

}  // namespace germtype
