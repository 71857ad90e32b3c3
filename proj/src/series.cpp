#include "germtype/series.hpp"

#include <algorithm>

namespace germtype {

SExtract extract_S(const HermitianJet& z_jet) {
  SExtract out;
  auto [pure, mixed] = pure_mixed_split(z_jet);
  out.S.nvars = z_jet.nvars;
  out.S.truncation = z_jet.truncation;
  out.S.complete = z_jet.complete;
  out.S.tails = pure.tails;
  Exponent zero(z_jet.nvars, 0);
  for (auto& [p, c] : pure.coeffs) {
    if (degree(p.alpha) == 0 && degree(p.beta) == 0)
      throw Error("NotModelForm", "pure part has a constant term");
    if (degree(p.beta) != 0) continue;  // conjugate side
    if (degree(p.alpha) < 2) throw Error("NotModelForm", "pure part has linear terms");
    out.S.coeffs[p.alpha] = c;
  }
  out.mixed = mixed;
  out.mixed_order = vanishing_order(mixed);
  return out;
}

UniJet compose_S(const SSeries& S, const CurveJet& zhat, long horizon_hint) {
  if (static_cast<int>(zhat.comp.size()) != S.nvars)
    throw Error("DimensionMismatch", "curve component count differs from series variables");
  long m = zhat.ord();
  if (m < 0) throw Error("ConstantCurve", "curve is constant");

  std::optional<long> valid_to;
  auto tighten = [&](long v) {
    if (!valid_to || v < *valid_to) valid_to = v;
  };
  if (zhat.validity) tighten(*zhat.validity);
  if (!S.complete) tighten((static_cast<long>(S.truncation) + 1) * m - 1);
  bool value_tail_active = false;
  for (auto& [k, t] : S.tails) {
    if (zhat.comp[k].is_zero()) continue;
    if (t.kind == TailRule::Unknown)
      tighten(static_cast<long>(t.from) * zhat.comp[k].ord() - 1);
    else
      value_tail_active = true;
  }

  UniJet out;
  out.valid_to = valid_to;

  long stored_bound = 0;
  {
    std::vector<long> degs(zhat.comp.size());
    for (size_t i = 0; i < zhat.comp.size(); ++i) degs[i] = std::max<long>(zhat.comp[i].deg(), 0);
    for (auto& [a, c] : S.coeffs) {
      long d = 0;
      for (size_t i = 0; i < degs.size(); ++i) d += a[i] * degs[i];
      stored_bound = std::max(stored_bound, d);
    }
  }

  long cap = -1;
  if (valid_to)
    cap = *valid_to;
  else if (value_tail_active) {
    cap = std::max({stored_bound + 2 * m + 2, 4 * (static_cast<long>(S.truncation) + 1) * m,
                    horizon_hint, 32L});
    out.rule_capped = true;
  }
  out.horizon = cap;

  std::vector<std::map<long, UniPoly>> pow_cache(S.nvars);
  auto comp_pow = [&](int i, long e) -> const UniPoly& {
    auto it = pow_cache[i].find(e);
    if (it != pow_cache[i].end()) return it->second;
    return pow_cache[i].emplace(e, uni_pow(zhat.comp[i], e, cap)).first->second;
  };

  UniPoly acc;
  for (auto& [a, c] : S.coeffs) {
    UniPoly term;
    term.c = {GaussianRational(1)};
    bool dead = false;
    for (int i = 0; i < S.nvars && !dead; ++i)
      if (a[i]) {
        term = uni_mul(term, comp_pow(i, a[i]), cap);
        if (term.is_zero()) dead = true;
      }
    if (dead) continue;
    for (long d = term.ord(); d <= term.deg(); ++d)
      if (!term.at(d).is_zero()) acc.set(d, acc.at(d) + c * term.at(d));
  }
  for (auto& [k, t] : S.tails) {
    if (!t.defines_values() || zhat.comp[k].is_zero()) continue;
    long mk = zhat.comp[k].ord();
    long j0 = std::max<long>(t.from, static_cast<long>(S.truncation) + 1);
    for (long j = j0; cap >= 0 && j * mk <= cap; ++j) {
      GaussianRational cj(t.coeff(j));
      const UniPoly& pj = comp_pow(static_cast<int>(k), j);
      for (long d = pj.ord(); d <= pj.deg() && (cap < 0 || d <= cap); ++d)
        if (!pj.at(d).is_zero()) acc.set(d, acc.at(d) + cj * pj.at(d));
    }
  }
  acc.trim();
  if (cap >= 0) acc = uni_truncate(acc, cap);
  out.poly = acc;
  return out;
}

RadiusVerdict radius_verdict(const SSeries& S, const CurveJet* zhat) {
  RadiusVerdict v;

  auto section = [&](int k) -> char {
    // 'p' positive, 'z' zero, 'u' unknown
    auto it = S.tails.find(k);
    if (it == S.tails.end()) return S.complete ? 'p' : 'u';
    switch (it->second.kind) {
      case TailRule::Geometric:
      case TailRule::PolynomialRate:
        return 'p';
      case TailRule::PowerFactorial:
        return 'z';
      case TailRule::Unknown:
        return 'u';
    }
    return 'u';
  };

  if (!zhat) {
    int positives = 0, zeros = 0, unknowns = 0;
    int pos_var = -1;
    for (int k = 0; k < S.nvars; ++k) {
      char s = section(k);
      if (s == 'p') {
        ++positives;
        if (pos_var < 0) pos_var = k;
      } else if (s == 'z')
        ++zeros;
      else
        ++unknowns;
    }
    if (positives > 0) {
      v.kind = RadiusVerdict::Positive;
      auto it = S.tails.find(pos_var);
      if (it != S.tails.end() && it->second.kind == TailRule::Geometric) {
        v.radius = Rat(1) / it->second.ratio;
        v.radius->canonicalize();
      } else if (it != S.tails.end() && it->second.kind == TailRule::PolynomialRate) {
        v.radius = Rat(1);
      } else {
        v.entire = true;  // polynomial section
      }
      v.detail = S.nvars == 1 ? "single-variable series"
                              : "convergent section along z" + std::to_string(pos_var + 1);
      return v;
    }
    if (zeros == S.nvars) {
      v.kind = RadiusVerdict::Zero;
      v.detail = "every variable carries a radius-zero tail; series diverges on a deleted neighborhood";
      return v;
    }
    v.kind = RadiusVerdict::UnknownFiniteJet;
    v.detail = "jet data does not determine the radius";
    return v;
  }

  // composed with a curve: only data the curve actually reaches matters
  std::vector<bool> active(S.nvars, false);
  for (int k = 0; k < S.nvars; ++k) active[k] = !zhat->comp[k].is_zero();

  bool stored_survives = false;
  if (!S.complete) {
    // unknown multivariate terms could survive along any active variable
    for (int k = 0; k < S.nvars; ++k)
      if (active[k]) stored_survives = true;  // conservatively treat as unknown data
  }
  for (auto& [a, c] : S.coeffs) {
    bool survives = true;
    for (int k = 0; k < S.nvars; ++k)
      if (a[k] && !active[k]) survives = false;
    if (survives) stored_survives = true;
  }
  int n_zero = 0, n_pos = 0, n_unknown = 0, zero_var = -1;
  for (auto& [k, t] : S.tails) {
    if (!active[k]) continue;
    switch (t.kind) {
      case TailRule::PowerFactorial:
        ++n_zero;
        zero_var = static_cast<int>(k);
        break;
      case TailRule::Geometric:
      case TailRule::PolynomialRate:
        ++n_pos;
        break;
      case TailRule::Unknown:
        ++n_unknown;
        break;
    }
  }
  if (!S.complete) ++n_unknown;

  if (n_zero == 0 && n_unknown == 0) {
    v.kind = RadiusVerdict::Positive;
    v.entire = !stored_survives && n_pos == 0;
    v.detail = v.entire ? "curve reaches no series data; composition is polynomial"
                        : "composition of convergent data with a polynomial curve";
    return v;
  }
  if (n_zero == 1 && n_unknown == 0 && n_pos == 0) {
    // single surviving factorial tail: its coefficients dominate every
    // polynomial contribution past the stored degree range
    v.kind = RadiusVerdict::Zero;
    v.detail = "factorial tail of z" + std::to_string(zero_var + 1) + " dominates along the curve";
    return v;
  }
  v.kind = RadiusVerdict::UnknownFiniteJet;
  v.detail = "tail combination along the curve is outside the certified fragment";
  return v;
}

TangencyResult tangency_witness(const DefiningFunction& model, const CurveJet& zhat, long N) {
  FormInfo form = recognize_form(model);
  if (form.tag != FormTag::Model) throw Error("NotModelForm", "tangency witness needs a model-form germ");
  TangencyResult out;

  SExtract se = extract_S(form.z_part);

  // obstruction check: mixed part must vanish along the curve to order > N
  ComposeResult mixed_comp = compose(se.mixed, zhat);
  long d = mixed_comp.series.min_total_degree();
  long check_to = mixed_comp.valid_to ? std::min(N, *mixed_comp.valid_to) : N;
  if (d >= 0 && d <= check_to) {
    out.ok = false;
    out.obstruction_degree = d;
    return out;
  }

  UniJet h = compose_S(se.S, zhat, N + 1);
  UniPoly htr = uni_truncate(h.poly, N);

  std::vector<UniPoly> comps = zhat.comp;
  comps.push_back(uni_neg(htr));
  out.gamma = make_curve(std::move(comps), CurveJet::Full, zhat.validity);
  out.contact = contact_order(model.jet, out.gamma);
  out.ok = true;
  return out;
}

LadderCertificate ladder_certificate(const DefiningFunction& model, const CurveJet& zhat) {
  LadderCertificate cert;
  FormInfo form = recognize_form(model);
  if (form.tag != FormTag::Model) return cert;
  SExtract se = extract_S(form.z_part);

  // mixed part must cancel identically (exact data, empty composition)
  ComposeResult mixed_comp = compose(se.mixed, zhat);
  if (!mixed_comp.series.is_zero() || mixed_comp.valid_to || mixed_comp.rule_capped) return cert;

  // one active value-ruled monomial variable drives the residual
  int ruled = -1;
  for (auto& [k, t] : se.S.tails) {
    if (!t.defines_values() || zhat.comp[k].is_zero()) continue;
    if (ruled >= 0) return cert;
    ruled = static_cast<int>(k);
  }
  if (ruled < 0) return cert;
  for (auto& [k, t] : se.S.tails)
    if (t.kind == TailRule::Unknown && !zhat.comp[k].is_zero()) return cert;
  const UniPoly& g = zhat.comp[ruled];
  if (g.ord() != g.deg()) return cert;  // monomial component

  cert.valid = true;
  cert.exact_orders = true;
  cert.ruled_var = ruled;
  cert.ord_gamma = zhat.ord();
  cert.description =
      "for every N, gamma_N = (gamma_hat, -trunc(S o gamma_hat, N)) has finite contact order "
      "strictly beyond N (tail coefficients of z" +
      std::to_string(ruled + 1) + " never vanish), so the ratios are unbounded";
  return cert;
}

}  // namespace germtype
