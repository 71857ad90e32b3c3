#include "germtype/typesearch.hpp"

#include <algorithm>

namespace germtype {

namespace {

struct SplitRng {
  uint64_t s;
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

struct Candidate {
  CurveJet curve{CurveJet::Full, {}, std::nullopt};
  int family_rank = 0;  // 0 axis, 1 face, 2 random
  std::string family;
};

UniPoly monomial_poly(long k, const GaussianRational& c) {
  UniPoly p;
  p.set(k, c);
  return p;
}

}  // namespace

TypeSearchResult type_search(const DefiningFunction& def, int max_degree, bool regular_only,
                             const NewtonPolyhedron& P, const CanonicityReport& canon,
                             const SearchBudget& budget) {
  TypeSearchResult res;
  res.seed = budget.seed;
  int nv = def.total_vars();
  int nz = def.nvars_z;

  FormInfo form = recognize_form(def);
  bool model = form.tag == FormTag::Model;
  std::optional<SExtract> se;
  if (model) se = extract_S(form.z_part);

  std::vector<Candidate> candidates;

  // (a) axis curves
  for (int j = 0; j < nv; ++j) {
    std::vector<UniPoly> comps(nv);
    comps[j] = monomial_poly(1, GaussianRational(1));
    Candidate c;
    c.curve = make_curve(std::move(comps), CurveJet::Full);
    c.family_rank = 0;
    c.family = "axis";
    candidates.push_back(std::move(c));
  }

  // extend a z-curve with the greedy pure-cancelling w component (the
  // correction ladder is exempt from the degree bound)
  auto with_ladder_w = [&](const CurveJet& zhat) -> std::optional<CurveJet> {
    if (!model) return std::nullopt;
    UniJet s = compose_S(se->S, zhat);
    long cap = s.valid_to ? *s.valid_to : (s.horizon >= 0 ? s.horizon : s.poly.deg());
    if (cap < 0) cap = 0;
    UniPoly h = uni_truncate(s.poly, cap);
    if (h.is_zero()) return std::nullopt;  // identical to the plain lift
    std::vector<UniPoly> comps = zhat.comp;
    comps.push_back(uni_neg(h));
    try {
      return make_curve(std::move(comps), CurveJet::Full, zhat.validity);
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  auto push_zcurve = [&](const CurveJet& zhat, int rank, const char* family) {
    {
      std::vector<UniPoly> comps = zhat.comp;
      comps.push_back(UniPoly{});
      try {
        Candidate cd;
        cd.curve = make_curve(std::move(comps), CurveJet::Full);
        cd.family_rank = rank;
        cd.family = family;
        candidates.push_back(std::move(cd));
      } catch (const Error&) {
      }
    }
    if (auto lifted = with_ladder_w(zhat)) {
      Candidate cd;
      cd.curve = *lifted;
      cd.family_rank = rank;
      cd.family = family;
      candidates.push_back(std::move(cd));
    }
  };

  // (b) face-guided curves from degenerate faces
  if (model) {
    for (size_t fi = 0; fi < canon.per_face.size() && fi < P.faces.size(); ++fi) {
      const auto& verdict = canon.per_face[fi];
      if (verdict.kind != NondegeneracyVerdict::Degenerate || verdict.witness.empty()) continue;
      const Face& face = P.faces[fi];
      const Weight& a = verdict.witness_weight;
      FacePart part = face_part(def.jet, P, face);
      GroupedTorusSystem gs = grouped_system(part, P, face, a);
      auto vanishes = [&](const std::vector<GaussianRational>& c) {
        for (auto& g : gs.groups) {
          GaussianRational acc;
          for (auto& [pair, coeff] : g.terms) {
            GaussianRational t = coeff;
            for (size_t i = 0; i < c.size(); ++i) {
              if (pair.alpha[i]) t *= c[i].pow(pair.alpha[i]);
              if (pair.beta[i]) t *= c[i].conj().pow(pair.beta[i]);
            }
            acc += t;
          }
          if (!acc.is_zero()) return false;
        }
        return true;
      };
      for (int mask = 0; mask < (1 << nz); ++mask) {
        std::vector<GaussianRational> c = verdict.witness;
        for (int v = 0; v < nz; ++v)
          if (mask & (1 << v)) c[v] = -c[v];
        if (mask != 0 && !vanishes(c)) continue;
        std::vector<UniPoly> zcomps(nz);
        bool any = false;
        for (int v = 0; v < nz; ++v) {
          if (c[v].is_zero()) continue;
          zcomps[v] = monomial_poly(a[v], c[v]);
          any = true;
        }
        if (!any) continue;
        try {
          CurveJet zhat = make_curve(zcomps, CurveJet::ZCurve, std::nullopt, true);
          push_zcurve(zhat, 1, "face");
        } catch (const Error&) {
        }
      }
    }
  }

  // (c) seeded random curves
  SplitRng rng{budget.seed};
  for (int it = 0; it < budget.random_curves; ++it) {
    int ncomp = model ? nz : nv;
    std::vector<UniPoly> comps(ncomp);
    bool any = false;
    for (auto& comp : comps) {
      int terms = static_cast<int>(rng.next() % (budget.max_terms_per_component + 1));
      for (int t = 0; t < terms; ++t) {
        long k = rng.range(1, std::max(1, max_degree));
        Rat re(rng.range(-4, 4), rng.range(1, 2));
        re.canonicalize();
        Rat im(rng.range(-2, 2), 1);
        GaussianRational g(re, im);
        if (g.is_zero()) continue;
        comp.set(k, g);
        any = true;
      }
    }
    if (!any) continue;
    if (regular_only) {
      for (auto& comp : comps)
        if (!comp.is_zero()) {
          if (comp.ord() > 1) comp.set(1, GaussianRational(1));
          break;
        }
    }
    try {
      if (model) {
        CurveJet zhat = make_curve(comps, CurveJet::ZCurve, std::nullopt, true);
        push_zcurve(zhat, 2, "random");
      } else {
        Candidate cd;
        cd.curve = make_curve(comps, CurveJet::Full, std::nullopt, true);
        cd.family_rank = 2;
        cd.family = "random";
        candidates.push_back(std::move(cd));
      }
    } catch (const Error&) {
      continue;
    }
  }

  // deterministic reduction: max bound, prefer uncensored, then family
  // rank, then lexicographic curve encoding
  bool have = false;
  Rat best_bound = 0;
  bool best_cens = false;
  int best_rank = 0;
  std::string best_enc;
  TypeWitness best_wit;
  bool infinite_found = false;

  for (auto& cand : candidates) {
    if (regular_only && !cand.curve.is_regular()) continue;
    ContactResult cr = contact_order(def.jet, cand.curve);
    ++res.candidates_tried;
    std::string enc = print_curve(cand.curve);
    if (cr.infinite()) {
      if (!infinite_found || cand.family_rank < best_rank ||
          (cand.family_rank == best_rank && enc < best_enc)) {
        best_wit = TypeWitness{cand.curve, cr, cand.family};
        best_rank = cand.family_rank;
        best_enc = enc;
      }
      infinite_found = true;
      continue;
    }
    if (infinite_found) continue;
    Rat bound = cr.ratio_value();
    bool cens = cr.censored();
    bool take = false;
    if (!have)
      take = true;
    else if (bound != best_bound)
      take = bound > best_bound;
    else if (cens != best_cens)
      take = !cens;
    else if (cand.family_rank != best_rank)
      take = cand.family_rank < best_rank;
    else
      take = enc < best_enc;
    if (take) {
      have = true;
      best_bound = bound;
      best_cens = cens;
      best_rank = cand.family_rank;
      best_enc = enc;
      best_wit = TypeWitness{cand.curve, cr, cand.family};
    }
  }

  if (infinite_found) {
    res.has_bound = true;
    res.infinite = true;
    res.censored = false;
    res.witness = best_wit;
    res.exact = true;
  } else if (have) {
    res.has_bound = true;
    res.bound = best_bound;
    res.censored = best_cens;
    res.witness = best_wit;
  }

  if (canon.state == CanonicityReport::Canonical) res.exact = true;
  return res;
}

}  // namespace germtype
