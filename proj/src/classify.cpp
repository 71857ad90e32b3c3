#include "germtype/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "germtype/contact.hpp"
#include "germtype/printer.hpp"

namespace germtype {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const std::vector<std::pair<int, int>>& proposition_arrows() {
  static const std::vector<std::pair<int, int>> arrows = {
      {3, 2}, {2, 1}, {3, 4}, {4, 1}, {3, 5}, {5, 3}, {6, 5}, {6, 7}, {7, 2}, {8, 6},
  };
  return arrows;
}

bool diagram_sound(const std::array<ConditionReport, 8>& cond) {
  for (auto& [x, y] : proposition_arrows()) {
    if (cond[x - 1].v == Verdict::Proved && cond[y - 1].v == Verdict::Refuted) return false;
  }
  return true;
}

BGResult bloom_graham(const DefiningFunction& def, long bound) {
  FormInfo form = recognize_form(def);
  if (form.tag != FormTag::Model)
    throw Error("NotModelForm", "Bloom-Graham evaluation needs the model form");
  SExtract se = extract_S(form.z_part);
  BGResult r;
  if (!se.mixed_order.infinite) {
    long m = se.mixed_order.value;
    if (m <= bound) {
      r.kind = BGResult::Finite;
      r.value = m;
      r.certificate = "minimal mixed-term order";
    } else {
      r.kind = BGResult::AtLeastK;
      r.value = bound + 1;
      r.certificate = "mixed order exceeds the evaluation bound";
    }
    return r;
  }
  // no mixed terms in the available data
  bool germ_level = form.z_part.complete;
  for (auto& [k, t] : form.z_part.tails)
    if (t.kind == TailRule::Unknown) germ_level = false;
  if (germ_level) {
    r.kind = BGResult::Infinite;
    r.certificate = "Taylor series consists of pure terms only";
    return r;
  }
  long wto = se.mixed_order.witnessed_to >= 0 ? se.mixed_order.witnessed_to
                                              : form.z_part.truncation;
  r.kind = BGResult::AtLeastK;
  r.value = std::min(bound, wto) + 1;
  r.certificate = "pure to the jet truncation";
  r.jet_scope = true;
  return r;
}

namespace {

struct CondState {
  std::array<ConditionReport, 8> c;

  ConditionReport& at(int k) { return c[k - 1]; }

  void prove(int k, const std::string& cert, const std::string& detail, bool jet_scope = false) {
    if (c[k - 1].v == Verdict::Refuted)
      throw Error("Internal", "condition (" + std::to_string(k) + ") proved and refuted");
    if (c[k - 1].v == Verdict::Proved) return;
    c[k - 1].v = Verdict::Proved;
    c[k - 1].certificate = cert;
    c[k - 1].detail = detail;
    c[k - 1].jet_scope = jet_scope;
  }
  void refute(int k, const std::string& cert, const std::string& detail, bool jet_scope = false) {
    if (c[k - 1].v == Verdict::Proved)
      throw Error("Internal", "condition (" + std::to_string(k) + ") proved and refuted");
    if (c[k - 1].v == Verdict::Refuted) return;
    c[k - 1].v = Verdict::Refuted;
    c[k - 1].certificate = cert;
    c[k - 1].detail = detail;
    c[k - 1].jet_scope = jet_scope;
  }

  void propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [x, y] : proposition_arrows()) {
        if (c[x - 1].v == Verdict::Proved && c[y - 1].v == Verdict::Unknown) {
          prove(y, "implied-by-(" + std::to_string(x) + ")",
                "follows from condition (" + std::to_string(x) + ") along the diagram",
                c[x - 1].jet_scope);
          changed = true;
        }
        if (c[y - 1].v == Verdict::Refuted && c[x - 1].v == Verdict::Unknown) {
          refute(x, "refuted-via-(" + std::to_string(y) + ")",
                 "its consequence (" + std::to_string(y) + ") fails",
                 c[y - 1].jet_scope);
          changed = true;
        }
      }
    }
  }
};

bool mixed_is_signed_diagonal(const HermitianJet& mixed) {
  int sign = 0;
  for (auto& [p, c] : mixed.coeffs) {
    if (!p.diagonal() || !c.is_real()) return false;
    int s = c.re > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

std::vector<std::vector<int>> minimal_hitting_sets(const std::vector<std::vector<int>>& supports,
                                                   int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool hits = true;
    for (auto& s : supports) {
      bool hit = false;
      for (int v : s)
        if (mask & (1 << v)) hit = true;
      if (!hit) {
        hits = false;
        break;
      }
    }
    if (!hits) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if (mask & (1 << v)) {
        int sub = mask & ~(1 << v);
        bool sub_hits = true;
        for (auto& s : supports) {
          bool hit = false;
          for (int u : s)
            if (sub & (1 << u)) hit = true;
          if (!hit) sub_hits = false;
        }
        if (sub_hits) minimal = false;
      }
    if (!minimal) continue;
    std::vector<int> H;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) H.push_back(v);
    out.push_back(H);
  }
  return out;
}

// section status of variable k in the S-series: 'p' convergent (polynomial
// or positive-radius rule), 'z' radius-zero rule, 'u' unknown
char section_status(const SSeries& S, int k) {
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
}

struct TangencyOutcome {
  Verdict v3 = Verdict::Unknown, v4 = Verdict::Unknown;
  std::string cert3, cert4, det3, det4;
  bool jet3 = false, jet4 = false;
  std::optional<CurveJet> witness;
};

TangencyOutcome analyze_tangency(const DefiningFunction& def, const FormInfo& form,
                                 const NewtonPolyhedron& P, const CanonicityReport& canon,
                                 const ClassifyBudget& budget) {
  TangencyOutcome out;
  if (form.tag != FormTag::Model) return out;
  int nz = def.nvars_z;
  SExtract se = extract_S(form.z_part);

  auto try_witness_along_axis = [&](int k)
      -> std::optional<std::pair<CurveJet, std::string>> {
    std::vector<UniPoly> comps(nz);
    UniPoly t1;
    t1.set(1, GaussianRational(1));
    comps[k] = t1;
    CurveJet zhat;
    try {
      zhat = make_curve(comps, CurveJet::ZCurve);
    } catch (const Error&) {
      return std::nullopt;
    }
    long N = 2 * (def.jet.truncation + 2);
    TangencyResult tr;
    try {
      tr = tangency_witness(def, zhat, N);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!tr.ok) return std::nullopt;
    if (tr.contact.infinite())
      return std::make_pair(tr.gamma, std::string("exact-tangency-witness"));
    if (tr.contact.censored()) {
      // the visible composition cancels completely; a positive-radius rule
      // upgrades the family to a genuine infinite-order statement
      SSeries section = se.S;
      CurveJet zh = zhat;
      RadiusVerdict rv = radius_verdict(section, &zh);
      if (rv.kind == RadiusVerdict::Positive)
        return std::make_pair(tr.gamma, std::string("radius-positive-witness"));
      return std::make_pair(tr.gamma, std::string("horizon-witness"));
    }
    return std::nullopt;
  };

  const HermitianJet& M = se.mixed;
  bool diag = mixed_is_signed_diagonal(M);

  std::vector<std::vector<int>> supports;
  for (auto& [p, c] : M.coeffs) {
    if (degree(p.beta) != 0 && p.diagonal()) {
      supports.push_back(exp_support(p.alpha));
    } else if (!p.diagonal()) {
      supports.push_back(exp_support(exp_add(p.alpha, p.beta)));
    }
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  std::vector<std::vector<int>> kill_sets;
  if (M.is_zero())
    kill_sets.push_back({});
  else
    kill_sets = minimal_hitting_sets(supports, nz);

  bool all_refuted = !kill_sets.empty();
  bool any_unknown = false;

  for (auto& H : kill_sets) {
    std::vector<bool> dead(nz, false);
    for (int v : H) dead[v] = true;
    HermitianJet FH = jet_kill_vars(form.z_part, H);
    auto [pureH, mixedH] = pure_mixed_split(FH);
    if (!mixedH.is_zero()) {
      any_unknown = true;
      all_refuted = false;
      continue;
    }
    SExtract seH;
    seH.S.nvars = nz;
    try {
      seH = extract_S(FH);
    } catch (const Error&) {
      any_unknown = true;
      all_refuted = false;
      continue;
    }
    // look for a convergent direction outside H
    int chosen = -1;
    bool stratum_refuted = true;
    for (int k = 0; k < nz; ++k) {
      if (dead[k]) continue;
      char s = section_status(seH.S, k);
      if (s == 'p' && chosen < 0) chosen = k;
      if (s != 'z') stratum_refuted = false;
    }
    if (chosen >= 0) {
      if (auto w = try_witness_along_axis(chosen)) {
        all_refuted = false;
        if (out.v4 != Verdict::Proved || w->second == "exact-tangency-witness") {
          out.v4 = Verdict::Proved;
          out.cert4 = w->second;
          out.jet4 = w->second == "horizon-witness";
          out.det4 = "witness curve " + print_curve(w->first);
          out.witness = w->first;
          if (w->first.is_regular()) {
            out.v3 = Verdict::Proved;
            out.cert3 = out.cert4;
            out.jet3 = out.jet4;
            out.det3 = out.det4;
          }
        }
        continue;
      }
      any_unknown = true;
      all_refuted = false;
      continue;
    }
    if (!stratum_refuted) {
      any_unknown = true;
      all_refuted = false;
    }
    // stratum_refuted: every live direction carries a radius-zero tail; the
    // series diverges at every point of a deleted neighborhood there
  }

  if (out.v4 == Verdict::Proved) return out;

  // face-guided witnesses for non-diagonal mixed parts
  for (size_t fi = 0; fi < canon.per_face.size() && fi < P.faces.size(); ++fi) {
    const auto& verdict = canon.per_face[fi];
    if (verdict.kind != NondegeneracyVerdict::Degenerate || verdict.witness.empty()) continue;
    const Weight& a = verdict.witness_weight;
    std::vector<UniPoly> zcomps(nz);
    bool any = false;
    for (int v = 0; v < nz; ++v) {
      if (verdict.witness[v].is_zero()) continue;
      UniPoly m;
      m.set(a[v], verdict.witness[v]);
      zcomps[v] = m;
      any = true;
    }
    if (!any) continue;
    CurveJet zhat;
    try {
      zhat = make_curve(zcomps, CurveJet::ZCurve, std::nullopt, true);
    } catch (const Error&) {
      continue;
    }
    ComposeResult mc = compose(M, zhat);
    if (!mc.series.is_zero() || mc.valid_to || mc.rule_capped) continue;
    RadiusVerdict rv = radius_verdict(se.S, &zhat);
    if (rv.kind == RadiusVerdict::Positive) {
      long N = 2 * (def.jet.truncation + 2);
      TangencyResult tr = tangency_witness(def, zhat, N);
      if (tr.ok && (tr.contact.infinite() || tr.contact.censored())) {
        out.v4 = Verdict::Proved;
        out.cert4 = tr.contact.infinite() ? "exact-tangency-witness" : "radius-positive-witness";
        out.det4 = "witness curve " + print_curve(tr.gamma);
        out.witness = tr.gamma;
        if (tr.gamma.is_regular()) {
          out.v3 = Verdict::Proved;
          out.cert3 = out.cert4;
          out.det3 = out.det4;
        }
        return out;
      }
    }
  }

  if (all_refuted && diag && !any_unknown) {
    out.v4 = Verdict::Refuted;
    out.cert4 = "radius-zero-no-curve";
    out.det4 =
        "every admissible vanishing pattern leaves only radius-zero directions; the series "
        "diverges on a deleted neighborhood";
    out.v3 = Verdict::Refuted;
    out.cert3 = "refuted-via-(4)";
    out.det3 = out.det4;
  }
  return out;
}

}  // namespace

ClassificationReport classify(const DefiningFunction& def, const ClassifyBudget& budget) {
  ClassificationReport rep;
  rep.seed = budget.seed;

  FormInfo form = recognize_form(def);
  rep.form = form.tag;

  int nv = def.total_vars();
  SupportSet S = support(def.jet);
  rep.conv = convenience(S, nv);
  rep.rho = rho1(S, nv);
  rep.slab = slab_axis(S, nv);
  rep.polyhedron = hull(S, nv);
  rep.canon = is_canonical(def.jet, rep.polyhedron, budget.face, budget.seed);

  if (form.tag == FormTag::Model) {
    rep.bg_applicable = true;
    rep.bg = bloom_graham(def, budget.bg_bound);
  }

  SearchBudget sb = budget.search;
  sb.seed = budget.seed;
  rep.search_regular = type_search(def, budget.max_degree, true, rep.polyhedron, rep.canon, sb);
  rep.search_full = type_search(def, budget.max_degree, false, rep.polyhedron, rep.canon, sb);

  CondState st;

  // condition (8) is out of analytic scope
  st.at(8).v = Verdict::Unknown;
  st.at(8).certificate = "out-of-scope";
  st.at(8).detail = "Levi-flatness near p is not jet-decidable; see the numeric spot check";

  bool jet_exact = def.jet.complete;
  for (auto& [k, t] : def.jet.tails)
    if (t.kind == TailRule::Unknown) jet_exact = false;

  // finite-type route: canonical and convenient pins every invariant
  if (rep.canon.state == CanonicityReport::Canonical && rep.conv.convenient) {
    std::string detail = "canonical coordinate with rho1 = " + rat_str(rep.rho.value);
    st.refute(1, "canonical-finite-type", detail, !jet_exact);
    st.refute(2, "canonical-finite-type", detail, !jet_exact);
    st.refute(3, "canonical-finite-type", detail, !jet_exact);
    st.refute(4, "canonical-finite-type", detail, !jet_exact);
    st.refute(5, "canonical-finite-type", detail, !jet_exact);
  }

  // (5): a missing coordinate axis gives the flat axis curve
  if (!rep.conv.missing_axes.empty()) {
    int k = *rep.conv.missing_axes.begin();
    bool axis_known = jet_exact;
    std::string axis = variable_name(k, def.nvars_z, def.has_w);
    st.prove(5, "missing-axis",
             "support misses the " + axis + " axis; the axis curve is flat", !axis_known);
  }

  // (6): slab form
  if (rep.slab) {
    std::string axis = variable_name(*rep.slab, def.nvars_z, def.has_w);
    st.prove(6, "slab-form", "Newton polyhedron is the slab on the " + axis + " axis",
             !jet_exact);
  }

  // (7): Bloom-Graham type
  if (rep.bg_applicable) {
    if (rep.bg.kind == BGResult::Finite)
      st.refute(7, "bloom-graham-finite", "Bloom-Graham type = " + std::to_string(rep.bg.value));
    else if (rep.bg.kind == BGResult::Infinite)
      st.prove(7, "pure-complete", rep.bg.certificate);
    else if (rep.bg.jet_scope)
      st.prove(7, "pure-to-truncation", "no mixed terms up to the jet horizon", true);
  }

  // (3)/(4): tangency analysis
  TangencyOutcome tout = analyze_tangency(def, form, rep.polyhedron, rep.canon, budget);
  if (tout.v4 == Verdict::Proved) st.prove(4, tout.cert4, tout.det4, tout.jet4);
  if (tout.v3 == Verdict::Proved) st.prove(3, tout.cert3, tout.det3, tout.jet3);
  if (tout.v4 == Verdict::Refuted) st.refute(4, tout.cert4, tout.det4);
  if (tout.v3 == Verdict::Refuted && st.at(3).v == Verdict::Unknown)
    st.refute(3, tout.cert3, tout.det3);
  if (tout.witness)
    rep.notes.push_back("tangency witness: " + print_curve(*tout.witness));

  // (1)/(2): rule-certified ladders
  if (form.tag == FormTag::Model) {
    std::vector<CurveJet> ladder_bases;
    for (int k = 0; k < def.nvars_z; ++k) {
      std::vector<UniPoly> comps(def.nvars_z);
      UniPoly t1;
      t1.set(1, GaussianRational(1));
      comps[k] = t1;
      try {
        ladder_bases.push_back(make_curve(comps, CurveJet::ZCurve));
      } catch (const Error&) {
      }
    }
    for (size_t fi = 0; fi < rep.canon.per_face.size() && fi < rep.polyhedron.faces.size(); ++fi) {
      const auto& verdict = rep.canon.per_face[fi];
      if (verdict.kind != NondegeneracyVerdict::Degenerate || verdict.witness.empty()) continue;
      std::vector<UniPoly> comps(def.nvars_z);
      bool any = false;
      for (int v = 0; v < def.nvars_z; ++v) {
        if (verdict.witness[v].is_zero()) continue;
        UniPoly m;
        m.set(verdict.witness_weight[v], verdict.witness[v]);
        comps[v] = m;
        any = true;
      }
      if (!any) continue;
      try {
        ladder_bases.push_back(make_curve(comps, CurveJet::ZCurve, std::nullopt, true));
      } catch (const Error&) {
      }
    }
    for (auto& zhat : ladder_bases) {
      LadderCertificate lc = ladder_certificate(def, zhat);
      if (!lc.valid) continue;
      st.prove(1, "rule-ladder", lc.description);
      if (zhat.is_regular()) st.prove(2, "rule-ladder", lc.description);
      rep.notes.push_back("ladder base curve: " + print_curve(zhat));
      break;
    }
  }

  // (1)/(2): censored full-cancellation witnesses prove tangency to the jet
  // horizon (the jet cannot distinguish the curve from an infinite-order one)
  auto horizon_prove = [&](const TypeSearchResult& sr, int kcond) {
    if (!sr.has_bound || !sr.witness) return;
    if (sr.infinite) {
      st.prove(kcond, "exact-tangency-witness",
               "identically zero composition along " + print_curve(sr.witness->curve));
      return;
    }
    if (sr.witness->contact.censored()) {
      st.prove(kcond, "horizon-ladder",
               "composition cancels to the jet horizon along " +
                   print_curve(sr.witness->curve) + " (order >= " +
                   std::to_string(sr.witness->contact.order.value) + ")",
               true);
    }
  };
  horizon_prove(rep.search_full, 1);
  horizon_prove(rep.search_regular, 2);

  st.propagate();

  if (st.at(2).v == Verdict::Unknown && rep.search_regular.has_bound &&
      !rep.search_regular.infinite)
    rep.notes.push_back("regular type lower bound " + rat_str(rep.search_regular.bound) +
                        (rep.search_regular.exact ? " (exact: canonical)" : " (search)"));
  if (st.at(5).v == Verdict::Unknown && rep.conv.convenient)
    rep.notes.push_back("convenient in the supplied coordinate; condition (5) ranges over all "
                        "coordinates and stays open");

  rep.cond = st.c;
  if (!diagram_sound(rep.cond)) throw Error("Internal", "implication diagram violated");
  return rep;
}

// ---- Levi spot check ----------------------------------------------------

namespace {

// Jacobi eigenvalues of a real symmetric matrix (doubles; plumbing only).
std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

GaussianRational partial_z(const HermitianJet& f, int j, const std::vector<GaussianRational>& z) {
  GaussianRational acc;
  for (auto& [p, c] : f.coeffs) {
    if (!p.alpha[j]) continue;
    GaussianRational t = c * GaussianRational(Rat(p.alpha[j]));
    for (int i = 0; i < f.nvars; ++i) {
      int e = p.alpha[i] - (i == j ? 1 : 0);
      if (e) t *= z[i].pow(e);
      if (p.beta[i]) t *= z[i].conj().pow(p.beta[i]);
    }
    acc += t;
  }
  return acc;
}

GaussianRational partial_z_zbar(const HermitianJet& f, int j, int k,
                                const std::vector<GaussianRational>& z) {
  GaussianRational acc;
  for (auto& [p, c] : f.coeffs) {
    if (!p.alpha[j] || !p.beta[k]) continue;
    GaussianRational t = c * GaussianRational(Rat(p.alpha[j] * p.beta[k]));
    for (int i = 0; i < f.nvars; ++i) {
      int e = p.alpha[i] - (i == j ? 1 : 0);
      int eb = p.beta[i] - (i == k ? 1 : 0);
      if (e) t *= z[i].pow(e);
      if (eb) t *= z[i].conj().pow(eb);
    }
    acc += t;
  }
  return acc;
}

}  // namespace

std::vector<LeviSample> levi_spot_check(const DefiningFunction& def,
                                        const std::vector<std::vector<GaussianRational>>& points) {
  std::vector<LeviSample> out;
  int nv = def.total_vars();
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != nv) throw Error("DimensionMismatch", "Levi point dimension");
    LeviSample sample;
    sample.point = p;
    std::vector<GaussianRational> grad(nv);
    bool singular = true;
    for (int j = 0; j < nv; ++j) {
      grad[j] = partial_z(def.jet, j, p);
      if (!grad[j].is_zero()) singular = false;
    }
    if (singular) {
      sample.singular = true;
      out.push_back(std::move(sample));
      continue;
    }
    int pivot = 0;
    double best = -1;
    for (int j = 0; j < nv; ++j) {
      double mag = grad[j].norm().get_d();
      if (mag > best) {
        best = mag;
        pivot = j;
      }
    }
    // tangent basis e_k - (r_k / r_pivot) e_pivot, k != pivot
    std::vector<std::vector<std::pair<double, double>>> basis;
    auto to_c = [](const GaussianRational& g) {
      return std::make_pair(g.to_double_re(), g.to_double_im());
    };
    auto cdiv = [](std::pair<double, double> a, std::pair<double, double> b) {
      double d = b.first * b.first + b.second * b.second;
      return std::make_pair((a.first * b.first + a.second * b.second) / d,
                            (a.second * b.first - a.first * b.second) / d);
    };
    for (int k = 0; k < nv; ++k) {
      if (k == pivot) continue;
      std::vector<std::pair<double, double>> v(nv, {0, 0});
      v[k] = {1, 0};
      auto ratio = cdiv(to_c(grad[k]), to_c(grad[pivot]));
      v[pivot] = {-ratio.first, -ratio.second};
      basis.push_back(std::move(v));
    }
    int m = static_cast<int>(basis.size());
    // restricted complex Hessian
    std::vector<std::vector<std::pair<double, double>>> L(nv,
                                                          std::vector<std::pair<double, double>>(nv));
    for (int j = 0; j < nv; ++j)
      for (int k = 0; k < nv; ++k) L[j][k] = to_c(partial_z_zbar(def.jet, j, k, p));
    std::vector<std::vector<std::pair<double, double>>> H(m,
                                                          std::vector<std::pair<double, double>>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double re = 0, im = 0;
        for (int j = 0; j < nv; ++j)
          for (int k = 0; k < nv; ++k) {
            // basis[a]_j * L_jk * conj(basis[b]_k)
            auto& va = basis[a][j];
            auto& vb = basis[b][k];
            double lre = L[j][k].first, lim = L[j][k].second;
            double t1re = va.first * lre - va.second * lim;
            double t1im = va.first * lim + va.second * lre;
            re += t1re * vb.first + t1im * vb.second;
            im += t1im * vb.first - t1re * vb.second;
          }
        H[a][b] = {re, im};
      }
    // real symmetric embedding [[A, -B], [B, A]]
    std::vector<std::vector<double>> E(2 * m, std::vector<double>(2 * m, 0.0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        E[a][b] = H[a][b].first;
        E[a][m + b] = -H[a][b].second;
        E[m + a][b] = H[a][b].second;
        E[m + a][m + b] = H[a][b].first;
      }
    auto eig = sym_eigenvalues(E);
    // eigenvalues appear twice in the embedding; keep one of each pair
    for (size_t i = 0; i + 1 < eig.size(); i += 2) sample.eigenvalues.push_back(eig[i + 1]);
    if (m == 0) sample.eigenvalues.clear();
    out.push_back(std::move(sample));
  }
  return out;
}

std::vector<std::vector<GaussianRational>> default_levi_points(const DefiningFunction& def) {
  std::vector<std::vector<GaussianRational>> pts;
  if (!def.has_w) return pts;
  int nv = def.total_vars();
  int nz = def.nvars_z;
  std::vector<GaussianRational> vals = {GaussianRational(Rat(1, 4)),
                                        GaussianRational(Rat(-1, 4)),
                                        GaussianRational(Rat(0), Rat(1, 4))};
  for (size_t vi = 0; vi < vals.size(); ++vi) {
    std::vector<GaussianRational> p(nv);
    for (int k = 0; k < nz; ++k) p[k] = vals[(vi + k) % vals.size()];
    // put the point on {r = 0}: 2 Re(w) = -F(z)
    HermitianJet zonly = jet_kill_vars(def.jet, {def.w_index()});
    GaussianRational F = evaluate(zonly, p);
    p[def.w_index()] = GaussianRational(-F.re / 2);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace germtype
