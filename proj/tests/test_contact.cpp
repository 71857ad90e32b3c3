#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germtype/contact.hpp"
#include "germtype/parser.hpp"
#include "germtype/series.hpp"
#include "support/testrng.hpp"

using namespace germtype;
using testsupport::Rng;

namespace {

const std::string kCuspModel10 =
    "2*Re(w) + |z1^3 - z2^2|^2 + 2*Re(z1^8) + 2*Re(z1^9) + 2*Re(z1^10)";

DefiningFunction cusp_jet(int N) {
  // Eq-(6.7)-style data: polynomial part with c_8..c_N = 1 and an unknown
  // pure z1 tail beyond degree N
  std::string expr = "2*Re(w) + |z1^3 - z2^2|^2";
  for (int j = 8; j <= N; ++j) expr += " + 2*Re(z1^" + std::to_string(j) + ")";
  return parse_defining_function("# T=" + std::to_string(N) + " tail=z1:unknown\n" + expr);
}

// naive independent composition: expand each jet term by repeated explicit
// polynomial multiplication over dense arrays
std::map<std::pair<long, long>, GaussianRational> naive_compose(const HermitianJet& r,
                                                                const CurveJet& g) {
  std::map<std::pair<long, long>, GaussianRational> out;
  for (auto& [pair, coeff] : r.coeffs) {
    std::vector<GaussianRational> hol = {GaussianRational(1)};
    std::vector<GaussianRational> anti = {GaussianRational(1)};
    auto mul_into = [](std::vector<GaussianRational>& acc,
                       const std::vector<GaussianRational>& f) {
      std::vector<GaussianRational> res(acc.size() + f.size() - 1);
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) res[i + j] += acc[i] * f[j];
      acc = std::move(res);
    };
    bool dead = false;
    for (int v = 0; v < r.nvars && !dead; ++v) {
      for (int e = 0; e < pair.alpha[v]; ++e) {
        if (g.comp[v].is_zero()) {
          dead = true;
          break;
        }
        mul_into(hol, g.comp[v].c);
      }
      for (int e = 0; e < pair.beta[v] && !dead; ++e) {
        if (g.comp[v].is_zero()) {
          dead = true;
          break;
        }
        std::vector<GaussianRational> f(g.comp[v].c);
        for (auto& x : f) x = x.conj();
        mul_into(anti, f);
      }
    }
    if (dead) continue;
    for (size_t p = 0; p < hol.size(); ++p)
      for (size_t q = 0; q < anti.size(); ++q) {
        auto v = coeff * hol[p] * anti[q];
        if (v.is_zero()) continue;
        auto key = std::make_pair(static_cast<long>(p), static_cast<long>(q));
        out[key] += v;
        if (out[key].is_zero()) out.erase(key);
      }
  }
  return out;
}

}  // namespace

TEST_CASE("compose basics") {
  auto def = parse_defining_function("2*Re(w) + |z1|^6");
  auto g = parse_curve("(t, 0)");
  auto res = compose(def.jet, g);
  REQUIRE(res.series.c.size() == 1);
  CHECK(res.series.c.begin()->first == std::make_pair(3L, 3L));
  CHECK_FALSE(res.valid_to.has_value());

  auto lin = parse_defining_function("# n=1\n2*Re(w)");
  auto diag = parse_curve("(t, t)");
  auto res2 = compose(lin.jet, diag);
  REQUIRE(res2.series.c.size() == 2);
  CHECK(res2.series.c.count({1, 0}) == 1);
  CHECK(res2.series.c.count({0, 1}) == 1);

  CHECK_THROWS_AS(compose(def.jet, parse_curve("(t, t, t)")), Error);
}

TEST_CASE("lemma 6.7 curve cancels to the jet horizon") {
  auto def = cusp_jet(10);
  auto g = parse_curve("(t^2, t^3, -(t^16 + t^18 + t^20))");
  auto res = compose(def.jet, g);
  CHECK(res.series.is_zero());
  REQUIRE(res.valid_to.has_value());
  CHECK(*res.valid_to == 21);

  auto cr = contact_order(def.jet, g);
  CHECK(cr.order.kind == ContactOrder::AtLeast);
  CHECK(cr.order.value == 22);
  CHECK(cr.curve_ord == 2);
  CHECK(cr.ratio_value() == Rat(11));
}

TEST_CASE("contact orders on the truncated cusp model") {
  auto def = cusp_jet(10);
  auto a = contact_order(def.jet, parse_curve("(t^2, t^3, 0)"));
  REQUIRE(a.order.kind == ContactOrder::Finite);
  CHECK(a.order.value == 16);
  CHECK(a.ratio_value() == Rat(8));

  auto b = contact_order(def.jet, parse_curve("(0, t, 0)"));
  REQUIRE(b.order.kind == ContactOrder::Finite);
  CHECK(b.order.value == 4);
  CHECK(b.ratio_value() == Rat(4));

  auto c = contact_order(def.jet, parse_curve("(t, 0, 0)"));
  REQUIRE(c.order.kind == ContactOrder::Finite);
  CHECK(c.order.value == 6);
}

TEST_CASE("cancellation law with random coefficients and perturbations") {
  Rng rng(333);
  for (int N = 8; N <= 10; ++N) {
    std::vector<Rat> cs;
    std::string expr = "2*Re(w) + |z1^3 - z2^2|^2";
    for (int j = 8; j <= N; ++j) {
      long num = rng.range(1, 9);
      long den = rng.range(1, 4);
      Rat c(num, den);
      c.canonicalize();
      cs.push_back(c);
      expr += " + 2*Re(" + rat_str(c) + "*z1^" + std::to_string(j) + ")";
    }
    auto def = parse_defining_function("# T=" + std::to_string(N) + " tail=z1:unknown\n" + expr);

    std::vector<UniPoly> comps(3);
    comps[0].set(2, GaussianRational(1));
    comps[1].set(3, GaussianRational(1));
    for (int j = 8; j <= N; ++j) comps[2].set(2 * j, GaussianRational(-cs[j - 8]));
    auto gamma = make_curve(comps, CurveJet::Full);
    auto cr = contact_order(def.jet, gamma);
    CHECK(cr.order.kind == ContactOrder::AtLeast);
    CHECK(cr.order.value == 2 * N + 2);

    for (int j = 8; j <= N; ++j) {
      auto perturbed = comps;
      Rat eps(rng.range(1, 5), rng.range(1, 3));
      eps.canonicalize();
      perturbed[2].set(2 * j, perturbed[2].at(2 * j) + GaussianRational(eps));
      auto pc = contact_order(def.jet, make_curve(perturbed, CurveJet::Full));
      REQUIRE(pc.order.kind == ContactOrder::Finite);
      CHECK(pc.order.value == 2 * j);
    }
  }
}

TEST_CASE("compose agrees with the naive oracle") {
  Rng rng(77);
  for (int it = 0; it < 100; ++it) {
    int nv = 1 + static_cast<int>(rng.below(3));
    HermitianJet jet;
    jet.nvars = nv;
    jet.complete = true;
    jet.truncation = 8;
    for (int t = 0, terms = 1 + static_cast<int>(rng.below(4)); t < terms; ++t) {
      Exponent a(nv, 0), b(nv, 0);
      for (;;) {
        for (int i = 0; i < nv; ++i) {
          a[i] = static_cast<int>(rng.below(3));
          b[i] = static_cast<int>(rng.below(3));
        }
        long long d = degree(a) + degree(b);
        if (d > 0 && d <= 8) break;
      }
      auto c = rng.gr(4, 2);
      if (a == b) c.im = 0;
      if (c.is_zero()) continue;
      ExponentPair p{a, b};
      auto cur = jet.coeff(p);
      jet.set_coeff(p, cur + c);
      jet.set_coeff(p.swapped(), (cur + c).conj());
    }
    std::vector<UniPoly> comps(nv);
    bool any = false;
    for (auto& comp : comps) {
      for (int t = 0, terms = static_cast<int>(rng.below(3)); t < terms; ++t) {
        comp.set(rng.range(1, 4), rng.gr(3, 2));
      }
      if (!comp.is_zero()) any = true;
    }
    if (!any || jet.is_zero()) continue;
    CurveJet g;
    try {
      g = make_curve(comps, CurveJet::Full, std::nullopt, true);
    } catch (const Error&) {
      continue;
    }
    auto mine = compose(jet, g);
    auto oracle = naive_compose(jet, g);
    CHECK(mine.series.c == oracle);
  }
}

TEST_CASE("S series extraction") {
  auto a = z_part(parse_defining_function("2*Re(w) + 2*Re(z1^3) + 2*Re(z1^5)"));
  auto sa = extract_S(a);
  CHECK(sa.S.coeffs.size() == 2);
  CHECK(sa.S.coeffs.at(Exponent{3}) == GR(1));
  CHECK(sa.mixed.is_zero());
  CHECK(sa.mixed_order.infinite);

  auto b = z_part(parse_defining_function(kCuspModel10));
  auto sb = extract_S(b);
  CHECK(sb.S.coeffs.size() == 3);
  CHECK(sb.S.coeffs.count(Exponent{8, 0}) == 1);
  CHECK(sb.S.coeffs.count(Exponent{10, 0}) == 1);
  // |z1^3 - z2^2|^2 is the obstruction; its lowest term is |z2|^4
  CHECK_FALSE(sb.mixed_order.infinite);
  CHECK(sb.mixed_order.value == 4);

  auto c = z_part(parse_defining_function("2*Re(w) + |z1|^2"));
  auto sc = extract_S(c);
  CHECK(sc.S.coeffs.empty());
  CHECK(sc.mixed_order.value == 2);
}

TEST_CASE("compose_S") {
  SSeries s;
  s.nvars = 2;
  s.complete = true;
  s.truncation = 2;
  s.coeffs[Exponent{1, 1}] = GaussianRational(1);
  auto g = parse_curve("(t, t^2)", CurveJet::ZCurve);
  auto r = compose_S(s, g);
  CHECK(r.poly.ord() == 3);
  CHECK(r.poly.deg() == 3);

  auto sb = extract_S(z_part(parse_defining_function(kCuspModel10)));
  auto g2 = parse_curve("(t^2, t^3)", CurveJet::ZCurve);
  auto r2 = compose_S(sb.S, g2);
  CHECK(r2.poly.at(16) == GR(1));
  CHECK(r2.poly.at(18) == GR(1));
  CHECK(r2.poly.at(20) == GR(1));
  CHECK(r2.poly.deg() == 20);
  CHECK(r2.poly.ord() == 16);

  SSeries zero;
  zero.nvars = 1;
  zero.complete = true;
  auto r3 = compose_S(zero, parse_curve("(t)", CurveJet::ZCurve));
  CHECK(r3.poly.is_zero());
}

TEST_CASE("tangency witnesses") {
  auto def = parse_defining_function("2*Re(w) + 2*Re(z1^3)");
  auto tw = tangency_witness(def, parse_curve("(t)", CurveJet::ZCurve), 20);
  REQUIRE(tw.ok);
  CHECK(tw.contact.infinite());
  REQUIRE(tw.gamma.comp.size() == 2);
  CHECK(tw.gamma.comp[1].at(3) == GR(-1));

  auto cusp = parse_defining_function(kCuspModel10);
  auto tw2 = tangency_witness(cusp, parse_curve("(t^2, t^3)", CurveJet::ZCurve), 20);
  REQUIRE(tw2.ok);
  CHECK(tw2.contact.infinite());  // exact polynomial data cancels identically
  CHECK(tw2.gamma.comp[2].at(16) == GR(-1));
  CHECK(tw2.gamma.comp[2].at(18) == GR(-1));
  CHECK(tw2.gamma.comp[2].at(20) == GR(-1));

  auto flat = parse_defining_function("2*Re(w) + |z1|^2");
  auto tw3 = tangency_witness(flat, parse_curve("(t)", CurveJet::ZCurve), 2);
  CHECK_FALSE(tw3.ok);
  CHECK(tw3.obstruction_degree == 2);
}

TEST_CASE("radius verdicts") {
  SSeries fact;
  fact.nvars = 1;
  fact.complete = true;
  fact.truncation = 4;
  fact.tails[0] = TailRule{TailRule::PowerFactorial, Rat(1), 1, 2};
  CHECK(radius_verdict(fact).kind == RadiusVerdict::Zero);

  SSeries geo = fact;
  geo.tails[0] = TailRule{TailRule::Geometric, Rat(2), 1, 2};
  auto gv = radius_verdict(geo);
  CHECK(gv.kind == RadiusVerdict::Positive);
  REQUIRE(gv.radius.has_value());
  CHECK(*gv.radius == Rat(1, 2));

  geo.tails[0] = TailRule{TailRule::Geometric, Rat(1), 1, 2};
  auto gv1 = radius_verdict(geo);
  REQUIRE(gv1.radius.has_value());
  CHECK(*gv1.radius == Rat(1));

  SSeries finite;
  finite.nvars = 1;
  finite.complete = false;
  finite.truncation = 6;
  finite.coeffs[Exponent{3}] = GaussianRational(1);
  CHECK(radius_verdict(finite).kind == RadiusVerdict::UnknownFiniteJet);

  // two factorial variables: nowhere convergent
  SSeries both;
  both.nvars = 2;
  both.complete = true;
  both.truncation = 4;
  both.tails[0] = TailRule{TailRule::PowerFactorial, Rat(1), 1, 2};
  both.tails[1] = TailRule{TailRule::PowerFactorial, Rat(1), 1, 2};
  CHECK(radius_verdict(both).kind == RadiusVerdict::Zero);

  // composed with a curve that only reaches the factorial variable
  auto g = parse_curve("(t^2, t^3)", CurveJet::ZCurve);
  SSeries mixed;
  mixed.nvars = 2;
  mixed.complete = true;
  mixed.truncation = 10;
  mixed.coeffs[Exponent{8, 0}] = GaussianRational(1);
  mixed.tails[0] = TailRule{TailRule::PowerFactorial, Rat(1), 1, 11};
  CHECK(radius_verdict(mixed, &g).kind == RadiusVerdict::Zero);
}

TEST_CASE("theorem 5.5 roundtrip at jet level") {
  Rng rng(555);
  int done = 0;
  for (int it = 0; it < 400 && done < 100; ++it) {
    int nz = 1 + static_cast<int>(rng.below(2));
    HoloPoly h;
    h.nvars = nz;
    for (int t = 0, terms = 1 + static_cast<int>(rng.below(4)); t < terms; ++t) {
      Exponent a(nz, 0);
      for (;;) {
        for (int i = 0; i < nz; ++i) a[i] = static_cast<int>(rng.below(7));
        long long d = degree(a);
        if (d >= 2 && d <= 12) break;
      }
      auto c = rng.gr(5, 3);
      if (c.is_zero()) continue;
      h.coeffs[a] = c;
    }
    if (h.coeffs.empty()) continue;
    ++done;

    // F = 2 Re(h) as a model germ
    HermitianJet F2 = two_re(h);
    HermitianJet jet;
    jet.nvars = nz + 1;
    jet.complete = true;
    Exponent zero(nz + 1, 0);
    jet.coeffs[ExponentPair{unit_exp(nz + 1, nz), zero}] = GaussianRational(1);
    jet.coeffs[ExponentPair{zero, unit_exp(nz + 1, nz)}] = GaussianRational(1);
    for (auto& [p, c] : F2.coeffs) {
      Exponent a = p.alpha, b = p.beta;
      a.push_back(0);
      b.push_back(0);
      jet.coeffs[ExponentPair{a, b}] = c;
    }
    long long md = 1;
    for (auto& [p, c] : jet.coeffs) md = std::max(md, p.order());
    jet.truncation = static_cast<int>(md);
    DefiningFunction def;
    def.nvars_z = nz;
    def.has_w = true;
    def.jet = jet;

    // recovered coefficients equal those of h
    auto se = extract_S(z_part(def));
    CHECK(se.S.coeffs == h.coeffs);
    CHECK(se.mixed.is_zero());

    // the witness curve cancels identically
    std::vector<UniPoly> comps(nz);
    comps[0].set(1, GaussianRational(1));
    for (int k = 1; k < nz; ++k) comps[k].set(rng.range(1, 3), rng.gr_nonzero(3, 2));
    CurveJet zhat;
    try {
      zhat = make_curve(comps, CurveJet::ZCurve, std::nullopt, true);
    } catch (const Error&) {
      --done;
      continue;
    }
    auto tw = tangency_witness(def, zhat, 200);
    REQUIRE(tw.ok);
    CHECK(tw.contact.infinite());

    // compose_S after extract_S reproduces h along the curve
    auto sg = compose_S(se.S, zhat);
    auto naive = compose_S(SSeries{nz, h.coeffs, static_cast<int>(md), true, {}}, zhat);
    CHECK(sg.poly == naive.poly);
  }
  CHECK(done == 100);
}

TEST_CASE("curve regularity and parametrization") {
  CHECK(parse_curve("(t, -t^3)").is_regular());
  CHECK_FALSE(parse_curve("(t^2, t^3, 0)").is_regular());
  CHECK_THROWS_WITH_AS(parse_curve("(t^2, t^4)"), doctest::Contains("not good"), Error);
  CHECK_THROWS_AS(parse_curve("(0, 0)"), Error);
  CHECK_THROWS_AS(parse_curve("(t + 1, t^2)"), Error);

  auto g = parse_curve("gamma = (t^2, t^3, -(t^16+t^18+t^20)) valid 40");
  REQUIRE(g.comp.size() == 3);
  CHECK(g.validity == 40);
  CHECK(g.comp[2].at(18) == GR(-1));
  CHECK(g.ord() == 2);

  auto n = make_curve({UniPoly{{GaussianRational(0), GaussianRational(0), GaussianRational(1)}},
                       UniPoly{{GaussianRational(0), GaussianRational(0), GaussianRational(0),
                                GaussianRational(0), GaussianRational(2)}}},
                      CurveJet::ZCurve, std::nullopt, true);
  CHECK(n.comp[0].ord() == 1);  // (t^2, 2t^4) normalizes to (t, 2t^2)
}

TEST_CASE("incomplete jets censor compositions") {
  auto def = parse_defining_function("# T=4\n|z1|^2 - |z1|^2");
  auto cr = contact_order(def.jet, parse_curve("(t)"));
  CHECK(cr.order.kind == ContactOrder::AtLeast);
  CHECK(cr.order.value == 5);

  // a complete zero jet composes to exactly zero whatever the curve validity
  auto zero = parse_defining_function("|z1|^2 - |z1|^2");
  auto cz = contact_order(zero.jet, parse_curve("(t) valid 7"));
  CHECK(cz.order.kind == ContactOrder::InfiniteZero);
}

TEST_CASE("ladder certificates") {
  // factorial-tailed cusp model: the Lemma 6.7 family is rule-certified
  std::string expr = "2*Re(w) + |z1^3 - z2^2|^2";
  for (int j = 8; j <= 12; ++j) {
    mpz_class f = 1;
    for (int i = 2; i <= j; ++i) f *= i;
    expr += " + 2*Re(" + f.get_str() + "*z1^" + std::to_string(j) + ")";
  }
  auto def = parse_defining_function("# T=12 tail=z1:factorial:1:8\n" + expr);
  auto zhat = parse_curve("(t^2, t^3)", CurveJet::ZCurve);
  auto cert = ladder_certificate(def, zhat);
  CHECK(cert.valid);
  CHECK(cert.exact_orders);
  CHECK(cert.ruled_var == 0);
  CHECK(cert.ord_gamma == 2);

  // exact orders 2N+2 for the first few rungs
  auto se = extract_S(z_part(def));
  for (int N = 8; N <= 10; ++N) {
    auto s = compose_S(se.S, zhat, 2 * N + 4);
    UniPoly h = uni_truncate(s.poly, 2 * N);
    std::vector<UniPoly> comps = zhat.comp;
    comps.push_back(uni_neg(h));
    auto cr = contact_order(def.jet, make_curve(comps, CurveJet::Full));
    REQUIRE(cr.order.kind == ContactOrder::Finite);
    CHECK(cr.order.value == 2 * N + 2);
  }

  // no certificate along a curve missing the ruled variable
  auto cert2 = ladder_certificate(def, parse_curve("(0, t)", CurveJet::ZCurve));
  CHECK_FALSE(cert2.valid);
}
