#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germtype/jet.hpp"
#include "support/testrng.hpp"

using namespace germtype;
using testsupport::Rng;

namespace {

ExponentPair ep(std::vector<int> a, std::vector<int> b) { return ExponentPair{a, b}; }

HermitianJet random_jet(Rng& rng, int n, int T, int terms) {
  HermitianJet f;
  f.nvars = n;
  f.truncation = T;
  f.complete = true;
  for (int t = 0; t < terms; ++t) {
    Exponent a(n, 0), b(n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i) {
        a[i] = static_cast<int>(rng.below(3));
        b[i] = static_cast<int>(rng.below(3));
      }
      if (degree(a) + degree(b) <= T && degree(a) + degree(b) > 0) break;
    }
    GaussianRational c = rng.gr(6, 3);
    if (a == b) c.im = 0;
    if (c.is_zero()) continue;
    ExponentPair p{a, b};
    auto cur = f.coeff(p);
    f.set_coeff(p, cur + c);
    f.set_coeff(p.swapped(), (cur + c).conj());
  }
  return f;
}

HoloPoly random_holo(Rng& rng, int n, int maxdeg, int terms) {
  HoloPoly h;
  h.nvars = n;
  for (int t = 0; t < terms; ++t) {
    Exponent a(n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i) a[i] = static_cast<int>(rng.below(maxdeg + 1));
      if (degree(a) <= maxdeg && degree(a) >= 1) break;
    }
    auto c = rng.gr(5, 3);
    if (c.is_zero()) continue;
    auto it = h.coeffs.find(a);
    if (it == h.coeffs.end())
      h.coeffs[a] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) h.coeffs.erase(it);
    }
  }
  return h;
}

std::vector<GaussianRational> random_point(Rng& rng, int n) {
  std::vector<GaussianRational> z;
  for (int i = 0; i < n; ++i) z.push_back(rng.gr(4, 3));
  return z;
}

// the hand expansion of |z1^3 - z2^2|^2
HermitianJet cusp_jet() {
  return build_jet(2,
                   {{ep({3, 0}, {3, 0}), GR(1)},
                    {ep({3, 0}, {0, 2}), GR(-1)},
                    {ep({0, 2}, {3, 0}), GR(-1)},
                    {ep({0, 2}, {0, 2}), GR(1)}},
                   12);
}

}  // namespace

TEST_CASE("build_jet basics") {
  auto f = build_jet(1, {{ep({1}, {1}), GR(1)}}, 4);
  CHECK(f.coeffs.size() == 1);
  CHECK(f.coeff(ep({1}, {1})) == GR(1));

  CHECK_THROWS_WITH_AS(build_jet(1, {{ep({2}, {0}), GR::unit_i()}}, 4), doctest::Contains("conjugate"),
                       Error);
  auto g = build_jet(1, {{ep({2}, {0}), GR::unit_i()}}, 4, /*symmetrize=*/true);
  CHECK(g.coeffs.size() == 2);
  CHECK(g.coeff(ep({0}, {2})) == GR::unit_i().conj());

  auto cusp = cusp_jet();
  CHECK(cusp.coeffs.size() == 4);

  CHECK_THROWS_AS(build_jet(1, {{ep({3}, {3}), GR(1)}}, 4), Error);          // DegreeOverflow
  CHECK_THROWS_AS(build_jet(2, {{ep({1}, {1}), GR(1)}}, 4), Error);          // DimensionMismatch
  CHECK_THROWS_AS(build_jet(1, {{ep({2}, {0}), GR(1)}, {ep({0}, {2}), GR(2)}}, 4), Error);
}

TEST_CASE("add and mul") {
  auto zsq = build_jet(1, {{ep({1}, {1}), GR(1)}}, 4);
  auto s = jet_add(zsq, zsq);
  CHECK(s.coeff(ep({1}, {1})) == GR(2));

  // (z + zbar)^2 = z^2 + 2|z|^2 + zbar^2
  auto re2 = build_jet(1, {{ep({1}, {0}), GR(1)}, {ep({0}, {1}), GR(1)}}, 8);
  auto sq = jet_mul(re2, re2);
  CHECK(sq.coeff(ep({2}, {0})) == GR(1));
  CHECK(sq.coeff(ep({1}, {1})) == GR(2));
  CHECK(sq.coeff(ep({0}, {2})) == GR(1));
  CHECK(sq.coeffs.size() == 3);
}

TEST_CASE("squared modulus") {
  HoloPoly z1{1, {{{1}, GR(1)}}};
  auto m = squared_modulus(z1);
  CHECK(m.coeffs.size() == 1);
  CHECK(m.coeff(ep({1}, {1})) == GR(1));

  HoloPoly iz{1, {{{1}, GR::unit_i()}}};
  CHECK(squared_modulus(iz).coeff(ep({1}, {1})) == GR(1));  // phase invariance

  HoloPoly h{2, {{{3, 0}, GR(1)}, {{0, 2}, GR(-1)}}};
  CHECK(squared_modulus(h).coeffs == cusp_jet().coeffs);
}

TEST_CASE("pure/mixed split") {
  // 2Re(z^3) + |z|^4
  auto f = build_jet(1, {{ep({3}, {0}), GR(1)}, {ep({0}, {3}), GR(1)}, {ep({2}, {2}), GR(1)}}, 6);
  auto [pure, mixed] = pure_mixed_split(f);
  CHECK(pure.coeffs.size() == 2);
  CHECK(mixed.coeffs.size() == 1);
  CHECK(mixed.coeff(ep({2}, {2})) == GR(1));

  auto cusp = cusp_jet();
  auto [p2, m2] = pure_mixed_split(cusp);
  CHECK(p2.is_zero());
  CHECK(m2.coeffs == cusp.coeffs);

  HermitianJet zero;
  zero.nvars = 1;
  auto [p3, m3] = pure_mixed_split(zero);
  CHECK(p3.is_zero());
  CHECK(m3.is_zero());
}

TEST_CASE("vanishing order") {
  auto f = build_jet(1, {{ep({3}, {3}), GR(1)}}, 8);
  CHECK(vanishing_order(f).value == 6);

  auto g = build_jet(2, {{ep({0, 1}, {0, 0}), GR(1)}, {ep({0, 0}, {0, 1}), GR(1)}, {ep({3, 0}, {3, 0}), GR(1)}}, 8);
  CHECK(vanishing_order(g).value == 1);

  HermitianJet zero;
  zero.nvars = 1;
  zero.truncation = 12;
  zero.complete = false;
  auto o = vanishing_order(zero);
  CHECK(o.infinite);
  CHECK(o.witnessed_to == 12);
}

TEST_CASE("reality of evaluation") {
  Rng rng(42);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + static_cast<int>(rng.below(3));
    auto f = random_jet(rng, n, 8, 6);
    auto z = random_point(rng, n);
    CHECK(evaluate(f, z).is_real());
  }
}

TEST_CASE("ring laws") {
  Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng.below(2));
    auto a = random_jet(rng, n, 10, 4);
    auto b = random_jet(rng, n, 10, 4);
    auto c = random_jet(rng, n, 10, 4);
    CHECK(jet_add(a, b).coeffs == jet_add(b, a).coeffs);
    CHECK(jet_mul(a, b).coeffs == jet_mul(b, a).coeffs);
    CHECK(jet_mul(jet_mul(a, b), c).coeffs == jet_mul(a, jet_mul(b, c)).coeffs);
    CHECK(jet_mul(a, jet_add(b, c)).coeffs == jet_add(jet_mul(a, b), jet_mul(a, c)).coeffs);
  }
}

TEST_CASE("split is idempotent and reassembles") {
  Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    auto f = random_jet(rng, 2, 8, 6);
    auto [pure, mixed] = pure_mixed_split(f);
    auto [pp, pm] = pure_mixed_split(pure);
    CHECK(pp.coeffs == pure.coeffs);
    CHECK(pm.is_zero());
    CHECK(jet_add(pure, mixed).coeffs == f.coeffs);
  }
}

TEST_CASE("squared modulus agrees with |h(p)|^2") {
  Rng rng(13);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng.below(2));
    auto h = random_holo(rng, n, 4, 4);
    auto m = squared_modulus(h);
    auto z = random_point(rng, n);
    auto hv = evaluate(h, z);
    auto mv = evaluate(m, z);
    CHECK(mv.is_real());
    CHECK(mv.re == hv.norm());
  }
}

TEST_CASE("hermitian symmetry is preserved by arithmetic") {
  Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    auto a = random_jet(rng, 2, 8, 5);
    auto b = random_jet(rng, 2, 8, 5);
    for (auto* f : {&a, &b})
      for (auto& [p, c] : f->coeffs) CHECK(f->coeff(p.swapped()) == c.conj());
    auto m = jet_mul(a, b);
    for (auto& [p, c] : m.coeffs) CHECK(m.coeff(p.swapped()) == c.conj());
  }
}

TEST_CASE("truncation bookkeeping under mul") {
  // incomplete jets: faithful through min(T_f + ord g, T_g + ord f)
  auto f = jet_truncate(build_jet(1, {{ep({1}, {1}), GR(1)}}, 4), 4);
  auto g = jet_truncate(build_jet(1, {{ep({2}, {2}), GR(1)}}, 6), 6);
  auto m = jet_mul(f, g);
  CHECK_FALSE(m.complete);
  CHECK(m.truncation == std::min(4 + 4, 6 + 2));
  CHECK(m.coeff(ep({3}, {3})) == GR(1));
}

TEST_CASE("pure coefficient lookup consults tails") {
  HermitianJet f;
  f.nvars = 1;
  f.truncation = 4;
  f.complete = true;
  f.tails[0] = TailRule{TailRule::PowerFactorial, Rat(1), 1, 5};
  CHECK(f.pure_coeff(0, 6).re == Rat(720));
  f.tails[0].kind = TailRule::Unknown;
  CHECK_THROWS_AS(f.pure_coeff(0, 6), Error);

  TailRule geo{TailRule::Geometric, Rat(1, 2), 1, 2};
  CHECK(geo.coeff(3) == Rat(1, 8));
  TailRule pr{TailRule::PolynomialRate, Rat(1), 3, 2};
  CHECK(pr.coeff(4) == Rat(64));
}
