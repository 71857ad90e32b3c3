#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "germtype/newton.hpp"
#include "support/oracle_hull.hpp"
#include "support/testrng.hpp"

using namespace germtype;
using testsupport::Rng;

namespace {

SupportSet S(std::initializer_list<Exponent> pts) { return SupportSet(pts); }

const Facet* find_facet(const NewtonPolyhedron& P, const Weight& normal) {
  for (auto& f : P.facets)
    if (f.normal == normal) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("cusp support hull in the plane") {
  auto P = hull(S({{6, 0}, {0, 4}, {3, 2}}), 2);
  REQUIRE(P.facets.size() == 3);
  auto* f = find_facet(P, {2, 3});
  REQUIRE(f != nullptr);
  CHECK(f->level == 12);
  CHECK(f->compact);
  CHECK(f->tight_points.size() == 3);  // (3,2) lies on the facet
  CHECK(P.vertices == std::vector<Exponent>{{0, 4}, {6, 0}});
}

TEST_CASE("theorem 6.6 polyhedron") {
  SupportSet s{{0, 0, 1}, {6, 0, 0}, {3, 2, 0}, {0, 4, 0}, {8, 0, 0}, {9, 0, 0}, {10, 0, 0}};
  auto P = hull(s, 3);
  int compact_facets = 0;
  for (auto& f : P.facets) compact_facets += f.compact ? 1 : 0;
  CHECK(compact_facets == 1);
  auto* f = find_facet(P, {2, 3, 12});
  REQUIRE(f != nullptr);
  CHECK(f->level == 12);
  CHECK(P.vertices == std::vector<Exponent>{{0, 0, 1}, {0, 4, 0}, {6, 0, 0}});

  // seven compact faces: 3 vertices, 3 edges, the facet
  CHECK(P.faces.size() == 7);
  int n_by_dim[3] = {0, 0, 0};
  for (auto& face : P.faces) n_by_dim[face.dim]++;
  CHECK(n_by_dim[0] == 3);
  CHECK(n_by_dim[1] == 3);
  CHECK(n_by_dim[2] == 1);

  // kappa_0: the edge between (6,0,0) and (0,4,0), (2,3,12)-based weights
  const Face* kappa0 = nullptr;
  for (auto& face : P.faces)
    if (face.dim == 1 && face.vertex_points == std::vector<Exponent>{{0, 4, 0}, {6, 0, 0}})
      kappa0 = &face;
  REQUIRE(kappa0 != nullptr);
  CHECK(kappa0->support_points == std::vector<Exponent>{{0, 4, 0}, {3, 2, 0}, {6, 0, 0}});
  CHECK(std::count(kappa0->weight_generators.begin(), kappa0->weight_generators.end(),
                   Weight{2, 3, 12}) == 1);
  CHECK(kappa0->canonical_weight == Weight{2, 3, 13});
  CHECK(kappa0->canonical_level == 12);
}

TEST_CASE("one variable") {
  auto P = hull(S({{2}}), 1);
  REQUIRE(P.facets.size() == 1);
  CHECK(P.facets[0].normal == Weight{1});
  CHECK(P.facets[0].level == 2);
  CHECK(P.vertices == std::vector<Exponent>{{2}});
  REQUIRE(P.faces.size() == 1);
  CHECK(P.faces[0].dim == 0);
}

TEST_CASE("model |z1|^6 faces") {
  // 2Re(w) + |z1|^6 over (z1, w): support {(6,0),(0,1)}
  auto P = hull(S({{6, 0}, {0, 1}}), 2);
  REQUIRE(P.faces.size() == 3);
  CHECK(P.faces[0].dim == 0);
  CHECK(P.faces[1].dim == 0);
  CHECK(P.faces[2].dim == 1);
  CHECK(P.faces[2].canonical_weight == Weight{1, 6});
  CHECK(P.faces[2].support_points.size() == 2);
}

TEST_CASE("slab polyhedron keeps its corner vertex") {
  // conv((0,1) + R_+^2) = { xi_1 >= 0, xi_2 >= 1 }; the corner (0,1) is a
  // compact 0-face with determining weight (1,1).
  auto P = hull(S({{0, 1}}), 2);
  CHECK(P.facets.size() == 2);
  REQUIRE(P.faces.size() == 1);
  CHECK(P.faces[0].dim == 0);
  CHECK(P.faces[0].vertex_points == std::vector<Exponent>{{0, 1}});
  CHECK(P.faces[0].canonical_weight == Weight{1, 1});
}

TEST_CASE("convenience") {
  auto c1 = convenience(S({{2, 2}}), 2);  // |z1 z2|^2
  CHECK_FALSE(c1.convenient);
  CHECK(c1.missing_axes == std::set<int>{0, 1});

  auto c2 = convenience(S({{2, 0}, {0, 2}}), 2);
  CHECK(c2.convenient);

  // Theorem 6.6 polynomial is convenient: (0,4,0) sits on the xi_2 axis.
  auto c3 = convenience(S({{0, 0, 1}, {6, 0, 0}, {3, 2, 0}, {0, 4, 0}, {8, 0, 0}}), 3);
  CHECK(c3.convenient);

  auto c4 = convenience({}, 2);
  CHECK(c4.flat);
  CHECK_FALSE(c4.convenient);
}

TEST_CASE("rho1") {
  auto r1 = rho1(S({{6, 0}, {0, 1}}), 2);
  CHECK_FALSE(r1.infinite);
  CHECK(r1.value == Rat(6));
  CHECK(r1.intercepts == std::vector<long long>{6, 1});

  auto r2 = rho1(S({{4, 0, 0}, {0, 6, 0}, {0, 0, 1}}), 3);
  CHECK(r2.value == Rat(6));

  auto r3 = rho1(S({{2, 2}}), 2);
  CHECK(r3.infinite);
  CHECK_FALSE(r3.flat);

  auto r4 = rho1({}, 2);
  CHECK(r4.infinite);
  CHECK(r4.flat);
}

TEST_CASE("slab form") {
  CHECK(slab_axis(S({{0, 1}}), 2) == 1);              // 2Re(w)
  CHECK_FALSE(slab_axis(S({{0, 1}, {2, 0}}), 2));     // 2Re(w)+|z1|^2
  CHECK(slab_axis(S({{0, 1}, {1, 2}}), 2) == 1);      // 2Re(w)+2Re(w^2 z1)
  CHECK_FALSE(slab_axis({}, 2).has_value());
}

TEST_CASE("axis intercepts agree with the facet formula") {
  Rng rng(23);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng.below(3));
    SupportSet s;
    int npts = 1 + static_cast<int>(rng.below(8));
    for (int i = 0; i < npts; ++i) {
      Exponent p(n, 0);
      long long deg = 0;
      for (int j = 0; j < n; ++j) {
        p[j] = static_cast<int>(rng.below(7));
        deg += p[j];
      }
      if (deg == 0) continue;
      s.insert(p);
    }
    if (s.empty()) continue;
    auto P = hull(s, n);
    auto r = rho1(s, n);
    for (int k = 0; k < n; ++k) {
      // max over facets with a_k > 0 of level/a_k, when every a_k = 0 facet
      // has level 0 (axis met)
      bool met = true;
      Rat best(-1);
      for (auto& f : P.facets) {
        if (f.normal[k] == 0) {
          if (f.level != 0) met = false;
        } else {
          Rat q(rat_ll(f.level) / rat_ll(f.normal[k]));
          q.canonicalize();
          if (q > best) best = q;
        }
      }
      if (!met) {
        CHECK(r.intercepts[k] == -1);
      } else {
        REQUIRE(r.intercepts[k] >= 0);
        CHECK(rat_ll(r.intercepts[k]) == best);
      }
    }
  }
}

TEST_CASE("oracle equivalence on random supports") {
  Rng rng(101);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng.below(3));
    SupportSet s;
    int npts = 1 + static_cast<int>(rng.below(12));
    for (int i = 0; i < npts; ++i) {
      Exponent p(n, 0);
      long long deg = 0;
      for (int j = 0; j < n; ++j) {
        p[j] = static_cast<int>(rng.below(9));
        deg += p[j];
      }
      if (deg == 0) continue;
      s.insert(p);
    }
    if (s.empty()) continue;
    auto P = hull(s, n);
    auto O = testsupport::oracle_hull(s, n);
    std::vector<testsupport::OracleFacet> mine;
    for (auto& f : P.facets) mine.push_back({f.normal, f.level});
    std::sort(mine.begin(), mine.end());
    CHECK(mine == O.facets);
    CHECK(P.vertices == O.vertices);
  }
}

TEST_CASE("membership soundness and face lattice consistency") {
  Rng rng(55);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng.below(3));
    SupportSet s;
    for (int i = 0, npts = 2 + static_cast<int>(rng.below(8)); i < npts; ++i) {
      Exponent p(n, 0);
      for (int j = 0; j < n; ++j) p[j] = static_cast<int>(rng.below(8));
      if (degree(p) > 0) s.insert(p);
    }
    if (s.empty()) continue;
    auto P = hull(s, n);
    for (auto& f : P.facets) {
      long long w;
      for (auto& p : P.support) {
        w = 0;
        for (int j = 0; j < n; ++j) w += f.normal[j] * p[j];
        CHECK(w >= f.level);
      }
    }
    for (auto& face : P.faces) {
      // support on the face == level set of each determining generator that
      // is strictly positive; always == level set of the canonical weight
      long long lvl = 0;
      for (int j = 0; j < n; ++j) lvl += face.canonical_weight[j] * face.support_points[0][j];
      for (auto& p : P.support) {
        long long v = 0;
        for (int j = 0; j < n; ++j) v += face.canonical_weight[j] * p[j];
        bool on = std::find(face.support_points.begin(), face.support_points.end(), p) !=
                  face.support_points.end();
        CHECK(((v == lvl) == on));
      }
      CHECK(weight_determines(P, face.canonical_weight, face));
    }
  }
}

TEST_CASE("monotonicity: adding support points grows the polyhedron") {
  Rng rng(77);
  for (int it = 0; it < 50; ++it) {
    int n = 1 + static_cast<int>(rng.below(3));
    SupportSet s;
    for (int i = 0, npts = 2 + static_cast<int>(rng.below(6)); i < npts; ++i) {
      Exponent p(n, 0);
      for (int j = 0; j < n; ++j) p[j] = static_cast<int>(rng.below(7));
      if (degree(p) > 0) s.insert(p);
    }
    if (s.empty()) continue;
    Exponent extra(n, 0);
    for (int j = 0; j < n; ++j) extra[j] = static_cast<int>(rng.below(7));
    if (degree(extra) == 0) extra[0] = 1;
    SupportSet s2 = s;
    s2.insert(extra);
    auto P2 = hull(s2, n);
    // old generators still inside
    for (auto& f : P2.facets)
      for (auto& p : s) {
        long long v = 0;
        for (int j = 0; j < n; ++j) v += f.normal[j] * p[j];
        CHECK(v >= f.level);
      }
    auto r1 = rho1(s, n);
    auto r2 = rho1(s2, n);
    if (!r1.infinite && !r2.infinite) CHECK(r2.value <= r1.value);
  }
}
