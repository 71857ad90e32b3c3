#include "germtype/newton.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>

#include "germtype/dd.hpp"

namespace germtype {

const Face* NewtonPolyhedron::face_by_id(int id) const {
  for (auto& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

static long long wdot(const Weight& w, const Exponent& p) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

bool weight_determines(const NewtonPolyhedron& P, const Weight& w, const Face& face,
                       long long* level_out) {
  for (long long x : w)
    if (x < 1) return false;
  long long best = 0;
  bool first = true;
  for (auto& v : P.vertices) {
    long long val = wdot(w, v);
    if (first || val < best) best = val, first = false;
  }
  std::vector<Exponent> arg;
  for (auto& v : P.vertices)
    if (wdot(w, v) == best) arg.push_back(v);
  if (arg != face.vertex_points) return false;
  if (level_out) *level_out = best;
  return true;
}

namespace {

struct FaceKey {
  std::vector<int> tight;  // maximal tight facet set, sorted
  bool operator<(const FaceKey& o) const { return tight < o.tight; }
};

}  // namespace

NewtonPolyhedron hull(const SupportSet& s, int n) {
  if (s.empty()) throw Error("EmptySupport", "flat jet: Newton polyhedron is empty");
  NewtonPolyhedron P;
  P.dim = n;
  P.support.assign(s.begin(), s.end());

  // Dual cone of valid inequalities (a, -l): rows (p,1) per point, (e_j,0)
  // per recession ray. Its extreme rays are the facets plus (0,...,0,1).
  QMat rows;
  for (auto& p : P.support) {
    QVec r(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) r[i] = p[i];
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  for (int j = 0; j < n; ++j) {
    QVec r(n + 1, Rat(0));
    r[j] = 1;
    rows.push_back(std::move(r));
  }
  QMat rays = dd_extreme_rays(rows);

  for (auto& y : rays) {
    bool a_zero = true;
    for (int i = 0; i < n; ++i)
      if (y[i] != 0) a_zero = false;
    if (a_zero) continue;  // the trivial inequality 0 >= -l
    Facet f;
    f.normal.resize(n);
    for (int i = 0; i < n; ++i) {
      // primitive integer already (dd normalizes); denominators are one
      if (!y[i].get_num().fits_slong_p()) throw Error("Internal", "facet normal overflow");
      f.normal[i] = static_cast<long long>(y[i].get_num().get_si());
      if (f.normal[i] < 0) throw Error("Internal", "facet normal with negative entry");
    }
    Rat lv = -y[n];
    if (lv.get_den() != 1) throw Error("Internal", "non-integer facet level");
    f.level = static_cast<long long>(lv.get_num().get_si());
    f.compact = true;
    for (int i = 0; i < n; ++i)
      if (f.normal[i] == 0) f.compact = false;
    for (auto& p : P.support)
      if (wdot(f.normal, p) == f.level) f.tight_points.push_back(p);
    P.facets.push_back(std::move(f));
  }
  std::sort(P.facets.begin(), P.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.level) < std::tie(b.normal, b.level);
  });

  // Vertices: support points with n independent tight facet normals.
  for (auto& p : P.support) {
    QMat tight;
    for (auto& f : P.facets)
      if (wdot(f.normal, p) == f.level) {
        QVec r(n);
        for (int i = 0; i < n; ++i) r[i] = rat_ll(f.normal[i]);
        tight.push_back(std::move(r));
      }
    if (qrank(tight) == n) P.vertices.push_back(p);
  }

  // Face lattice restricted to compact faces, by closure of tight facet sets.
  if (P.facets.size() > 60) throw Error("Internal", "facet count exceeds face enumeration capacity");
  int nf = static_cast<int>(P.facets.size());

  auto vertices_tight_on = [&](const std::vector<int>& tight) {
    std::vector<Exponent> vs;
    for (auto& v : P.vertices) {
      bool all = true;
      for (int i : tight)
        if (wdot(P.facets[i].normal, v) != P.facets[i].level) {
          all = false;
          break;
        }
      if (all) vs.push_back(v);
    }
    return vs;
  };
  auto rays_of = [&](const std::vector<int>& tight) {
    std::vector<int> rays_alive;
    for (int j = 0; j < n; ++j) {
      bool alive = true;
      for (int i : tight)
        if (P.facets[i].normal[j] != 0) {
          alive = false;
          break;
        }
      if (alive) rays_alive.push_back(j);
    }
    return rays_alive;
  };
  auto closure = [&](std::vector<int> tight) {
    auto vs = vertices_tight_on(tight);
    auto rr = rays_of(tight);
    std::vector<int> out;
    for (int i = 0; i < nf; ++i) {
      bool all = true;
      for (auto& v : vs)
        if (wdot(P.facets[i].normal, v) != P.facets[i].level) {
          all = false;
          break;
        }
      for (int j : rr)
        if (all && P.facets[i].normal[j] != 0) all = false;
      if (all) out.push_back(i);
    }
    return out;
  };

  std::map<FaceKey, std::pair<std::vector<Exponent>, std::vector<int>>> seen;  // key -> (V, rays)
  std::vector<FaceKey> work;
  for (int i = 0; i < nf; ++i) {
    FaceKey k{closure({i})};
    auto vs = vertices_tight_on(k.tight);
    if (vs.empty()) continue;
    if (!seen.count(k)) {
      seen[k] = {vs, rays_of(k.tight)};
      work.push_back(k);
    }
  }
  while (!work.empty()) {
    FaceKey cur = work.back();
    work.pop_back();
    for (int i = 0; i < nf; ++i) {
      if (std::binary_search(cur.tight.begin(), cur.tight.end(), i)) continue;
      std::vector<int> t = cur.tight;
      t.push_back(i);
      std::sort(t.begin(), t.end());
      auto vs = vertices_tight_on(t);
      if (vs.empty()) continue;
      FaceKey k{closure(t)};
      if (seen.count(k)) continue;
      seen[k] = {vertices_tight_on(k.tight), rays_of(k.tight)};
      work.push_back(k);
    }
  }

  for (auto& [key, vr] : seen) {
    auto& [vs, rr] = vr;
    if (!rr.empty()) continue;  // unbounded face
    Face f;
    f.tight_facets = key.tight;
    f.vertex_points = vs;
    for (auto& p : P.support) {
      bool all = true;
      for (int i : key.tight)
        if (wdot(P.facets[i].normal, p) != P.facets[i].level) {
          all = false;
          break;
        }
      if (all) f.support_points.push_back(p);
    }
    // dim = affine rank of vertex set
    QMat dirs;
    for (size_t i = 1; i < vs.size(); ++i) {
      QVec d(n);
      for (int j = 0; j < n; ++j) d[j] = Rat(vs[i][j] - vs[0][j]);
      dirs.push_back(std::move(d));
    }
    f.dim = qrank(dirs);
    for (int i : key.tight) {
      Weight w(P.facets[i].normal);
      f.weight_generators.push_back(w);
    }
    // canonical strictly positive determining weight
    Weight w(n, 0);
    for (auto& g : f.weight_generators)
      for (int j = 0; j < n; ++j) w[j] += g[j];
    {
      long long g = 0;
      for (long long x : w) g = std::gcd(g, x);
      if (g > 1)
        for (auto& x : w) x /= g;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = 0; j < n; ++j) {
        while (w[j] > 1) {
          Weight cand = w;
          cand[j] -= 1;
          if (weight_determines(P, cand, f))
            w = cand, changed = true;
          else
            break;
        }
      }
    }
    if (!weight_determines(P, w, f, &f.canonical_level))
      throw Error("Internal", "canonical weight fails to determine its face");
    f.canonical_weight = w;
    P.faces.push_back(std::move(f));
  }

  std::sort(P.faces.begin(), P.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.support_points) < std::tie(b.dim, b.support_points);
  });
  for (size_t i = 0; i < P.faces.size(); ++i) P.faces[i].id = static_cast<int>(i);
  return P;
}

Convenience convenience(const SupportSet& s, int n) {
  Convenience c;
  if (s.empty()) {
    c.flat = true;
    for (int j = 0; j < n; ++j) c.missing_axes.insert(j);
    return c;
  }
  std::vector<bool> met(n, false);
  for (auto& p : s) {
    auto sup = exp_support(p);
    if (sup.size() == 1) met[sup[0]] = true;
  }
  for (int j = 0; j < n; ++j)
    if (!met[j]) c.missing_axes.insert(j);
  c.convenient = c.missing_axes.empty();
  return c;
}

Rho1 rho1(const SupportSet& s, int n) {
  Rho1 r;
  r.intercepts.assign(n, -1);
  Convenience c = convenience(s, n);
  if (c.flat) {
    r.infinite = true;
    r.flat = true;
    return r;
  }
  for (auto& p : s) {
    auto sup = exp_support(p);
    if (sup.size() != 1) continue;
    int k = sup[0];
    long long v = p[k];
    if (r.intercepts[k] < 0 || v < r.intercepts[k]) r.intercepts[k] = v;
  }
  if (!c.convenient) {
    r.infinite = true;
    return r;
  }
  long long m = 0;
  for (long long v : r.intercepts) m = std::max(m, v);
  r.value = rat_ll(m);
  return r;
}

std::optional<int> slab_axis(const SupportSet& s, int n) {
  for (int k = 0; k < n; ++k) {
    if (!s.count(unit_exp(n, k))) continue;
    bool inside = true;
    for (auto& p : s)
      if (p[k] < 1) {
        inside = false;
        break;
      }
    if (inside) return k;
  }
  return std::nullopt;
}

}  // namespace germtype
