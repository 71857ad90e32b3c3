#include "germtype/faces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "germtype/dd.hpp"

namespace germtype {

FacePart face_part(const HermitianJet& F, const NewtonPolyhedron& P, const Face& face) {
  if (face.id < 0 || face.id >= static_cast<int>(P.faces.size()) ||
      P.faces[face.id].support_points != face.support_points)
    throw Error("FaceMismatch", "face does not belong to the polyhedron");
  FacePart part;
  part.face_id = face.id;
  part.poly.nvars = F.nvars;
  part.poly.truncation = F.truncation;
  part.poly.complete = true;  // a face part is an exact polynomial
  for (auto& [p, c] : F.coeffs) {
    Exponent tot = p.total();
    if (std::find(face.support_points.begin(), face.support_points.end(), tot) !=
        face.support_points.end())
      part.poly.coeffs[p] = c;
  }
  return part;
}

static long long wdot(const Weight& w, const Exponent& p) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

GroupedTorusSystem grouped_system(const FacePart& part, const NewtonPolyhedron& P,
                                  const Face& face, const Weight& a) {
  GroupedTorusSystem gs;
  long long level = 0;
  if (!weight_determines(P, a, face, &level))
    throw Error("WeightDoesNotDetermineFace", "weight does not determine the face");
  gs.weight = a;
  gs.level = level;
  std::map<long long, TorusGroup> by_p;
  for (auto& [pair, c] : part.poly.coeffs) {
    long long p = wdot(a, pair.alpha);
    long long q = wdot(a, pair.beta);
    if (p + q != level) throw Error("Internal", "face part term off the face level");
    auto& g = by_p[p];
    g.p = p;
    g.q = q;
    g.terms[pair] = c;
  }
  for (auto& [p, g] : by_p) gs.groups.push_back(g);
  return gs;
}

namespace {

struct DeltaInfo {
  Exponent delta;                 // alpha - alpha' (as int vector, may be negative)
  std::vector<long long> values;  // generator dot products
  enum Class { Always, Never, Sometimes } cls;
};

std::vector<Exponent> distinct_alphas(const FacePart& part) {
  std::set<Exponent> xs;
  for (auto& [pair, c] : part.poly.coeffs) xs.insert(pair.alpha);
  return {xs.begin(), xs.end()};
}

std::vector<DeltaInfo> delta_table(const FacePart& part, const Face& face) {
  auto xs = distinct_alphas(part);
  std::vector<DeltaInfo> out;
  std::set<Exponent> seen;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      Exponent d(xs[i].size());
      for (size_t k = 0; k < d.size(); ++k) d[k] = xs[i][k] - xs[j][k];
      // canonical: primitive with first nonzero positive, so proportional
      // differences collapse to one hyperplane
      int g = 0;
      for (int v : d) g = std::gcd(g, std::abs(v));
      if (g > 1)
        for (auto& v : d) v /= g;
      for (auto& v : d) {
        if (v > 0) break;
        if (v < 0) {
          for (auto& x : d) x = -x;
          break;
        }
      }
      if (seen.count(d)) continue;
      seen.insert(d);
      DeltaInfo info;
      info.delta = d;
      bool pos = false, neg = false;
      for (auto& g : face.weight_generators) {
        long long v = wdot(g, d);
        info.values.push_back(v);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      info.cls = (!pos && !neg) ? DeltaInfo::Always
                 : (pos && neg) ? DeltaInfo::Sometimes
                                : DeltaInfo::Never;
      out.push_back(std::move(info));
    }
  return out;
}

// extreme rays of { lambda >= 0 : values(delta) . lambda = 0 for delta in Z }
QMat cell_rays(const std::vector<DeltaInfo>& table, const std::vector<int>& Z, int k) {
  QMat rows;
  for (int zi : Z) {
    QVec r(k), rn(k);
    for (int i = 0; i < k; ++i) {
      r[i] = rat_ll(table[zi].values[i]);
      rn[i] = -r[i];
    }
    rows.push_back(r);
    rows.push_back(rn);
  }
  for (int i = 0; i < k; ++i) {
    QVec e(k, Rat(0));
    e[i] = 1;
    rows.push_back(e);
  }
  return dd_extreme_rays(rows);
}

bool rays_have_positive_point(const QMat& rays, int k, QVec* lambda_out) {
  QVec sum(k, Rat(0));
  for (auto& r : rays)
    for (int i = 0; i < k; ++i) sum[i] += r[i];
  for (int i = 0; i < k; ++i)
    if (sum[i] <= 0) return false;
  if (lambda_out) *lambda_out = sum;
  return true;
}

}  // namespace

std::vector<Weight> grouping_cell_weights(const HermitianJet& F, const NewtonPolyhedron& P,
                                          const Face& face, int max_cells, bool* complete) {
  FacePart part = face_part(F, P, face);
  auto table = delta_table(part, face);
  int k = static_cast<int>(face.weight_generators.size());
  int n = P.dim;

  std::vector<int> sometimes;
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].cls == DeltaInfo::Sometimes) sometimes.push_back(static_cast<int>(i));

  if (complete) *complete = true;

  auto weight_from_lambda = [&](const QVec& lambda) -> Weight {
    QVec w(n, Rat(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) w[j] += lambda[i] * rat_ll(face.weight_generators[i][j]);
    w = primitive_integer(w);
    Weight out(n);
    for (int j = 0; j < n; ++j) out[j] = static_cast<long long>(w[j].get_num().get_si());
    return out;
  };

  // closure of a zero set within the cell cone
  auto closure_of = [&](std::vector<int> Z, QMat* rays_out) -> std::vector<int> {
    QMat rays = cell_rays(table, Z, k);
    std::set<int> zs(Z.begin(), Z.end());
    for (int si : sometimes) {
      if (zs.count(si)) continue;
      bool forced = true;
      for (auto& r : rays) {
        Rat v = 0;
        for (int i = 0; i < k; ++i) v += r[i] * rat_ll(table[si].values[i]);
        if (v != 0) forced = false;
      }
      if (forced) zs.insert(si);
    }
    if (rays_out) *rays_out = rays;
    return {zs.begin(), zs.end()};
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<Weight> weights;

  auto push_cell = [&](std::vector<int> Z) {
    QMat rays;
    std::vector<int> closed = closure_of(Z, &rays);
    if (seen.count(closed)) return;
    rays = cell_rays(table, closed, k);
    QVec probe;
    if (!rays_have_positive_point(rays, k, &probe)) return;  // not realizable in relint
    // a generic point of the cell: its weight must zero exactly the closed
    // set and nothing else among the active hyperplanes
    std::set<int> closed_set(closed.begin(), closed.end());
    for (long t = 1; t <= 200; ++t) {
      QVec lambda(k, Rat(0));
      Rat tp(1);
      for (auto& r : rays) {
        for (int i = 0; i < k; ++i) lambda[i] += tp * r[i];
        tp *= t + 1;
      }
      bool positive = true;
      for (int i = 0; i < k; ++i)
        if (lambda[i] <= 0) positive = false;
      if (!positive) continue;
      Weight w = weight_from_lambda(lambda);
      bool pattern_ok = true;
      for (int si : sometimes) {
        long long v = wdot(w, table[si].delta);
        bool should_be_zero = closed_set.count(si) > 0;
        if ((v == 0) != should_be_zero) pattern_ok = false;
      }
      if (!pattern_ok) continue;
      if (!weight_determines(P, w, face)) continue;
      seen.insert(closed);
      weights.push_back(w);
      work.push_back(closed);
      return;
    }
    // no exact representative found: mark the enumeration incomplete via cap
    if (complete) *complete = false;
  };

  push_cell({});
  while (!work.empty() && static_cast<int>(seen.size()) <= max_cells) {
    std::vector<int> cur = work.back();
    work.pop_back();
    for (int si : sometimes) {
      if (std::binary_search(cur.begin(), cur.end(), si)) continue;
      std::vector<int> nz = cur;
      nz.push_back(si);
      std::sort(nz.begin(), nz.end());
      push_cell(nz);
      if (static_cast<int>(seen.size()) > max_cells) break;
    }
  }
  if (static_cast<int>(seen.size()) > max_cells && complete) *complete = false;
  return weights;
}

namespace {

// ---- torus zero search ------------------------------------------------

GaussianRational eval_group(const TorusGroup& g, const std::vector<GaussianRational>& c) {
  GaussianRational acc;
  for (auto& [pair, coeff] : g.terms) {
    GaussianRational t = coeff;
    for (size_t i = 0; i < c.size(); ++i) {
      if (pair.alpha[i]) t *= c[i].pow(pair.alpha[i]);
      if (pair.beta[i]) t *= c[i].conj().pow(pair.beta[i]);
    }
    acc += t;
  }
  return acc;
}

bool all_groups_vanish(const GroupedTorusSystem& gs, const std::vector<GaussianRational>& c) {
  for (auto& g : gs.groups)
    if (!eval_group(g, c).is_zero()) return false;
  return true;
}

std::vector<int> occurring_variables(const GroupedTorusSystem& gs, int n) {
  std::vector<bool> occ(n, false);
  for (auto& g : gs.groups)
    for (auto& [pair, c] : g.terms)
      for (int i = 0; i < n; ++i)
        if (pair.alpha[i] || pair.beta[i]) occ[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (occ[i]) out.push_back(i);
  return out;
}

const std::vector<GaussianRational>& grid_values() {
  static const std::vector<GaussianRational> v = {
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational(2),
      GaussianRational(-2),
      GaussianRational(Rat(1, 2)),
      GaussianRational(Rat(-1, 2)),
      GaussianRational::unit_i(),
      -GaussianRational::unit_i(),
      GaussianRational(Rat(1), Rat(1)),
      GaussianRational(Rat(1), Rat(-1)),
  };
  return v;
}

bool grid_search(const GroupedTorusSystem& gs, int n, std::vector<GaussianRational>* out) {
  auto vars = occurring_variables(gs, n);
  const auto& vals = grid_values();
  std::vector<size_t> idx(vars.size(), 0);
  std::vector<GaussianRational> c(n, GaussianRational(1));
  if (vars.empty()) return all_groups_vanish(gs, c) ? (*out = c, true) : false;
  for (;;) {
    for (size_t i = 0; i < vars.size(); ++i) c[vars[i]] = vals[idx[i]];
    if (all_groups_vanish(gs, c)) {
      *out = c;
      return true;
    }
    size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < vals.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) return false;
  }
}

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

bool random_search(const GroupedTorusSystem& gs, int n, int samples, uint64_t seed,
                   std::vector<GaussianRational>* out) {
  SplitRng rng{seed};
  auto vars = occurring_variables(gs, n);
  std::vector<GaussianRational> c(n, GaussianRational(1));
  for (int it = 0; it < samples; ++it) {
    for (int v : vars) {
      Rat re(rng.range(-6, 6), rng.range(1, 3));
      Rat im(rng.range(-6, 6), rng.range(1, 3));
      re.canonicalize();
      im.canonicalize();
      GaussianRational g(re, im);
      if (g.is_zero()) g = GaussianRational(1);
      c[v] = g;
    }
    if (all_groups_vanish(gs, c)) {
      *out = c;
      return true;
    }
  }
  return false;
}

// Gauss-Newton on the realified system, then continued-fraction
// rationalization with exact verification.
bool newton_search(const GroupedTorusSystem& gs, int n, const FaceBudget& budget, uint64_t seed,
                   std::vector<GaussianRational>* out) {
  auto vars = occurring_variables(gs, n);
  if (vars.empty()) return false;
  int dim = static_cast<int>(vars.size()) * 2;

  auto eval_res = [&](const std::vector<double>& x, std::vector<double>& res) {
    std::vector<std::pair<double, double>> c(n, {1.0, 0.0});
    for (size_t i = 0; i < vars.size(); ++i) c[vars[i]] = {x[2 * i], x[2 * i + 1]};
    res.clear();
    for (auto& g : gs.groups) {
      double re = 0, im = 0;
      for (auto& [pair, coeff] : g.terms) {
        double tre = coeff.to_double_re(), tim = coeff.to_double_im();
        for (int v = 0; v < n; ++v) {
          for (int e = 0; e < pair.alpha[v]; ++e) {
            double nre = tre * c[v].first - tim * c[v].second;
            double nim = tre * c[v].second + tim * c[v].first;
            tre = nre, tim = nim;
          }
          for (int e = 0; e < pair.beta[v]; ++e) {
            double nre = tre * c[v].first + tim * c[v].second;
            double nim = -tre * c[v].second + tim * c[v].first;
            tre = nre, tim = nim;
          }
        }
        re += tre;
        im += tim;
      }
      res.push_back(re);
      res.push_back(im);
    }
  };

  SplitRng rng{seed ^ 0xabcdef12345678ULL};
  for (int attempt = 0; attempt < budget.newton_attempts; ++attempt) {
    std::vector<double> x(dim);
    for (auto& v : x) v = (static_cast<double>(rng.range(-200, 200)) / 100.0) + 0.1;
    std::vector<double> res;
    for (int it = 0; it < budget.newton_iters; ++it) {
      eval_res(x, res);
      double norm2 = 0;
      for (double r : res) norm2 += r * r;
      if (norm2 < 1e-24) break;
      // numeric Jacobian
      int m = static_cast<int>(res.size());
      std::vector<std::vector<double>> J(m, std::vector<double>(dim));
      std::vector<double> res2;
      for (int j = 0; j < dim; ++j) {
        double h = 1e-7;
        std::vector<double> x2 = x;
        x2[j] += h;
        eval_res(x2, res2);
        for (int i = 0; i < m; ++i) J[i][j] = (res2[i] - res[i]) / h;
      }
      // solve (J^T J + mu I) d = -J^T res
      std::vector<std::vector<double>> A(dim, std::vector<double>(dim, 0.0));
      std::vector<double> b(dim, 0.0);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
          for (int r = 0; r < m; ++r) A[i][j] += J[r][i] * J[r][j];
        A[i][i] += 1e-9;
        for (int r = 0; r < m; ++r) b[i] -= J[r][i] * res[r];
      }
      for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
          if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        if (std::fabs(A[col][col]) < 1e-14) break;
        for (int r = 0; r < dim; ++r) {
          if (r == col) continue;
          double f = A[r][col] / A[col][col];
          for (int cc = col; cc < dim; ++cc) A[r][cc] -= f * A[col][cc];
          b[r] -= f * b[col];
        }
      }
      bool ok = true;
      for (int i = 0; i < dim; ++i) {
        if (std::fabs(A[i][i]) < 1e-14) {
          ok = false;
          break;
        }
        x[i] += b[i] / A[i][i];
      }
      if (!ok) break;
    }
    eval_res(x, res);
    double norm2 = 0;
    for (double r : res) norm2 += r * r;
    if (norm2 > 1e-18) continue;
    // rationalize with small denominators and verify exactly
    auto rationalize = [](double v) -> Rat {
      long best_num = 0, best_den = 1;
      double best_err = 1e9;
      for (long den = 1; den <= 64; ++den) {
        long num = std::lround(v * den);
        double err = std::fabs(v - static_cast<double>(num) / den);
        if (err < best_err) {
          best_err = err;
          best_num = num;
          best_den = den;
        }
      }
      Rat q(best_num, best_den);
      q.canonicalize();
      return q;
    };
    std::vector<GaussianRational> c(n, GaussianRational(1));
    bool torus = true;
    for (size_t i = 0; i < vars.size(); ++i) {
      GaussianRational g(rationalize(x[2 * i]), rationalize(x[2 * i + 1]));
      if (g.is_zero()) torus = false;
      c[vars[i]] = g;
    }
    if (torus && all_groups_vanish(gs, c)) {
      *out = c;
      return true;
    }
  }
  return false;
}

// ---- structural certificates -------------------------------------------

bool rule_r2_global(const FacePart& part) {
  int sign = 0;
  for (auto& [pair, c] : part.poly.coeffs) {
    if (!pair.diagonal()) return false;
    if (!c.is_real()) return false;
    int s = c.re > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return !part.poly.coeffs.empty();
}

bool rule_r1_global(const FacePart& part, const Face& face) {
  auto xs = distinct_alphas(part);
  for (auto& alpha0 : xs) {
    int owners = 0;
    for (auto& [pair, c] : part.poly.coeffs)
      if (pair.alpha == alpha0) ++owners;
    if (owners != 1) continue;
    bool isolated = true;
    for (auto& alpha : xs) {
      if (alpha == alpha0) continue;
      bool pos = false, neg = false;
      for (auto& g : face.weight_generators) {
        long long v = 0;
        for (size_t j = 0; j < g.size(); ++j) v += g[j] * (alpha[j] - alpha0[j]);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      bool never_grouped = (pos && !neg) || (neg && !pos);
      if (!never_grouped) {
        isolated = false;
        break;
      }
    }
    if (isolated) return true;
  }
  return false;
}

bool group_single_monomial(const TorusGroup& g) { return g.terms.size() == 1; }

bool group_diagonal_signed(const TorusGroup& g) {
  int sign = 0;
  for (auto& [pair, c] : g.terms) {
    if (!pair.diagonal() || !c.is_real()) return false;
    int s = c.re > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return !g.terms.empty();
}

// |x| <= |re| + |im| bound keeps the dominance test rational.
Rat magnitude_bound(const GaussianRational& c) {
  Rat r = c.re < 0 ? Rat(-c.re) : c.re;
  Rat i = c.im < 0 ? Rat(-c.im) : c.im;
  return r + i;
}

bool group_diag_dominant(const TorusGroup& g) {
  if (g.p != g.q) return false;
  std::set<Exponent> basis;
  for (auto& [pair, c] : g.terms) {
    basis.insert(pair.alpha);
    basis.insert(pair.beta);
  }
  int sign = 0;
  for (auto& alpha : basis) {
    auto diag = g.terms.find(ExponentPair{alpha, alpha});
    if (diag == g.terms.end() || !diag->second.is_real() || diag->second.re == 0) return false;
    int s = diag->second.re > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
    Rat offsum = 0;
    for (auto& beta : basis) {
      if (beta == alpha) continue;
      auto it = g.terms.find(ExponentPair{alpha, beta});
      if (it != g.terms.end()) offsum += magnitude_bound(it->second);
    }
    Rat d = diag->second.re < 0 ? Rat(-diag->second.re) : diag->second.re;
    if (!(offsum < d)) return false;
  }
  return true;
}

// Triangular elimination over binomial groups that pin one variable exactly.
// Returns 1 = infeasible (nondegenerate for this grouping), -1 = exact torus
// zero found (witness written), 0 = inconclusive.
int triangular_eliminate(const GroupedTorusSystem& gs, int n,
                         std::vector<GaussianRational>* witness) {
  std::vector<std::map<ExponentPair, GaussianRational>> sys;
  for (auto& g : gs.groups) sys.push_back(g.terms);
  std::vector<GaussianRational> assign(n, GaussianRational(1));
  std::vector<bool> assigned(n, false);

  auto substitute = [&](int var, const GaussianRational& val) {
    for (auto& g : sys) {
      std::map<ExponentPair, GaussianRational> ng;
      for (auto& [pair, c] : g) {
        GaussianRational nc = c;
        if (pair.alpha[var]) nc *= val.pow(pair.alpha[var]);
        if (pair.beta[var]) nc *= val.conj().pow(pair.beta[var]);
        ExponentPair np = pair;
        np.alpha[var] = 0;
        np.beta[var] = 0;
        auto it = ng.find(np);
        if (it == ng.end()) {
          if (!nc.is_zero()) ng[np] = nc;
        } else {
          it->second += nc;
          if (it->second.is_zero()) ng.erase(it);
        }
      }
      g = std::move(ng);
    }
  };

  for (int round = 0; round < 2 * n + 4; ++round) {
    // drop satisfied groups; detect infeasible ones
    for (auto& g : sys) {
      if (g.empty()) continue;
      if (g.size() == 1) {
        // single monomial epsilon * c^a cbar^b: never zero on the torus
        return 1;
      }
    }
    bool progress = false;
    for (auto& g : sys) {
      if (g.size() != 2) continue;
      auto it = g.begin();
      auto [p1, c1] = *it++;
      auto [p2, c2] = *it;
      // difference must isolate one variable linearly
      int var = -1, da = 0, db = 0;
      bool linear = true;
      for (int v = 0; v < n && linear; ++v) {
        int dda = p1.alpha[v] - p2.alpha[v];
        int ddb = p1.beta[v] - p2.beta[v];
        if (dda == 0 && ddb == 0) continue;
        if (var >= 0) linear = false;
        var = v;
        da = dda;
        db = ddb;
      }
      if (!linear || var < 0) continue;
      GaussianRational ratio = (-c2) / c1;  // c^?(var) == ratio
      GaussianRational val;
      if (da == 1 && db == 0)
        val = ratio;
      else if (da == -1 && db == 0)
        val = ratio.inverse();
      else if (da == 0 && db == 1)
        val = ratio.conj();
      else if (da == 0 && db == -1)
        val = ratio.inverse().conj();
      else if (da == 1 && db == -1) {
        // c / cbar = ratio: needs |ratio| = 1; skip the irrational cases
        continue;
      } else {
        continue;  // higher-degree binomial: roots usually irrational
      }
      if (val.is_zero()) return 1;  // would force c_var = 0: off the torus
      if (assigned[var]) continue;
      assign[var] = val;
      assigned[var] = true;
      substitute(var, val);
      progress = true;
      break;
    }
    if (!progress) break;
  }
  bool all_empty = true;
  for (auto& g : sys)
    if (!g.empty()) all_empty = false;
  if (all_empty) {
    for (auto& v : assign)
      if (v.is_zero()) return 0;
    *witness = assign;
    return -1;
  }
  return 0;
}

}  // namespace

NondegeneracyVerdict nondegeneracy_verdict(const HermitianJet& F, const NewtonPolyhedron& P,
                                           const Face& face, const FaceBudget& budget,
                                           uint64_t seed) {
  NondegeneracyVerdict v;
  v.seed = seed;
  FacePart part = face_part(F, P, face);
  if (part.poly.coeffs.empty())
    throw Error("Internal", "empty face part");

  // face-level certificates first: they hold for every determining weight
  if (rule_r2_global(part)) {
    v.kind = NondegeneracyVerdict::Nondegenerate;
    v.rule = "R2";
    v.detail = "signed diagonal: every group is a sum of like-signed squared moduli";
    return v;
  }
  if (rule_r1_global(part, face)) {
    v.kind = NondegeneracyVerdict::Nondegenerate;
    v.rule = "R1";
    v.detail = "an isolated monomial occupies its own group under every determining weight";
    return v;
  }

  bool cells_complete = false;
  auto weights = grouping_cell_weights(F, P, face, budget.max_cells, &cells_complete);
  if (weights.empty()) {
    v.kind = NondegeneracyVerdict::Unknown;
    v.detail = "no determining weight cells enumerated";
    return v;
  }

  bool all_certified = true;
  std::string certified_rule = "R3";
  for (auto& a : weights) {
    GroupedTorusSystem gs = grouped_system(part, P, face, a);

    // witness search on this grouping
    std::vector<GaussianRational> c;
    if (grid_search(gs, P.dim, &c) ||
        random_search(gs, P.dim, budget.random_samples, seed ^ 0x5bd1e995, &c) ||
        newton_search(gs, P.dim, budget, seed, &c)) {
      v.kind = NondegeneracyVerdict::Degenerate;
      v.witness = c;
      v.witness_weight = a;
      v.detail = "common torus zero of all groups (exactly verified)";
      return v;
    }

    // certification for this grouping
    bool cell_ok = false;
    for (auto& g : gs.groups)
      if (group_single_monomial(g) || group_diagonal_signed(g) || group_diag_dominant(g))
        cell_ok = true;
    if (!cell_ok) {
      std::vector<GaussianRational> w;
      int tri = triangular_eliminate(gs, P.dim, &w);
      if (tri == 1) {
        cell_ok = true;
        certified_rule = "R4";
      } else if (tri == -1) {
        v.kind = NondegeneracyVerdict::Degenerate;
        v.witness = w;
        v.witness_weight = a;
        v.detail = "triangular elimination produced an exact torus zero";
        return v;
      }
    }
    if (!cell_ok) all_certified = false;
  }

  if (all_certified && cells_complete) {
    v.kind = NondegeneracyVerdict::Nondegenerate;
    v.rule = certified_rule;
    v.detail = "every determining-weight grouping carries a nonvanishing group";
    return v;
  }
  v.kind = NondegeneracyVerdict::Unknown;
  v.detail = cells_complete ? "no certificate applies and no witness was found within budget"
                            : "grouping-cell enumeration exceeded its budget";
  return v;
}

CanonicityReport is_canonical(const HermitianJet& F, const NewtonPolyhedron& P,
                              const FaceBudget& budget, uint64_t seed) {
  CanonicityReport rep;
  bool any_unknown = false;
  for (auto& face : P.faces) {
    auto v = nondegeneracy_verdict(F, P, face, budget, seed + static_cast<uint64_t>(face.id));
    if (v.kind == NondegeneracyVerdict::Degenerate) {
      rep.per_face.push_back(std::move(v));
      // keep evaluating remaining faces for the report
      continue;
    }
    if (v.kind == NondegeneracyVerdict::Unknown) any_unknown = true;
    rep.per_face.push_back(std::move(v));
  }
  bool any_degenerate = false;
  for (auto& v : rep.per_face)
    if (v.kind == NondegeneracyVerdict::Degenerate) any_degenerate = true;
  rep.state = any_degenerate ? CanonicityReport::NotCanonical
              : any_unknown  ? CanonicityReport::Unknown
                             : CanonicityReport::Canonical;
  return rep;
}

TypeTriple type_if_canonical(const SupportSet& s, int n, const CanonicityReport& canon) {
  if (canon.state == CanonicityReport::NotCanonical)
    throw Error("NotCanonical", "the coordinate is not canonical");
  if (canon.state == CanonicityReport::Unknown)
    throw Error("UnknownCanonicity", "canonicity undecided within budget");
  Rho1 r = rho1(s, n);
  TypeValue t;
  t.infinite = r.infinite;
  t.value = r.infinite ? Rat(0) : r.value;
  return TypeTriple{t, t, t};
}

}  // namespace germtype
