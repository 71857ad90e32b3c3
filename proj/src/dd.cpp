#include "germtype/dd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace germtype {

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

static int eliminate(QMat& m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int qrank(QMat m) { return eliminate(m); }

QMat qkernel(QMat m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  eliminate(m);
  std::vector<int> pivot_col;
  std::vector<int> row_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    if (r < static_cast<int>(m.size()) && m[r][c] != 0) {
      row_of_col[c] = r;
      pivot_col.push_back(c);
      ++r;
    }
  }
  QMat basis;
  for (int c = 0; c < cols; ++c) {
    if (row_of_col[c] >= 0) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (int pc = 0; pc < cols; ++pc) {
      int pr = row_of_col[pc];
      if (pr < 0) continue;
      v[pc] = -m[pr][c] / m[pr][pc];
    }
    basis.push_back(v);
  }
  return basis;
}

QVec primitive_integer(const QVec& v) {
  mpz_class l = 1;
  for (auto& x : v) l = lcm(l, x.get_den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (auto& x : v) {
    mpz_class z = x.get_num() * (l / x.get_den());
    ints.push_back(z);
    g = gcd(g, z);
  }
  QVec out(v.size(), Rat(0));
  if (g == 0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

namespace {

struct Ray {
  QVec x;
  uint64_t zero = 0;  // processed rows tight on this ray
};

}  // namespace

QMat dd_extreme_rays(const QMat& rows_in) {
  QMat rows;
  for (auto& r : rows_in) {
    bool all0 = true;
    for (auto& x : r)
      if (x != 0) all0 = false;
    if (!all0) rows.push_back(r);
  }
  if (rows.empty()) throw Error("DDInput", "no nonzero inequality rows");
  int d = static_cast<int>(rows[0].size());
  if (rows.size() > 64) throw Error("DDInput", "too many inequality rows");

  // Greedy d independent rows for the initial simplicial cone.
  std::vector<int> base;
  {
    QMat acc;
    for (int i = 0; i < static_cast<int>(rows.size()) && static_cast<int>(base.size()) < d; ++i) {
      acc.push_back(rows[i]);
      if (qrank(acc) == static_cast<int>(acc.size()))
        base.push_back(i);
      else
        acc.pop_back();
    }
  }
  if (static_cast<int>(base.size()) < d) throw Error("DDInput", "cone is not pointed");

  // Initial rays: columns of B^{-1} where B stacks the base rows.
  std::vector<Ray> rays;
  {
    QMat aug(d, QVec(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) aug[i][j] = rows[base[i]][j];
      aug[i][d + i] = 1;
    }
    eliminate(aug);
    for (int i = 0; i < d; ++i) {
      // normalize pivot to 1
      int pc = -1;
      for (int j = 0; j < d; ++j)
        if (aug[i][j] != 0) {
          pc = j;
          break;
        }
      assert(pc == i);
      Rat p = aug[i][i];
      for (int j = 0; j < 2 * d; ++j) aug[i][j] /= p;
    }
    for (int k = 0; k < d; ++k) {
      Ray r;
      r.x.resize(d);
      for (int i = 0; i < d; ++i) r.x[i] = aug[i][d + k];
      r.x = primitive_integer(r.x);
      rays.push_back(std::move(r));
    }
  }

  auto mark_zero = [&](Ray& r, int processed_count) {
    r.zero = 0;
    for (int i = 0; i < processed_count; ++i)
      if (dot(rows[i], r.x) == 0) r.zero |= (uint64_t(1) << i);
  };

  // Reorder rows so the base comes first.
  {
    QMat reordered;
    std::vector<bool> used(rows.size(), false);
    for (int i : base) {
      reordered.push_back(rows[i]);
      used[i] = true;
    }
    for (size_t i = 0; i < rows.size(); ++i)
      if (!used[i]) reordered.push_back(rows[i]);
    rows.swap(reordered);
  }
  for (auto& r : rays) mark_zero(r, d);

  for (int h = d; h < static_cast<int>(rows.size()); ++h) {
    const QVec& row = rows[h];
    std::vector<Rat> val(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(row, rays[i].x);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zero |= (uint64_t(1) << h);
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) {
        Ray r = rays[i];
        if (val[i] == 0) r.zero |= (uint64_t(1) << h);
        next.push_back(std::move(r));
      }
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        uint64_t common = rays[i].zero & rays[j].zero;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          if ((rays[k].zero & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.x.resize(d);
        for (int c = 0; c < d; ++c) nr.x[c] = val[i] * rays[j].x[c] - val[j] * rays[i].x[c];
        nr.x = primitive_integer(nr.x);
        mark_zero(nr, h + 1);
        next.push_back(std::move(nr));
      }
    }
    // dedupe
    std::sort(next.begin(), next.end(), [](const Ray& a, const Ray& b) {
      for (size_t i = 0; i < a.x.size(); ++i) {
        if (a.x[i] < b.x[i]) return true;
        if (b.x[i] < a.x[i]) return false;
      }
      return false;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Ray& a, const Ray& b) { return a.x == b.x; }),
               next.end());
    rays.swap(next);
  }

  QMat out;
  for (auto& r : rays) out.push_back(r.x);
  std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  return out;
}

}  // namespace germtype
