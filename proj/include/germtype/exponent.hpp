#pragma once

#include <compare>
#include <numeric>
#include <vector>

namespace germtype {

// Multi-index in Z_+^n. Kept as a plain vector; the ambient n is small
// (paper examples live in n <= 3 plus the distinguished variable).
using Exponent = std::vector<int>;

inline long long degree(const Exponent& a) {
  long long s = 0;
  for (int v : a) s += v;
  return s;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool exp_is_zero(const Exponent& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

inline Exponent unit_exp(int n, int k, int power = 1) {
  Exponent e(n, 0);
  e[k] = power;
  return e;
}

// Indices of nonzero entries.
inline std::vector<int> exp_support(const Exponent& a) {
  std::vector<int> s;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

// (alpha, beta) with z^alpha zbar^beta.
struct ExponentPair {
  Exponent alpha, beta;
  auto operator<=>(const ExponentPair&) const = default;

  ExponentPair swapped() const { return ExponentPair{beta, alpha}; }
  Exponent total() const { return exp_add(alpha, beta); }
  long long order() const { return degree(alpha) + degree(beta); }
  bool pure() const { return degree(alpha) == 0 || degree(beta) == 0; }
  bool diagonal() const { return alpha == beta; }
};

}  // namespace germtype
