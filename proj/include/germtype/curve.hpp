#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germtype/rational.hpp"

namespace germtype {

// Univariate polynomial over Q(i), dense in t.
struct UniPoly {
  std::vector<GaussianRational> c;

  bool is_zero() const;
  long ord() const;  // smallest exponent with nonzero coefficient, -1 when zero
  long deg() const;
  const GaussianRational& at(long k) const;
  void set(long k, const GaussianRational& v);
  void trim();

  bool operator==(const UniPoly&) const = default;
};

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_neg(const UniPoly& a);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b, long cap = -1);
UniPoly uni_pow(const UniPoly& a, long k, long cap = -1);
UniPoly uni_conj(const UniPoly& a);
UniPoly uni_truncate(const UniPoly& a, long maxdeg);

// Holomorphic curve jet: gamma (Full, into C^{n+1}) or gamma-hat (ZCurve,
// into C^n). Polynomial components, gamma(0) = 0, nonconstant, and a good
// parametrization (gcd of all appearing exponents is 1).
struct CurveJet {
  enum Kind { Full, ZCurve };
  Kind kind = Full;
  std::vector<UniPoly> comp;
  std::optional<long> validity;  // nullopt: exact polynomial curve

  long ord() const;  // min component order
  bool is_regular() const { return ord() == 1; }
};

CurveJet make_curve(std::vector<UniPoly> comp, CurveJet::Kind kind,
                    std::optional<long> validity = std::nullopt,
                    bool normalize_parametrization = false);

// " (t^2, t^3, -(t^16+t^18+t^20)) valid 40 ", optionally prefixed "gamma =".
CurveJet parse_curve(const std::string& text, CurveJet::Kind kind = CurveJet::Full);

std::string print_curve(const CurveJet& g);
std::string print_unipoly(const UniPoly& p);

}  // namespace germtype
