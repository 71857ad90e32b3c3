#pragma once

#include <map>
#include <optional>
#include <string>

#include "germtype/contact.hpp"
#include "germtype/curve.hpp"
#include "germtype/form.hpp"
#include "germtype/jet.hpp"

namespace germtype {

// Formal holomorphic series built from the pure-term coefficients of a
// model-form germ: S(z) = sum c_alpha z^alpha, |alpha| >= 2.
struct SSeries {
  int nvars = 0;
  std::map<Exponent, GaussianRational> coeffs;
  int truncation = 0;
  bool complete = true;
  std::map<int, TailRule> tails;

  bool is_zero_stored() const { return coeffs.empty(); }
};

struct SExtract {
  SSeries S;
  HermitianJet mixed;           // the obstruction part
  VanishingOrder mixed_order;   // order of the mixed part
};

// Pure/mixed analysis of the z-part of a model germ. The mixed part is data,
// not an error (nonzero mixed part means finite Bloom-Graham type).
SExtract extract_S(const HermitianJet& z_jet);

// Univariate composition S(gamma_hat(t)) with the same honesty flags as
// compose().
struct UniJet {
  UniPoly poly;
  std::optional<long> valid_to;
  bool rule_capped = false;
  long horizon = -1;
};

UniJet compose_S(const SSeries& S, const CurveJet& zhat, long horizon_hint = -1);

struct RadiusVerdict {
  enum Kind { Positive, Zero, UnknownFiniteJet } kind = UnknownFiniteJet;
  std::optional<Rat> radius;  // when a finite positive radius is certified
  bool entire = false;        // polynomial series
  std::string detail;
};

// Convergence-radius verdict for S (optionally composed with a curve).
// Multivariate verdicts are directional: Positive means some coordinate
// direction carries a convergent section, Zero means the series diverges at
// every point of a deleted neighborhood (all variables carry radius-zero
// tails).
RadiusVerdict radius_verdict(const SSeries& S, const CurveJet* zhat = nullptr);

struct TangencyResult {
  bool ok = false;
  CurveJet gamma;  // (gamma_hat, -h), h = truncation of S(gamma_hat)
  ContactResult contact;
  long obstruction_degree = -1;
};

// Theorem 6.3 (i)<=(iii) read constructively at jet level: lift gamma_hat to
// gamma = (gamma_hat, -h) with h the degree-N truncation of S(gamma_hat),
// provided the mixed part composes to order > N along gamma_hat.
TangencyResult tangency_witness(const DefiningFunction& model, const CurveJet& zhat, long N);

// Certифies the unbounded family gamma_N = (gamma_hat, -trunc(S(gamma_hat),N))
// of Lemma 6.7 type: mixed part cancels identically along gamma_hat and a
// single value-ruled variable supplies nonzero residual coefficients for
// every N.
struct LadderCertificate {
  bool valid = false;
  bool exact_orders = false;
  long ord_gamma = 0;
  int ruled_var = -1;
  std::string description;
};

LadderCertificate ladder_certificate(const DefiningFunction& model, const CurveJet& zhat);

}  // namespace germtype
