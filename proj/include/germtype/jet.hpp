#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "germtype/exponent.hpp"
#include "germtype/rational.hpp"

namespace germtype {

// Tail data for the pure coefficients c_j of one variable beyond the stored
// truncation. `Unknown` records that such a tail exists without giving
// values; the other kinds define c_j exactly for every j >= from.
struct TailRule {
  enum Kind { Unknown, Geometric, PowerFactorial, PolynomialRate };
  Kind kind = Unknown;
  Rat ratio = Rat(1);  // Geometric: c_j = ratio^j
  int power = 1;       // PowerFactorial: c_j = (j!)^power; PolynomialRate: c_j = j^power
  int from = 2;        // rule governs j >= from

  bool defines_values() const { return kind != Unknown; }
  Rat coeff(long j) const;  // only for value-defining kinds
  std::string str() const;
};

// Finite Taylor data of a real-valued smooth germ F(z, zbar) with Gaussian
// rational coefficients.
//
// Semantics of the honesty flags:
//   complete == true : stored coefficients plus declared tails are the whole
//                      Taylor series of the germ (tails confined to pure
//                      powers of their variable).
//   complete == false: nothing is known beyond total degree `truncation`.
struct HermitianJet {
  int nvars = 0;
  std::map<ExponentPair, GaussianRational> coeffs;
  int truncation = 0;
  bool complete = true;
  std::map<int, TailRule> tails;

  bool is_zero() const { return coeffs.empty(); }
  bool has_value_tails() const;
  bool has_any_tail() const { return !tails.empty(); }

  // Smallest total degree of a coefficient slot this jet does not know.
  // Composition validity bounds derive from it. Returns nullopt when the
  // jet is complete (possibly via value-defining tails).
  std::optional<long long> first_unknown_degree() const;

  const GaussianRational& coeff(const ExponentPair& p) const;
  void set_coeff(const ExponentPair& p, const GaussianRational& c);

  // Pure tail coefficient of variable k at exponent j, consulting stored
  // data first and then the tail rule. Throws if the slot is unknown.
  GaussianRational pure_coeff(int k, long j) const;
};

// Purely holomorphic polynomial (no zbar exponents).
struct HoloPoly {
  int nvars = 0;
  std::map<Exponent, GaussianRational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long long max_degree() const;
};

struct VanishingOrder {
  bool infinite = false;
  long long value = 0;         // when finite
  long long witnessed_to = 0;  // zero "up to" this order, for the flat case
  bool operator==(const VanishingOrder&) const = default;
};

HermitianJet build_jet(int n, const std::vector<std::pair<ExponentPair, GaussianRational>>& entries,
                       int truncation, bool symmetrize = false);

HermitianJet jet_add(const HermitianJet& f, const HermitianJet& g);
HermitianJet jet_sub(const HermitianJet& f, const HermitianJet& g);
HermitianJet jet_mul(const HermitianJet& f, const HermitianJet& g);
HermitianJet jet_scale(const HermitianJet& f, const Rat& s);

HermitianJet squared_modulus(const HoloPoly& h);
HermitianJet holo_as_jet(const HoloPoly& h);  // h + conj(h) is NOT taken; embeds h when real usage is guaranteed

// 2 Re(h) as a Hermitian jet.
HermitianJet two_re(const HoloPoly& h);

std::pair<HermitianJet, HermitianJet> pure_mixed_split(const HermitianJet& f);

VanishingOrder vanishing_order(const HermitianJet& f);

GaussianRational evaluate(const HermitianJet& f, const std::vector<GaussianRational>& z);
GaussianRational evaluate(const HoloPoly& h, const std::vector<GaussianRational>& z);

// S(F) = { alpha + beta : C_{alpha beta} != 0 } projected from stored data.
std::set<Exponent> support(const HermitianJet& f);

// Restrict/truncate the stored coefficients to total degree <= T and mark
// the result as a plain jet (unknown tail beyond T).
HermitianJet jet_truncate(const HermitianJet& f, int T);

// Drop a set of variables (substitute z_k = 0 for k in kill).
HermitianJet jet_kill_vars(const HermitianJet& f, const std::vector<int>& kill);

HoloPoly holo_mul(const HoloPoly& a, const HoloPoly& b);
HoloPoly holo_pow(const HoloPoly& a, long k);

}  // namespace germtype
