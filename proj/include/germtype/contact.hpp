#pragma once

#include <map>
#include <optional>

#include "germtype/curve.hpp"
#include "germtype/jet.hpp"

namespace germtype {

// Real bivariate jet in (t, tbar).
struct BiPoly {
  std::map<std::pair<long, long>, GaussianRational> c;

  void add(long p, long q, const GaussianRational& v);
  bool is_zero() const { return c.empty(); }
  long min_total_degree() const;  // -1 when zero
};

// r(gamma(t), conj gamma(t)) with explicit honesty bookkeeping.
//
// valid_to: coefficients of total degree <= valid_to are exact; nullopt
// means the expansion is exact everywhere it was computed. rule_capped
// marks that value-tail contributions beyond `horizon` were not expanded
// (they are computable, just not materialized).
struct ComposeResult {
  BiPoly series;
  std::optional<long> valid_to;
  bool rule_capped = false;
  long horizon = -1;
};

ComposeResult compose(const HermitianJet& r, const CurveJet& g, long horizon_hint = -1);

struct ContactOrder {
  enum Kind { Finite, AtLeast, InfiniteZero } kind = Finite;
  long value = 0;
  bool operator==(const ContactOrder&) const = default;
};

struct ContactResult {
  ContactOrder order;
  long curve_ord = 1;

  bool censored() const { return order.kind == ContactOrder::AtLeast; }
  bool infinite() const { return order.kind == ContactOrder::InfiniteZero; }
  // exact ratio, or the certified lower bound for censored orders
  Rat ratio_value() const;
};

ContactResult contact_order(const HermitianJet& r, const CurveJet& g);

}  // namespace germtype
