#pragma once

#include <optional>

#include "germtype/contact.hpp"
#include "germtype/faces.hpp"
#include "germtype/form.hpp"
#include "germtype/series.hpp"

namespace germtype {

struct SearchBudget {
  int random_curves = 48;
  int max_terms_per_component = 3;
  uint64_t seed = 1;
};

struct TypeWitness {
  CurveJet curve{CurveJet::Full, {}, std::nullopt};
  ContactResult contact;
  std::string family;  // axis | face | random
};

struct TypeSearchResult {
  bool has_bound = false;
  bool infinite = false;  // an exact infinite-order tangency witness was found
  Rat bound = 0;          // certified lower bound for Delta_1 (or Delta_1^reg)
  bool censored = false;  // best bound comes from a censored (AtLeast) order
  bool exact = false;     // set when canonicity pins the value (Theorem route)
  std::optional<TypeWitness> witness;
  uint64_t seed = 0;
  int candidates_tried = 0;
};

// Deterministic certified-lower-bound search over (a) axis curves, (b)
// degenerate-face monomial curves with the greedy pure-part cancellation
// ladder, (c) seeded random curves up to the degree bound. The supremum
// defining the type ranges over an infinite family; exactness is only
// claimed through the canonical-coordinate theorem.
TypeSearchResult type_search(const DefiningFunction& def, int max_degree, bool regular_only,
                             const NewtonPolyhedron& P, const CanonicityReport& canon,
                             const SearchBudget& budget = {});

}  // namespace germtype
