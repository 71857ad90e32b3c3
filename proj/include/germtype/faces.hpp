#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germtype/jet.hpp"
#include "germtype/newton.hpp"

namespace germtype {

struct FacePart {
  int face_id = -1;
  HermitianJet poly;
};

// Restriction of F to the exponents alpha+beta on a compact face.
FacePart face_part(const HermitianJet& F, const NewtonPolyhedron& P, const Face& face);

// F_kappa composed with (c_1 t^{a_1}, ..., c_n t^{a_n}) splits into groups
// G_pq(c, cbar) t^p tbar^q with p = a.alpha, q = a.beta and p + q = level.
struct TorusGroup {
  long long p = 0, q = 0;
  std::map<ExponentPair, GaussianRational> terms;
};

struct GroupedTorusSystem {
  Weight weight;
  long long level = 0;
  std::vector<TorusGroup> groups;  // sorted by p
};

GroupedTorusSystem grouped_system(const FacePart& part, const NewtonPolyhedron& P,
                                  const Face& face, const Weight& a);

struct NondegeneracyVerdict {
  enum Kind { Nondegenerate, Degenerate, Unknown } kind = Unknown;
  std::string rule;  // R1/R2/R3/R4 certificate name for Nondegenerate
  Weight witness_weight;
  std::vector<GaussianRational> witness;  // exact torus zero for Degenerate
  std::string detail;
  uint64_t seed = 0;
};

struct FaceBudget {
  int max_cells = 64;        // determining-weight grouping cells to enumerate
  int random_samples = 200;  // random rational torus samples per cell
  int newton_attempts = 6;
  int newton_iters = 60;
};

// Definition of N-nondegeneracy quantifies over every determining weight of
// the face; grouping cells enumerate the finitely many distinct groupings.
NondegeneracyVerdict nondegeneracy_verdict(const HermitianJet& F, const NewtonPolyhedron& P,
                                           const Face& face, const FaceBudget& budget = {},
                                           uint64_t seed = 1);

// All determining-weight grouping cells of a face (one representative weight
// per cell). complete=false when the enumeration hit the budget cap.
std::vector<Weight> grouping_cell_weights(const HermitianJet& F, const NewtonPolyhedron& P,
                                          const Face& face, int max_cells, bool* complete);

struct CanonicityReport {
  enum State { Canonical, NotCanonical, Unknown } state = Unknown;
  std::vector<NondegeneracyVerdict> per_face;  // parallel to P.faces
};

CanonicityReport is_canonical(const HermitianJet& F, const NewtonPolyhedron& P,
                              const FaceBudget& budget = {}, uint64_t seed = 1);

struct TypeValue {
  bool infinite = false;
  Rat value = 0;
  bool operator==(const TypeValue&) const = default;
};

struct TypeTriple {
  TypeValue delta1, delta1_reg, rho1;
};

// Theorem: in a canonical coordinate all three invariants coincide with the
// axis-intercept maximum. Throws NotCanonical / UnknownCanonicity.
TypeTriple type_if_canonical(const SupportSet& s, int n, const CanonicityReport& canon);

}  // namespace germtype
