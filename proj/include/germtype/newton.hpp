#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "germtype/jet.hpp"

namespace germtype {

using SupportSet = std::set<Exponent>;
using Weight = std::vector<long long>;

struct Facet {
  Weight normal;  // primitive, componentwise >= 0
  long long level = 0;
  bool compact = false;  // all normal entries strictly positive
  std::vector<Exponent> tight_points;
};

struct Face {
  int id = -1;
  int dim = 0;
  std::vector<Exponent> support_points;  // support points lying on the face
  std::vector<Exponent> vertex_points;   // vertices of the polyhedron on it
  std::vector<Weight> weight_generators; // tight facet normals: N(face) = cone(generators)
  Weight canonical_weight;               // strictly positive determining weight, coordinatewise reduced
  long long canonical_level = 0;
  std::vector<int> tight_facets;
};

struct NewtonPolyhedron {
  int dim = 0;
  std::vector<Exponent> support;
  std::vector<Facet> facets;
  std::vector<Exponent> vertices;
  std::vector<Face> faces;  // compact faces only, sorted by (dim, support)

  const Face* face_by_id(int id) const;
};

// Exact H/V description of conv( union of p + R_+^n ) over the support set.
// Throws EmptySupport for the flat jet.
NewtonPolyhedron hull(const SupportSet& s, int n);

// True iff the strictly positive integer weight selects exactly this face:
// argmin over the polyhedron of w . xi equals the face.
bool weight_determines(const NewtonPolyhedron& P, const Weight& w, const Face& face,
                       long long* level_out = nullptr);

struct Convenience {
  bool convenient = false;
  std::set<int> missing_axes;
  bool flat = false;
};

Convenience convenience(const SupportSet& s, int n);

struct Rho1 {
  bool infinite = false;
  bool flat = false;
  Rat value = 0;
  std::vector<long long> intercepts;  // per axis; -1 where the axis is missed
};

Rho1 rho1(const SupportSet& s, int n);

// Does the polyhedron equal { xi : xi_k >= 1 } for some axis k?
std::optional<int> slab_axis(const SupportSet& s, int n);

}  // namespace germtype
