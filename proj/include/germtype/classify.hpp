#pragma once

#include <array>
#include <optional>

#include "germtype/faces.hpp"
#include "germtype/form.hpp"
#include "germtype/newton.hpp"
#include "germtype/series.hpp"
#include "germtype/typesearch.hpp"

namespace germtype {

enum class Verdict { Proved, Refuted, Unknown };
std::string verdict_name(Verdict v);

struct ConditionReport {
  Verdict v = Verdict::Unknown;
  std::string certificate;
  std::string detail;
  bool jet_scope = false;  // certificate valid to the jet horizon only
};

struct BGResult {
  enum Kind { Finite, AtLeastK, Infinite } kind = AtLeastK;
  long value = 0;  // Finite: the type; AtLeastK: every order < value is excluded
  std::string certificate;
  bool jet_scope = false;
};

// Minimal mixed-term order of the model-form germ (pure terms absorbable by
// a holomorphic graph change). Throws NotModelForm.
BGResult bloom_graham(const DefiningFunction& def, long bound);

struct ClassifyBudget {
  FaceBudget face;
  SearchBudget search;
  int max_degree = 10;
  long bg_bound = 64;
  uint64_t seed = 1;
};

struct ClassificationReport {
  std::string corpus_id;
  FormTag form = FormTag::General;
  Convenience conv;
  Rho1 rho;
  std::optional<int> slab;
  NewtonPolyhedron polyhedron;
  CanonicityReport canon;
  bool bg_applicable = false;
  BGResult bg;
  TypeSearchResult search_full, search_regular;
  std::array<ConditionReport, 8> cond;  // cond[k] is condition (k+1)
  uint64_t seed = 1;
  std::vector<std::string> notes;
};

ClassificationReport classify(const DefiningFunction& def, const ClassifyBudget& budget = {});

// Implications X => Y of the classification diagram, 1-based.
const std::vector<std::pair<int, int>>& proposition_arrows();

// Proved must propagate forward and Refuted backward without conflict.
bool diagram_sound(const std::array<ConditionReport, 8>& cond);

struct LeviSample {
  std::vector<GaussianRational> point;
  bool singular = false;
  std::vector<double> eigenvalues;
};

std::vector<LeviSample> levi_spot_check(const DefiningFunction& def,
                                        const std::vector<std::vector<GaussianRational>>& points);

std::vector<std::vector<GaussianRational>> default_levi_points(const DefiningFunction& def);

}  // namespace germtype
