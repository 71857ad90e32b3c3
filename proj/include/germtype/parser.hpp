#pragma once

#include <optional>
#include <string>

#include "germtype/jet.hpp"

namespace germtype {

// A defining-function expression, fully expanded. Variables are ordered
// z1..zn then w (when present, always the last index).
struct DefiningFunction {
  int nvars_z = 0;
  bool has_w = false;
  HermitianJet jet;
  std::string source_text;

  int total_vars() const { return nvars_z + (has_w ? 1 : 0); }
  int w_index() const { return nvars_z; }
};

// Input grammar (one expression, optional leading directive line):
//
//   directive := '#' (key '=' value)*      keys: n, T, tail
//   expr      := ['-'] term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := primary ['^' posint]
//   primary   := rational | 'i' | var | 'conj(' expr ')' | 'Re(' expr ')'
//              | 'Im(' expr ')' | '|' expr '|' '^' evenint | '(' expr ')'
//   var       := 'z' index | 'w'
//
// The expansion must be real-valued (Hermitian symmetric); this is verified
// on the expanded coefficients, not syntactically.
DefiningFunction parse_defining_function(const std::string& text);

// Maximum total degree accepted by the parser.
constexpr int kMaxDegree = 64;

}  // namespace germtype
