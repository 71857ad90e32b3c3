#pragma once

#include <string>

#include "germtype/parser.hpp"

namespace germtype {

// Canonical expression text; parse(print_expression(f)) reproduces the
// coefficient map exactly. With include_directive, truncation/tail state is
// emitted as a leading '#' line so the full jet round-trips.
std::string print_expression(const HermitianJet& jet, int nvars_z, bool has_w,
                             bool include_directive = false);

std::string print_expression(const DefiningFunction& def, bool include_directive = false);

// Name of variable index i under the (z1..zn, w) convention.
std::string variable_name(int i, int nvars_z, bool has_w);

}  // namespace germtype
