#pragma once

#include <string>

#include "germtype/parser.hpp"

namespace germtype {

enum class FormTag { General, Standard, Model };

std::string form_tag_name(FormTag t);

struct FormInfo {
  FormTag tag = FormTag::General;
  HermitianJet z_part;  // F(z, zbar): the w-free part, over the z variables
  HermitianJet r1;      // the Im(w) factor of a standard form (z variables)
  std::string note;
};

// Classifies the jet against r = 2Re(w) + F + R1*Im(w) + R2 with the
// standard-form constraints checked exactly at jet level. Throws
// NotAHypersurface when the gradient at 0 vanishes.
FormInfo recognize_form(const DefiningFunction& def);

// The w-free part of a model/standard jet as a jet over the z variables,
// tails carried along.
HermitianJet z_part(const DefiningFunction& def);

}  // namespace germtype
