#include "germtype/rational.hpp"

namespace germtype {

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("BadRational", "cannot parse rational: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

GaussianRational GaussianRational::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GaussianRational acc(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (im == 0) return rat_str(re);
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = rat_str(im) + "*i";
  if (re == 0) return imag;
  if (im > 0 && im != 1) return rat_str(re) + "+" + imag;
  if (im == 1) return rat_str(re) + "+i";
  return rat_str(re) + imag;  // imag already carries the minus sign
}

}  // namespace germtype
