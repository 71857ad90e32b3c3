#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace germtype {

using Rat = mpq_class;

// Typed error with a stable machine-readable kind string ("SyntaxError",
// "NonRealInput", ...). The CLI maps kinds to exit codes.
struct Error : std::runtime_error {
  std::string kind;
  long position = -1;
  Error(std::string k, const std::string& msg, long pos = -1)
      : std::runtime_error(msg), kind(std::move(k)), position(pos) {}
};

Rat rat_from_string(const std::string& s);
std::string rat_str(const Rat& q);

// mpq_class lacks a long long constructor; all our integer data fits in long.
inline Rat rat_ll(long long v) { return Rat(static_cast<long>(v)); }

// Element of Q(i) in canonical reduced form (mpq_class keeps each part
// reduced with positive denominator).
struct GaussianRational {
  Rat re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long n) : re(n), im(0) {}
  GaussianRational(Rat r) : re(std::move(r)), im(0) {}
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return GaussianRational(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }

  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }

  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  // |x|^2 as a rational.
  Rat norm() const { return re * re + im * im; }

  GaussianRational inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    Rat n = norm();
    return GaussianRational(re / n, -im / n);
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  GaussianRational pow(long k) const;

  // Canonical text form: "3", "-1/2", "i", "-i", "2*i", "1+i", "1/2-3*i".
  std::string str() const;

  double to_double_re() const { return re.get_d(); }
  double to_double_im() const { return im.get_d(); }
};

using GR = GaussianRational;

}  // namespace germtype
