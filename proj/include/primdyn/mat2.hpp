#pragma once

#include <string>

#include "primdyn/rational.hpp"

namespace primdyn {

// 2x2 matrix with exact rational entries and nonzero determinant.
struct Mat2Q {
  Rat a, b, c, d;

  Mat2Q() : a(1), b(0), c(0), d(1) {}
  Mat2Q(Rat a_, Rat b_, Rat c_, Rat d_);

  static Mat2Q identity() { return Mat2Q(); }
  // Entries row-major, each accepted by parse_rat ("13/100" or "0.13").
  static Mat2Q parse(const std::string& a, const std::string& b, const std::string& c,
                     const std::string& d);

  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }
  Mat2Q inverse() const;
  Mat2Q pow(long m) const;  // binary exponentiation, m may be negative
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  std::string str() const;
  friend bool operator==(const Mat2Q&, const Mat2Q&) = default;
};

Mat2Q operator*(const Mat2Q& x, const Mat2Q& y);

// Closed-form power of [[a,b],[0,1]]: [[a^m, b(1-a^m)/(1-a)],[0,1]], with
// the a = 1 shear handled as top-right m*b.
Mat2Q triangular_power_closed_form(const Mat2Q& m, long e);

}  // namespace primdyn
