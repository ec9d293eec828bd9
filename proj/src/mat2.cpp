#include "primdyn/mat2.hpp"

#include <cstdlib>
#include <utility>

#include "primdyn/errors.hpp"

namespace primdyn {

Mat2Q::Mat2Q(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() == 0) throw DomainError("singular matrix: " + str());
}

Mat2Q Mat2Q::parse(const std::string& a, const std::string& b, const std::string& c,
                   const std::string& d) {
  return Mat2Q(parse_rat(a), parse_rat(b), parse_rat(c), parse_rat(d));
}

Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
  return Mat2Q(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
               x.c * y.b + x.d * y.d);
}

Mat2Q Mat2Q::inverse() const {
  Rat dt = det();
  return Mat2Q(d / dt, -b / dt, -c / dt, a / dt);
}

Mat2Q Mat2Q::pow(long m) const {
  Mat2Q base = m < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(m < 0 ? -m : m);
  Mat2Q acc;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Mat2Q::str() const {
  return "[[" + rat_str(a) + "," + rat_str(b) + "],[" + rat_str(c) + "," + rat_str(d) + "]]";
}

Mat2Q triangular_power_closed_form(const Mat2Q& m, long e) {
  if (m.c != 0 || m.d != 1)
    throw DomainError("triangular closed form needs lower row (0,1), got " + m.str());
  if (e == 0) return Mat2Q::identity();
  Rat am = rat_pow(m.a, e);
  Rat top = m.a == 1 ? Rat(e) * m.b : m.b * (1 - am) / (1 - m.a);
  return Mat2Q(am, top, Rat(0), Rat(1));
}

}  // namespace primdyn
