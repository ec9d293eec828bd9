#include "primdyn/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "primdyn/errors.hpp"

namespace primdyn {

Rat parse_rat(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw DomainError("empty rational literal");

  std::string str(s);
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    if (str.find('/') != std::string::npos)
      throw DomainError("rational literal mixes '.' and '/': " + str);
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    size_t frac_len = str.size() - dot - 1;
    if (frac_len == 0) throw DomainError("trailing dot in rational literal: " + str);
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), str.c_str(), 10) != 0)
    throw DomainError("bad rational literal: " + str);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + str);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string rat_decimal(const Rat& q, int digits) {
  Rat a = abs(q);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int scaled = (a.get_num() * scale) / a.get_den();
  Int ip = scaled / scale, fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = ip.get_str();
  if (digits > 0) out += "." + frac;
  if (sgn(q) < 0) out.insert(0, "-");
  return out;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0 && exp < 0) throw DomainError("0 to a negative power");
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  if (exp < 0) r = 1 / r;
  return r;
}

bool is_dyadic(const Rat& q) {
  const Int& den = q.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;  // canonical den > 0
}

double rat_log2(const Rat& q) {
  if (sgn(q) <= 0) throw DomainError("log2 of non-positive rational");
  signed long en, ed;
  double n = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double d = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return (std::log2(n) + en) - (std::log2(d) + ed);
}

}  // namespace primdyn
