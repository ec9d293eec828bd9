#pragma once

#include "primdyn/oracle.hpp"

namespace primdyn {

// Word problem for Gamma_n = <a,b | [a,b]^n = 1>, n >= 2, by Dehn-style
// greedy replacement.  Newman's spelling theorem for one-relator groups
// with torsion: a nonempty freely reduced relation contains more than
// (n-1)/n of some cyclic conjugate of ([a,b]^n)^{±1}, i.e. more than
// 4(n-1) letters; replacing the matched piece by the inverse of its
// complement strictly shortens the word, so the loop below is a sound and
// complete decision procedure.
class GammaOracle final : public GroupOracle {
 public:
  explicit GammaOracle(int n);
  bool is_identity(const Word& w) const override;
  std::string id() const override { return "gamma:" + std::to_string(n_); }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<Word::Letter>> rotations_;  // of R^{±1}, length 4n each
};

bool gamma_is_identity(const Word& w, int n);

}  // namespace primdyn
