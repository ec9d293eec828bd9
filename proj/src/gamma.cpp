#include "primdyn/gamma.hpp"

#include <algorithm>

#include "primdyn/errors.hpp"

namespace primdyn {

GammaOracle::GammaOracle(int n) : n_(n) {
  if (n < 2) throw DomainError("GammaOracle requires n >= 2");
  Word r = commutator(Word::parse("a", 2), Word::parse("b", 2)).pow(n);
  for (const Word& base : {r, r.inverse()}) {
    const auto& ls = base.letters();
    for (std::size_t s = 0; s < ls.size(); ++s) {
      std::vector<Word::Letter> rot(ls.begin() + s, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + s);
      rotations_.push_back(std::move(rot));
    }
  }
  std::sort(rotations_.begin(), rotations_.end());
  rotations_.erase(std::unique(rotations_.begin(), rotations_.end()), rotations_.end());
}

bool GammaOracle::is_identity(const Word& w0) const {
  if (w0.rank() > 2) throw UnsupportedRankError("Gamma_n words must have rank <= 2");
  const std::size_t relator_len = 4 * static_cast<std::size_t>(n_);
  const std::size_t threshold = 4 * static_cast<std::size_t>(n_ - 1) + 1;

  std::vector<Word::Letter> w = w0.cyclically_reduced().letters();
  while (!w.empty()) {
    const std::size_t m = w.size();
    // Search the cyclic word for a >= threshold-letter piece of a rotation.
    bool replaced = false;
    if (m >= threshold) {
      std::vector<Word::Letter> dbl = w;
      dbl.insert(dbl.end(), w.begin(), w.end());
      for (std::size_t start = 0; start < m && !replaced; ++start) {
        for (const auto& rot : rotations_) {
          std::size_t k = 0;
          const std::size_t kmax = std::min(m, relator_len);
          while (k < kmax && dbl[start + k] == rot[k]) ++k;
          if (k >= threshold) {
            // rot = S T with S matched; S = T^-1 in the group, so the cyclic
            // word u S becomes u T^-1 (strictly shorter).
            std::vector<Word::Letter> next(dbl.begin() + start + k, dbl.begin() + start + m);
            for (std::size_t t = rot.size(); t > k; --t) next.push_back(-rot[t - 1]);
            w = Word(std::move(next), 2).cyclically_reduced().letters();
            replaced = true;
            break;
          }
        }
      }
    }
    if (!replaced) return false;
  }
  return true;
}

bool gamma_is_identity(const Word& w, int n) { return GammaOracle(n).is_identity(w); }

}  // namespace primdyn
