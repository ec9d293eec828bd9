#include "primdyn/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace primdyn {

bool AbelianOracle::is_identity(const Word& w) const {
  auto v = w.abelianization();
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::optional<bool> FreeOracle::generates(const GenTuple& t) const {
  if (rank_ != 2 || t.size() != 2) return std::nullopt;
  return pair_generates_f2(t.entries()[0], t.entries()[1]);
}

bool pair_generates_f2(const Word& u0, const Word& v0) {
  Word u = u0, v = v0;
  bool progress = true;
  while (progress) {
    progress = false;
    if (u.empty() || v.empty()) return false;
    const Word* others[2] = {&v, &u};
    Word* targets[2] = {&u, &v};
    for (int k = 0; k < 2 && !progress; ++k) {
      Word& x = *targets[k];
      const Word& y = *others[k];
      for (const Word& cand : {x * y, x * y.inverse(), y * x, y.inverse() * x}) {
        if (cand.size() < x.size()) {
          x = cand;
          progress = true;
          break;
        }
      }
    }
  }
  if (u.size() != 1 || v.size() != 1) return false;
  return std::abs(u.letters()[0]) != std::abs(v.letters()[0]);
}

}  // namespace primdyn
