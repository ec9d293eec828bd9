#include "primdyn/whitehead.hpp"

#include <array>
#include <cstdlib>

#include "primdyn/errors.hpp"

namespace primdyn {

namespace {

struct Auto {
  Word img[2];  // images of a, b
  std::string name;
};

Word apply(const Auto& phi, const Word& w) {
  Word out(2);
  for (auto x : w.letters()) {
    const Word& g = phi.img[std::abs(x) - 1];
    out = out * (x > 0 ? g : g.inverse());
  }
  return out;
}

// Type-II Whitehead automorphisms of F_2: multiplier v in {a,A,b,B}, the
// other generator u maps to uv, v^-1 u, or v^-1 u v.  Type-I permutations
// never change cyclic length and are omitted.
const std::vector<Auto>& autos() {
  static const std::vector<Auto> table = [] {
    std::vector<Auto> t;
    for (int vi : {1, -1, 2, -2}) {
      Word v = Word({vi}, 2);
      int other = std::abs(vi) == 1 ? 2 : 1;
      Word u = Word({other}, 2);
      std::string vs = Word({vi}, 2).str();
      std::string us = u.str();
      auto add = [&](Word img_u, const std::string& desc) {
        Auto phi;
        phi.img[std::abs(vi) - 1] = Word({std::abs(vi)}, 2);
        phi.img[other - 1] = img_u;
        phi.name = us + "->" + desc;
        t.push_back(phi);
      };
      add(u * v, us + vs);
      add(v.inverse() * u, Word({-vi}, 2).str() + us);
      add(v.inverse() * u * v, Word({-vi}, 2).str() + us + vs);
    }
    return t;
  }();
  return table;
}

}  // namespace

PrimitivityResult whitehead_primitive(const Word& w) {
  if (w.rank() != 2)
    throw UnsupportedRankError("whitehead_primitive supports rank 2 only, got rank " +
                               std::to_string(w.rank()));
  PrimitivityResult res;
  Word cur = w.cyclically_reduced();
  bool improved = true;
  while (improved && cur.size() > 1) {
    improved = false;
    for (const Auto& phi : autos()) {
      Word cand = apply(phi, cur).cyclically_reduced();
      if (cand.size() < cur.size()) {
        cur = cand;
        res.trace.push_back(phi.name);
        improved = true;
        break;
      }
    }
  }
  res.terminal = cur;
  res.primitive = cur.size() == 1;
  return res;
}

}  // namespace primdyn
