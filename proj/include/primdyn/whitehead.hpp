#pragma once

#include <string>
#include <vector>

#include "primdyn/word.hpp"

namespace primdyn {

struct PrimitivityResult {
  bool primitive = false;
  Word terminal;                   // word of minimal cyclic length reached
  std::vector<std::string> trace;  // automorphisms applied, in order
};

// Rank-2 primitivity decision: cyclically reduce, then greedily apply the
// rank-2 Whitehead automorphisms while any strictly shrinks the cyclic
// length; primitive exactly when the terminal cyclic length is 1.
// Rank != 2 is rejected.
PrimitivityResult whitehead_primitive(const Word& w);

}  // namespace primdyn
