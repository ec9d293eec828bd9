#pragma once

#include <vector>

#include "primdyn/gentuple.hpp"
#include "primdyn/word.hpp"

namespace primdyn {

// One Nielsen move on (a,b) together with the word w making
// [a',b'] = w [a,b] w^-1 as freely reduced words.
struct CommutatorConjugacy {
  Move move;
  Word conjugator;
};

// All 8 one-step Nielsen moves on (a,b), each verified by free reduction
// before returning.  Throws InvariantViolation if any identity fails.
std::vector<CommutatorConjugacy> commutator_conjugacy_table();

}  // namespace primdyn
