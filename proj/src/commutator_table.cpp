#include "primdyn/commutator_table.hpp"

#include "primdyn/errors.hpp"

namespace primdyn {

std::vector<CommutatorConjugacy> commutator_conjugacy_table() {
  const Word a = Word::parse("a", 2), b = Word::parse("b", 2);
  const Word e(2);
  using K = Move::Kind;
  // Moves in the order of the proposition's case list:
  // a<-ab, a<-ba, a<-ab^-1, a<-b^-1a, b<-ab, b<-a^-1b, b<-ba, b<-ba^-1.
  const std::vector<std::pair<Move, Word>> table = {
      {{K::NielsenRight, 0, 1, +1}, e},
      {{K::NielsenLeft, 0, 1, +1}, b},
      {{K::NielsenRight, 0, 1, -1}, e},
      {{K::NielsenLeft, 0, 1, -1}, b.inverse()},
      {{K::NielsenLeft, 1, 0, +1}, a},
      {{K::NielsenLeft, 1, 0, -1}, a.inverse()},
      {{K::NielsenRight, 1, 0, +1}, e},
      {{K::NielsenRight, 1, 0, -1}, e},
  };

  const GenTuple seed = GenTuple::seed_basis(2);
  const Word base = commutator(a, b);
  std::vector<CommutatorConjugacy> out;
  for (const auto& [move, w] : table) {
    GenTuple t = seed.apply(move);
    Word lhs = commutator(t.entries()[0], t.entries()[1]);
    Word rhs = base.conjugated_by(w);
    if (lhs != rhs)
      throw InvariantViolation("commutator conjugacy failed for move " + move.str() +
                               ": [" + t.entries()[0].str() + "," + t.entries()[1].str() +
                               "] != " + w.str() + "[a,b]" + w.inverse().str());
    out.push_back({move, w});
  }
  return out;
}

}  // namespace primdyn
