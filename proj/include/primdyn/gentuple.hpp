#pragma once

#include <string>
#include <vector>

#include "primdyn/word.hpp"

namespace primdyn {

// One elementary move on an ordered generating tuple.
//
// Schreier system: Swap (s_i <-> s_j), Invert (s_i <- s_i^-1),
// MulRight (s_i <- s_i s_j).
// Nielsen system: NielsenLeft (s_k <- s_j^sign s_k),
// NielsenRight (s_k <- s_k s_j^sign); no swaps, no bare inversions.
struct Move {
  enum class Kind { Swap, Invert, MulRight, NielsenLeft, NielsenRight };
  Kind kind;
  int i = 0;      // target entry
  int j = 0;      // other entry (unused for Invert)
  int sign = 1;   // Nielsen moves only

  std::string str() const;
  friend bool operator==(const Move&, const Move&) = default;
};

// Move that undoes this one (as a short move sequence: MulRight needs 3
// Schreier moves, so inversion is expressed at the sequence level).
std::vector<Move> inverse_moves(const Move& m);

enum class MoveSystem { Schreier, Nielsen };

// Ordered generating tuple plus the move history that produced it.
class GenTuple {
 public:
  GenTuple() = default;
  explicit GenTuple(std::vector<Word> entries, std::vector<Move> history = {});

  const std::vector<Word>& entries() const { return entries_; }
  const std::vector<Move>& history() const { return history_; }
  std::size_t size() const { return entries_.size(); }
  int rank() const { return entries_.empty() ? 0 : entries_[0].rank(); }

  GenTuple apply(const Move& m) const;

  // Entry words joined by commas: "ab,B".
  std::string key() const;

  static GenTuple seed_basis(int m);  // (a, b, ..., m-th letter)

  friend bool operator==(const GenTuple& x, const GenTuple& y) {
    return x.entries_ == y.entries_;
  }

 private:
  std::vector<Word> entries_;
  std::vector<Move> history_;
};

// All tuples one move away, in canonical order (move kind, indices, sign).
std::vector<GenTuple> schreier_neighbors(const GenTuple& t);
std::vector<GenTuple> nielsen_neighbors(const GenTuple& t);
std::vector<GenTuple> neighbors(const GenTuple& t, MoveSystem sys);

// Replay a move history from a seed tuple.
GenTuple replay(const GenTuple& seed, const std::vector<Move>& history);

}  // namespace primdyn
