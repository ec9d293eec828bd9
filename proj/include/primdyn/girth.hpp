#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "primdyn/gentuple.hpp"
#include "primdyn/oracle.hpp"

namespace primdyn {

// Outcome of a shortest-relation search over Cay(G, S).  The cycle, when
// present, is a word in the tuple's letters (letter i refers to entry i),
// nonempty, cyclically reduced, and oracle-identity after substitution.
struct GirthCertificate {
  GenTuple generators;
  int bound = 0;                  // searched lengths 1..bound
  std::optional<Word> cycle;      // empty optional: no relation <= bound
  std::string oracle_id;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0;
  bool complete = true;           // false when the node budget cut the search

  int girth() const { return cycle ? static_cast<int>(cycle->size()) : -1; }
};

// Exhaustive length-ordered, lexicographic search over cyclically reduced
// words in the generators' letters; first hit is the exact girth.
GirthCertificate girth_search(const GenTuple& gens, const GroupOracle& oracle, int max_len,
                              std::uint64_t node_budget = UINT64_MAX);

// Substitute tuple entries for the letters of a cycle word.
Word substitute(const Word& letter_word, const GenTuple& gens);

}  // namespace primdyn
