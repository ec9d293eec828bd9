#pragma once

#include <cstddef>
#include <vector>

#include "primdyn/errors.hpp"
#include "primdyn/gentuple.hpp"
#include "primdyn/oracle.hpp"

namespace primdyn {

// Level k of a move orbit: all tuples reachable in at most k moves (R_k)
// and the elements occurring in them (P_k).  Levels chain monotonically.
struct OrbitLevel {
  int depth = 0;
  std::vector<GenTuple> tuples;   // newly discovered at this depth
  std::vector<Word> elements;     // cumulative P_depth, sorted, deduplicated
};

struct OrbitResult {
  std::vector<OrbitLevel> levels;
  std::size_t nodes = 0;          // tuples stored
  bool generation_checked = false;
  std::size_t generation_rejected = 0;

  // R_depth as one flat list (levels are disjoint by construction).
  std::vector<GenTuple> all_tuples() const;
  const std::vector<Word>& elements_at(int depth) const { return levels.at(depth).elements; }
  bool element_known(const Word& w) const;
};

struct OrbitOptions {
  std::size_t node_budget = 1'000'000;
  const GroupOracle* oracle = nullptr;  // dedup normal form + generation check
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(OrbitResult partial_result)
      : Error("orbit node budget exceeded"), partial(std::move(partial_result)) {}
  OrbitResult partial;
};

// Deterministic BFS over one-move neighborhoods.  Tuples are deduplicated
// by entry equality (under the oracle's normal form when supplied); when the
// oracle can decide generation, non-generating tuples are dropped per the
// R_n definition and the result is flagged generation_checked.
OrbitResult orbit_bfs(const GenTuple& seed, MoveSystem moves, int depth,
                      const OrbitOptions& opt = {});

}  // namespace primdyn
