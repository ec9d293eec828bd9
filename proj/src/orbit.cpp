#include "primdyn/orbit.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace primdyn {

std::vector<GenTuple> OrbitResult::all_tuples() const {
  std::vector<GenTuple> out;
  for (const auto& lvl : levels) out.insert(out.end(), lvl.tuples.begin(), lvl.tuples.end());
  return out;
}

bool OrbitResult::element_known(const Word& w) const {
  if (levels.empty()) return false;
  const auto& els = levels.back().elements;
  return std::binary_search(els.begin(), els.end(), w);
}

OrbitResult orbit_bfs(const GenTuple& seed, MoveSystem moves, int depth,
                      const OrbitOptions& opt) {
  OrbitResult res;
  auto norm_key = [&](const GenTuple& t) {
    if (opt.oracle) {
      std::string k;
      for (const Word& w : t.entries()) {
        if (auto nf = opt.oracle->normal_form(w)) k += nf->str();
        else k += w.str();
        k.push_back(',');
      }
      return k;
    }
    return t.key();
  };

  std::unordered_set<std::string> seen;
  std::set<Word> elements;
  std::vector<GenTuple> frontier;

  auto admit = [&](const GenTuple& t) -> bool {
    if (opt.oracle) {
      if (auto gen = opt.oracle->generates(t)) {
        res.generation_checked = true;
        if (!*gen) {
          ++res.generation_rejected;
          return false;
        }
      }
    }
    return true;
  };

  auto push_level = [&](int d, std::vector<GenTuple> tuples) {
    for (const GenTuple& t : tuples)
      for (const Word& w : t.entries()) elements.insert(w);
    OrbitLevel lvl;
    lvl.depth = d;
    lvl.tuples = std::move(tuples);
    lvl.elements.assign(elements.begin(), elements.end());
    res.levels.push_back(std::move(lvl));
  };

  if (!admit(seed)) {
    push_level(0, {});
    return res;
  }
  seen.insert(norm_key(seed));
  res.nodes = 1;
  frontier = {seed};
  push_level(0, frontier);

  for (int d = 1; d <= depth; ++d) {
    std::vector<GenTuple> next;
    for (const GenTuple& t : frontier) {
      for (const GenTuple& nb : neighbors(t, moves)) {
        if (!seen.insert(norm_key(nb)).second) continue;
        if (!admit(nb)) continue;
        ++res.nodes;
        next.push_back(nb);
        if (res.nodes > opt.node_budget) {
          push_level(d, std::move(next));
          throw BudgetExceededError(std::move(res));
        }
      }
    }
    frontier = next;
    push_level(d, std::move(next));
  }
  return res;
}

}  // namespace primdyn
