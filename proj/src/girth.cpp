#include "primdyn/girth.hpp"

#include <chrono>

#include "primdyn/errors.hpp"

namespace primdyn {

Word substitute(const Word& letter_word, const GenTuple& gens) {
  Word out(gens.rank());
  for (auto x : letter_word.letters()) {
    const Word& g = gens.entries()[std::abs(x) - 1];
    out = out * (x > 0 ? g : g.inverse());
  }
  return out;
}

namespace {

// Letters ordered a < A < b < B < ...
int letter_at(int ordinal) { return (ordinal % 2 == 0) ? ordinal / 2 + 1 : -(ordinal / 2 + 1); }

}  // namespace

GirthCertificate girth_search(const GenTuple& gens, const GroupOracle& oracle, int max_len,
                              std::uint64_t node_budget) {
  if (max_len < 1) throw DomainError("max_len must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  GirthCertificate cert;
  cert.generators = gens;
  cert.bound = max_len;
  cert.oracle_id = oracle.id();

  const int m = static_cast<int>(gens.size());
  const int nletters = 2 * m;
  std::vector<Word::Letter> stack;

  // DFS over freely reduced letter words of fixed length L, lexicographic;
  // cyclic reduction additionally requires first != -last.
  auto dfs = [&](auto&& self, int L) -> std::optional<Word> {
    if (static_cast<int>(stack.size()) == L) {
      if (stack.front() == -stack.back()) return std::nullopt;
      ++cert.nodes_expanded;
      Word lw(stack, m);
      if (lw.size() != stack.size()) return std::nullopt;  // backtracking word
      if (oracle.is_identity(substitute(lw, gens))) return lw;
      return std::nullopt;
    }
    for (int o = 0; o < nletters; ++o) {
      int x = letter_at(o);
      if (!stack.empty() && stack.back() == -x) continue;
      if (cert.nodes_expanded >= node_budget) {
        cert.complete = false;
        return std::nullopt;
      }
      stack.push_back(x);
      if (auto hit = self(self, L)) return hit;
      stack.pop_back();
      if (!cert.complete) return std::nullopt;
    }
    return std::nullopt;
  };

  for (int L = 1; L <= max_len && cert.complete; ++L) {
    stack.clear();
    if (auto hit = dfs(dfs, L)) {
      cert.cycle = *hit;
      break;
    }
  }
  cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return cert;
}

}  // namespace primdyn
