#pragma once

#include <optional>
#include <string>

#include "primdyn/gentuple.hpp"
#include "primdyn/word.hpp"

namespace primdyn {

// Word-problem oracle for a marked group: the word's letters refer to the
// group's (implicit) generating basis.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual bool is_identity(const Word& w) const = 0;
  virtual std::optional<Word> normal_form(const Word&) const { return std::nullopt; }
  // Whether the tuple generates the whole group, when decidable.
  virtual std::optional<bool> generates(const GenTuple&) const { return std::nullopt; }
  virtual std::string id() const = 0;
};

class FreeOracle final : public GroupOracle {
 public:
  explicit FreeOracle(int rank = 2) : rank_(rank) {}
  bool is_identity(const Word& w) const override { return w.empty(); }
  std::optional<Word> normal_form(const Word& w) const override { return w; }
  std::optional<bool> generates(const GenTuple& t) const override;
  std::string id() const override { return "free:" + std::to_string(rank_); }

 private:
  int rank_;
};

class AbelianOracle final : public GroupOracle {
 public:
  explicit AbelianOracle(int rank = 2) : rank_(rank) {}
  bool is_identity(const Word& w) const override;
  std::string id() const override { return "z^" + std::to_string(rank_); }

 private:
  int rank_;
};

// Nielsen-reduce the pair until no length-reducing multiplication remains;
// a reduced pair is a basis of the subgroup it generates, so it generates
// F_2 exactly when it ends as two distinct single letters.
bool pair_generates_f2(const Word& u, const Word& v);

}  // namespace primdyn
