#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace primdyn {

// Freely reduced word over a ranked free alphabet.  Letter k > 0 is the
// k-th generator, -k its inverse.  Reduction happens at construction, so
// every Word in circulation is reduced.
class Word {
 public:
  using Letter = std::int32_t;

  Word() : rank_(0) {}
  explicit Word(int rank) : rank_(rank) {}
  Word(std::vector<Letter> letters, int rank);

  // "abAB" style; capitals are inverses.  rank = 0 infers from the letters
  // (at least the given minimum).
  static Word parse(std::string_view s, int rank = 0);

  const std::vector<Letter>& letters() const { return letters_; }
  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // reduced concatenation
  Word pow(long n) const;
  Word conjugated_by(const Word& w) const;  // w * this * w^-1

  bool is_cyclically_reduced() const;
  Word cyclically_reduced() const;

  // Exponent-sum vector of length rank.
  std::vector<long long> abelianization() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  std::vector<Letter> letters_;
  int rank_;
};

Word reduce(std::vector<Word::Letter> letters, int rank);

// [u, v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace primdyn
