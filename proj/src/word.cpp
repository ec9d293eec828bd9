#include "primdyn/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "primdyn/errors.hpp"

namespace primdyn {

namespace {

std::vector<Word::Letter> free_reduce(const std::vector<Word::Letter>& in) {
  std::vector<Word::Letter> out;
  out.reserve(in.size());
  for (Word::Letter x : in) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters, int rank) : rank_(rank) {
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) > rank)
      throw MalformedWordError("letter " + std::to_string(x) + " out of rank " +
                               std::to_string(rank));
  }
  letters_ = free_reduce(letters);
}

Word Word::parse(std::string_view s, int rank) {
  std::vector<Letter> letters;
  int max_idx = 0;
  for (char c : s) {
    if (c == ' ' || c == '*' || c == '.') continue;
    if (c == '1' && s.size() == 1) break;  // "1" denotes the empty word
    int idx;
    bool invflag;
    if (c >= 'a' && c <= 'z') {
      idx = c - 'a' + 1;
      invflag = false;
    } else if (c >= 'A' && c <= 'Z') {
      idx = c - 'A' + 1;
      invflag = true;
    } else {
      throw MalformedWordError(std::string("bad word character '") + c + "'");
    }
    max_idx = std::max(max_idx, idx);
    letters.push_back(invflag ? -idx : idx);
  }
  return Word(std::move(letters), std::max(rank, max_idx));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  for (Letter x : rhs.letters_) {
    if (!cat.empty() && cat.back() == -x)
      cat.pop_back();
    else
      cat.push_back(x);
  }
  Word w(std::max(rank_, rhs.rank_));
  w.letters_ = std::move(cat);
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word acc(rank_);
  for (long i = 0, e = std::labs(n); i < e; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugated_by(const Word& w) const { return w * *this * w.inverse(); }

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w(rank_);
  w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return w;
}

std::vector<long long> Word::abelianization() const {
  std::vector<long long> v(rank_, 0);
  for (Letter x : letters_) v[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return v;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) {
    int idx = std::abs(x) - 1;
    s.push_back(static_cast<char>(x > 0 ? 'a' + idx : 'A' + idx));
  }
  return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  // letter order a < A < b < B < ...
  auto key = [](Letter x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); };
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (auto c = key(letters_[i]) <=> key(o.letters_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

Word reduce(std::vector<Word::Letter> letters, int rank) {
  return Word(std::move(letters), rank);
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ w.letters().size();
  for (auto x : w.letters()) h = h * 1099511628211ull + static_cast<std::size_t>(x + 1024);
  return h;
}

}  // namespace primdyn
