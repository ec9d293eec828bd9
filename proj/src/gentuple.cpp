#include "primdyn/gentuple.hpp"

#include <utility>

#include "primdyn/errors.hpp"

namespace primdyn {

std::string Move::str() const {
  switch (kind) {
    case Kind::Swap:
      return "swap(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Invert:
      return "inv(" + std::to_string(i) + ")";
    case Kind::MulRight:
      return "mul(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::NielsenLeft:
      return std::string("lmul(") + std::to_string(i) + "," + std::to_string(j) +
             (sign > 0 ? ",+" : ",-") + ")";
    case Kind::NielsenRight:
      return std::string("rmul(") + std::to_string(i) + "," + std::to_string(j) +
             (sign > 0 ? ",+" : ",-") + ")";
  }
  return "?";
}

std::vector<Move> inverse_moves(const Move& m) {
  using K = Move::Kind;
  switch (m.kind) {
    case K::Swap:
    case K::Invert:
      return {m};
    case K::MulRight:
      // s_i <- s_i s_j is undone by s_j <- s_j^-1, s_i <- s_i s_j, s_j <- s_j^-1.
      return {Move{K::Invert, m.j}, Move{K::MulRight, m.i, m.j}, Move{K::Invert, m.j}};
    case K::NielsenLeft:
      return {Move{K::NielsenLeft, m.i, m.j, -m.sign}};
    case K::NielsenRight:
      return {Move{K::NielsenRight, m.i, m.j, -m.sign}};
  }
  return {};
}

GenTuple::GenTuple(std::vector<Word> entries, std::vector<Move> history)
    : entries_(std::move(entries)), history_(std::move(history)) {
  for (const Word& w : entries_)
    if (w.rank() != rank()) throw DomainError("tuple entries of mixed rank");
}

GenTuple GenTuple::apply(const Move& m) const {
  std::vector<Word> e = entries_;
  const int n = static_cast<int>(e.size());
  if (m.i < 0 || m.i >= n || (m.kind != Move::Kind::Invert && (m.j < 0 || m.j >= n)))
    throw DomainError("move index out of range");
  using K = Move::Kind;
  switch (m.kind) {
    case K::Swap:
      std::swap(e[m.i], e[m.j]);
      break;
    case K::Invert:
      e[m.i] = e[m.i].inverse();
      break;
    case K::MulRight:
      e[m.i] = e[m.i] * e[m.j];
      break;
    case K::NielsenLeft:
      e[m.i] = (m.sign > 0 ? e[m.j] : e[m.j].inverse()) * e[m.i];
      break;
    case K::NielsenRight:
      e[m.i] = e[m.i] * (m.sign > 0 ? e[m.j] : e[m.j].inverse());
      break;
  }
  std::vector<Move> h = history_;
  h.push_back(m);
  return GenTuple(std::move(e), std::move(h));
}

std::string GenTuple::key() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s.push_back(',');
    s += entries_[i].str();
  }
  return s;
}

GenTuple GenTuple::seed_basis(int m) {
  std::vector<Word> e;
  for (int i = 1; i <= m; ++i) e.push_back(Word({i}, m));
  return GenTuple(std::move(e));
}

std::vector<GenTuple> schreier_neighbors(const GenTuple& t) {
  if (t.size() < 2) throw DomainError("tuple length must be >= 2");
  const int m = static_cast<int>(t.size());
  std::vector<GenTuple> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.push_back(t.apply({Move::Kind::Swap, i, j}));
  for (int i = 0; i < m; ++i) out.push_back(t.apply({Move::Kind::Invert, i}));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) out.push_back(t.apply({Move::Kind::MulRight, i, j}));
  return out;
}

std::vector<GenTuple> nielsen_neighbors(const GenTuple& t) {
  if (t.size() < 2) throw DomainError("tuple length must be >= 2");
  const int m = static_cast<int>(t.size());
  std::vector<GenTuple> out;
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      if (j == k) continue;
      for (int sign : {+1, -1}) out.push_back(t.apply({Move::Kind::NielsenLeft, k, j, sign}));
    }
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      if (j == k) continue;
      for (int sign : {+1, -1}) out.push_back(t.apply({Move::Kind::NielsenRight, k, j, sign}));
    }
  return out;
}

std::vector<GenTuple> neighbors(const GenTuple& t, MoveSystem sys) {
  return sys == MoveSystem::Schreier ? schreier_neighbors(t) : nielsen_neighbors(t);
}

GenTuple replay(const GenTuple& seed, const std::vector<Move>& history) {
  GenTuple t = seed;
  for (const Move& m : history) t = t.apply(m);
  return t;
}

}  // namespace primdyn
