#include "graphlearn/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace graphlearn {

PairList window_pairs(Vertex window) {
  PairList out;
  if (window > 1) out.reserve(window * (window - 1) / 2);
  for (Vertex u = 0; u < window; ++u)
    for (Vertex v = u + 1; v < window; ++v) out.push_back({u, v});
  return out;
}

FiniteSupportPermutation::FiniteSupportPermutation(std::vector<Move> moves) {
  std::erase_if(moves, [](const Move& m) { return m.from == m.to; });
  std::sort(moves.begin(), moves.end());
  for (std::size_t i = 1; i < moves.size(); ++i)
    if (moves[i].from == moves[i - 1].from)
      throw InvalidArgument("permutation maps vertex " + std::to_string(moves[i].from) + " twice");

  std::vector<Move> back;
  back.reserve(moves.size());
  for (const auto& m : moves) back.push_back({m.to, m.from});
  std::sort(back.begin(), back.end());
  for (std::size_t i = 0; i < back.size(); ++i) {
    if (i > 0 && back[i].from == back[i - 1].from)
      throw InvalidArgument("permutation is not injective at " + std::to_string(back[i].from));
    // key set must equal value set
    if (back[i].from != moves[i].from)
      throw InvalidArgument("permutation support is not closed under the map");
  }
  forward_ = std::move(moves);
  backward_ = std::move(back);
}

FiniteSupportPermutation FiniteSupportPermutation::transposition(Vertex a, Vertex b) {
  if (a == b) return {};
  return FiniteSupportPermutation({{a, b}, {b, a}});
}

Vertex FiniteSupportPermutation::lookup(const std::vector<Move>& table, Vertex v) {
  auto it = std::lower_bound(table.begin(), table.end(), v,
                             [](const Move& m, Vertex x) { return m.from < x; });
  return (it != table.end() && it->from == v) ? it->to : v;
}

FiniteSupportPermutation FiniteSupportPermutation::inverse() const {
  FiniteSupportPermutation out;
  out.forward_ = backward_;
  out.backward_ = forward_;
  return out;
}

FiniteSupportPermutation FiniteSupportPermutation::compose(const FiniteSupportPermutation& other) const {
  std::vector<Vertex> points = support();
  for (const auto& m : other.forward_) points.push_back(m.from);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Move> moves;
  moves.reserve(points.size());
  for (Vertex p : points) moves.push_back({p, (*this)(other(p))});
  return FiniteSupportPermutation(std::move(moves));
}

std::vector<Vertex> FiniteSupportPermutation::support() const {
  std::vector<Vertex> out;
  out.reserve(forward_.size());
  for (const auto& m : forward_) out.push_back(m.from);
  return out;
}

std::string FiniteSupportPermutation::to_string() const {
  if (forward_.empty()) return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < forward_.size(); ++i)
    os << (i ? " " : "") << forward_[i].from << "->" << forward_[i].to;
  return os.str();
}

}  // namespace graphlearn
