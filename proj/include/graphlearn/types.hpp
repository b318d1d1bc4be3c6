#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphlearn {

using Vertex = std::uint64_t;

/// A vertex pair as queried in a learning game. Order is preserved; use
/// normalized() when the pair is used as an undirected key.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  constexpr VertexPair normalized() const { return u <= v ? *this : VertexPair{v, u}; }
  friend constexpr bool operator==(VertexPair, VertexPair) = default;
  friend constexpr auto operator<=>(VertexPair, VertexPair) = default;
};

using PairList = std::vector<VertexPair>;

/// Bad arguments to a library entry point (violated precondition).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search refused to continue past its configured ceiling of elementary checks.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every unordered pair {u,v} with u < v < window, in lexicographic order.
PairList window_pairs(Vertex window);

}  // namespace graphlearn
