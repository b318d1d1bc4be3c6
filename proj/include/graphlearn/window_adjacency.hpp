#pragma once

#include <cstdint>
#include <vector>

#include "graphlearn/graph_spec.hpp"

namespace graphlearn {

/// Dense adjacency of base restricted to [0, window), one bit row per vertex.
class WindowAdjacency {
 public:
  WindowAdjacency(const GraphSpec& base, Vertex window);

  bool edge(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63U)) & 1U;
  }
  Vertex window() const { return window_; }
  const std::uint64_t* row(Vertex u) const { return rows_.data() + u * words_; }
  std::size_t words() const { return words_; }

 private:
  Vertex window_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace graphlearn
