#pragma once

#include <algorithm>
#include <vector>

#include "graphlearn/types.hpp"

namespace graphlearn {

/// Finite set of undirected edges, kept sorted and normalized (u < v).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<VertexPair> edges) : edges_(std::move(edges)) { normalize(); }

  bool contains(Vertex u, Vertex v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v}.normalized());
  }

  void insert(Vertex u, Vertex v);
  /// Appends without re-sorting; call normalize() before the next lookup.
  void append_unsorted(Vertex u, Vertex v) { edges_.push_back(VertexPair{u, v}.normalized()); }
  void normalize();

  const std::vector<VertexPair>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<VertexPair> edges_;
};

}  // namespace graphlearn
