#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphlearn/budget.hpp"
#include "graphlearn/graph_spec.hpp"
#include "graphlearn/window_adjacency.hpp"

namespace graphlearn {

/// Edge labels for a list of pairs, one 0/1 entry per pair.
using Labels = std::vector<std::uint8_t>;

Labels labels_from_string(std::string_view bits);
std::string labels_to_string(const Labels& labels);

/// Number of derangements of j elements, saturating at UINT64_MAX.
std::uint64_t derangements(std::size_t j);
/// |Fiso_k restricted to [0,W)| = sum over j <= k of C(W,j) * D(j), saturating.
std::uint64_t class_size(std::size_t k, Vertex window);

/// Visits every permutation with support inside [0,W) of size at most k:
/// by support size, then support set in lexicographic order, then image word
/// in lexicographic order. The identity comes first. Stops when visit
/// returns false. Throws InvalidArgument when k > W.
void for_each_permutation(std::size_t k, Vertex window, const std::function<bool(const Permutation&)>& visit);
std::vector<Permutation> enumerate_permutations(std::size_t k, Vertex window);

/// The copies of base induced by permutations of [0,W) moving at most k points.
struct WindowedClass {
  GraphSpec base;
  std::size_t k = 0;
  Vertex window = 0;

  bool contains(const Permutation& h) const;
  PresentedCopy copy(const Permutation& h) const { return {base, h}; }
};

/// True when the copy of base presented by h labels every pair as required.
bool realizes(const GraphSpec& base, const Permutation& h, std::span<const VertexPair> pairs, const Labels& tau);

/// Answers many realizability queries for one windowed class.
///
/// A query searches directly for h^{-1} on the vertices mentioned by the
/// pairs, with iterative deepening on the support size, and closes the partial
/// map into a permutation of minimum support. Among realizers of minimum
/// support it returns the first in the search order (each vertex prefers to
/// stay fixed, then tries images in increasing order).
class ConfigurationRealizer {
 public:
  ConfigurationRealizer(const GraphSpec& base, std::size_t k, Vertex window);

  std::optional<Permutation> realize(std::span<const VertexPair> pairs, const Labels& tau, Meter* meter = nullptr) const;

  const GraphSpec& base() const { return base_; }
  std::size_t k() const { return k_; }
  Vertex window() const { return adjacency_.window(); }
  const WindowAdjacency& adjacency() const { return adjacency_; }

 private:
  GraphSpec base_;
  std::size_t k_;
  WindowAdjacency adjacency_;
};

/// One-shot form of ConfigurationRealizer::realize. Throws InvalidArgument when
/// |tau| != |pairs| or a pair leaves the window.
std::optional<Permutation> realize_configuration(const GraphSpec& base, std::span<const VertexPair> pairs,
                                                 const Labels& tau, std::size_t k, Vertex window);

}  // namespace graphlearn
