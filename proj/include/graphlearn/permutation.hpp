#pragma once

#include <span>
#include <vector>

#include "graphlearn/types.hpp"

namespace graphlearn {

/// A bijection of the naturals that differs from the identity on a finite set.
///
/// Stored as the list of moved points (sorted by source) together with the
/// materialized inverse, so both directions are a binary search on the
/// support and O(1) outside it.
class FiniteSupportPermutation {
 public:
  struct Move {
    Vertex from = 0;
    Vertex to = 0;
    friend constexpr bool operator==(Move, Move) = default;
    friend constexpr auto operator<=>(Move, Move) = default;
  };

  FiniteSupportPermutation() = default;

  /// Builds from an explicit map. Entries with from == to are dropped.
  /// Throws InvalidArgument unless the map is a bijection of its key set.
  explicit FiniteSupportPermutation(std::vector<Move> moves);

  static FiniteSupportPermutation identity() { return {}; }
  static FiniteSupportPermutation transposition(Vertex a, Vertex b);

  /// h(v).
  Vertex operator()(Vertex v) const { return lookup(forward_, v); }
  /// h^{-1}(v).
  Vertex inverse_of(Vertex v) const { return lookup(backward_, v); }

  FiniteSupportPermutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  FiniteSupportPermutation compose(const FiniteSupportPermutation& other) const;

  std::vector<Vertex> support() const;
  std::size_t support_size() const { return forward_.size(); }
  bool is_identity() const { return forward_.empty(); }

  std::span<const Move> moves() const { return forward_; }

  friend bool operator==(const FiniteSupportPermutation& a, const FiniteSupportPermutation& b) {
    return a.forward_ == b.forward_;
  }
  friend auto operator<=>(const FiniteSupportPermutation& a, const FiniteSupportPermutation& b) {
    return a.forward_ <=> b.forward_;
  }

  std::string to_string() const;

 private:
  static Vertex lookup(const std::vector<Move>& table, Vertex v);

  std::vector<Move> forward_;
  std::vector<Move> backward_;
};

using Permutation = FiniteSupportPermutation;

}  // namespace graphlearn
