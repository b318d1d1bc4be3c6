#pragma once

// Brute-force oracles. Nothing here calls the library's search code: only the
// edge oracle of GraphSpec and plain loops over small windows.

#include <optional>
#include <vector>

#include "graphlearn/classifier.hpp"
#include "graphlearn/learners.hpp"

namespace ref {

using graphlearn::GraphSpec;
using graphlearn::PairList;
using graphlearn::Vertex;
using graphlearn::VertexPair;

/// A permutation of [0, W) as a table, identity outside.
struct Table {
  std::vector<Vertex> fwd;
  std::vector<Vertex> inv;

  Vertex apply(Vertex x) const { return x < fwd.size() ? fwd[x] : x; }
  Vertex unapply(Vertex x) const { return x < inv.size() ? inv[x] : x; }
  std::size_t moved() const;
  graphlearn::Permutation to_permutation() const;
};

/// Every bijection of [0, W) moving at most k points, in next_permutation order.
std::vector<Table> tables(std::size_t k, Vertex window);

std::uint64_t factorial(std::size_t n);
std::uint64_t binomial(std::size_t n, std::size_t r);
/// Derangements counted by filtering all permutations of j elements.
std::uint64_t derangements_by_filter(std::size_t j);

/// Edge of the copy of base presented by t: (t(u), t(v)) is an edge iff (u, v) is.
bool copy_edge(const GraphSpec& base, const Table& t, Vertex x, Vertex y);

bool realizable(const GraphSpec& base, const std::vector<Table>& cls, const PairList& pairs,
                const std::vector<bool>& labels);
/// Smallest support among realizers, nullopt when none.
std::optional<std::size_t> min_realizer_support(const GraphSpec& base, const std::vector<Table>& cls,
                                                const PairList& pairs, const std::vector<bool>& labels);

bool shattered(const GraphSpec& base, const std::vector<Table>& cls, const PairList& pairs);
/// First d-tuple of window pairs, lexicographic over index tuples i_1 < ... < i_d.
std::optional<PairList> first_shattered(const GraphSpec& base, std::size_t k, std::size_t d, Vertex window);
/// First sequence of t-1 distinct window pairs (lexicographic over index sequences)
/// such that every staircase labeling is realized.
std::optional<PairList> first_thresholds(const GraphSpec& base, std::size_t k, std::size_t t, Vertex window);

struct Lemma56 {
  std::vector<Vertex> u;
  std::vector<Vertex> v;
};
/// Loops over every tuple (u_n, v_n, ..., u_1, v_1, u_0) of distinct vertices in
/// lexicographic order and checks the biconditional only on complete tuples.
std::optional<Lemma56> first_lemma56(const GraphSpec& base, std::size_t n, Vertex window);

struct AlmostRandom {
  std::vector<Vertex> a;
  std::vector<Vertex> realizers;
};
std::optional<AlmostRandom> first_almost_random(const GraphSpec& base, std::size_t n, Vertex window);

/// Every injective map of the pattern into [0, W) in lexicographic order, checked
/// pair by pair on complete maps.
std::optional<std::vector<Vertex>> first_induced(const GraphSpec& base, const graphlearn::Pattern& pattern,
                                                 Vertex window);

/// Maximum mistakes over every ordering of pairs (pairs.size() <= 8).
std::size_t max_mistakes_all_orders(const graphlearn::Learner& learner, const graphlearn::PresentedCopy& target,
                                    const PairList& pairs);

/// The threshold learner of the automorphically trivial case, written from
/// scratch: predict the tail label unless an endpoint has had more than m mistakes.
class AtModel {
 public:
  AtModel(std::size_t m, bool tail_clique) : m_(m), tail_(tail_clique) {}
  bool predict(VertexPair p) const;
  void feedback(VertexPair p, bool truth);

 private:
  std::size_t count(Vertex v) const;
  std::size_t m_;
  bool tail_;
  std::vector<std::pair<Vertex, std::size_t>> counts_;
};

}  // namespace ref
