#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphlearn/edge_set.hpp"
#include "graphlearn/permutation.hpp"
#include "graphlearn/staged_graph.hpp"

namespace graphlearn {

enum class Tail { Clique, Anticlique };

const char* to_string(Tail tail);

/// Size assignment for a disjoint union of cliques. All sizes are >= 1 and the
/// rule is finitely describable, so the clique containing a vertex is computable.
struct CliqueSizeRule {
  enum class Kind { Constant, Arithmetic, Periodic };

  Kind kind = Kind::Constant;
  std::uint64_t first = 1;             // Constant: the size; Arithmetic: size of clique 0
  std::uint64_t step = 0;              // Arithmetic: size of clique i is first + step * i
  std::vector<std::uint64_t> prefix;   // Periodic: initial sizes
  std::vector<std::uint64_t> cycle;    // Periodic: repeated forever after the prefix

  static CliqueSizeRule constant(std::uint64_t size);
  static CliqueSizeRule arithmetic(std::uint64_t first, std::uint64_t step);
  static CliqueSizeRule periodic(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> cycle);

  /// Index of the clique containing v.
  std::uint64_t clique_of(Vertex v) const;
  /// True when infinitely many cliques have size > 1.
  bool infinitely_many_nontrivial() const;
  /// Number of leading vertices covered by cliques of size > 1 when only finitely
  /// many exist; nullopt otherwise.
  std::optional<Vertex> nontrivial_extent() const;

  void validate() const;
  friend bool operator==(const CliqueSizeRule&, const CliqueSizeRule&) = default;
};

class GraphSpec;

namespace shape {

struct Clique {};
struct Anticlique {};
/// u < v adjacent iff bit u of v is set.
struct Rado {};
/// Half graph: (2i, 2j+1) adjacent iff i <= j.
struct RGraph {};
struct FinitePlusIsolatedTail {
  EdgeSet edges;
  Vertex n_named = 0;
};
struct CliqueUnion {
  CliqueSizeRule rule;
};
/// Core S0 = {0..m-1} with its own edges, hub set S0' adjacent to every tail
/// vertex, and a tail that is a clique or an anticlique.
struct AutoTrivial {
  Vertex m = 0;
  EdgeSet s0_edges;
  std::vector<Vertex> s0_prime;  // sorted
  Tail tail = Tail::Anticlique;

  bool is_hub(Vertex v) const;
};
struct Oplus {
  std::shared_ptr<const GraphSpec> left;
  std::shared_ptr<const GraphSpec> right;
};
struct Complement {
  std::shared_ptr<const GraphSpec> inner;
};
struct Permuted {
  std::shared_ptr<const GraphSpec> inner;
  FiniteSupportPermutation perm;
};
struct ExplicitStaged {
  StagedGraph graph;
};

using Node = std::variant<Clique, Anticlique, Rado, RGraph, FinitePlusIsolatedTail, CliqueUnion,
                          AutoTrivial, Oplus, Complement, Permuted, ExplicitStaged>;

}  // namespace shape

/// Immutable description of an infinite simple graph on the naturals with a
/// total edge oracle. Copies share structure; queries are thread-safe.
class GraphSpec {
 public:
  static GraphSpec clique();
  static GraphSpec anticlique();
  static GraphSpec rado();
  static GraphSpec rgraph();
  static GraphSpec finite(Vertex n_named, std::vector<VertexPair> edges);
  static GraphSpec clique_union(CliqueSizeRule rule);
  static GraphSpec auto_trivial(Vertex m, std::vector<VertexPair> s0_edges,
                                std::vector<Vertex> s0_prime, Tail tail);
  static GraphSpec oplus(const GraphSpec& left, const GraphSpec& right);
  static GraphSpec complement(const GraphSpec& inner);
  static GraphSpec permuted(const GraphSpec& inner, FiniteSupportPermutation perm);
  static GraphSpec staged(StagedGraph graph);

  /// Standard matching pattern: 4d named vertices, edges (2i, 2i+1) for i < d.
  static GraphSpec m_core(std::size_t d);
  /// Standard star pattern: 2d+1 named vertices, edges (0, i) for 1 <= i <= d.
  static GraphSpec n_core(std::size_t d);

  bool edge(Vertex u, Vertex v) const;

  const shape::Node& node() const { return node_; }
  std::string family() const;

  /// The Rado presentation has the extension property at every level; the
  /// classifier may rely on that instead of budgeted evidence.
  bool has_extension_property_hook() const { return std::holds_alternative<shape::Rado>(node_); }

 private:
  explicit GraphSpec(shape::Node node) : node_(std::move(node)) {}
  shape::Node node_;
};

/// A presentation of base by perm: (perm(u), perm(v)) is an edge iff (u, v) is.
struct PresentedCopy {
  GraphSpec base;
  FiniteSupportPermutation perm;
};

bool presented_edge(const PresentedCopy& copy, Vertex u, Vertex v);

/// Normal form of an automorphically trivial graph with core S0 = {0..m-1}.
struct AutoTrivialForm {
  Vertex m = 0;
  EdgeSet s0_edges;
  std::vector<Vertex> s0_prime;
  Tail tail = Tail::Anticlique;

  GraphSpec to_graph() const;
};

/// Recognizes graphs whose construction guarantees automorphic triviality and
/// returns their normal form. nullopt means "not recognized", not "not AT".
std::optional<AutoTrivialForm> auto_trivial_form(const GraphSpec& g);

/// True when the construction guarantees the graph is NOT automorphically
/// trivial (Rado, the half graph, unions with infinitely many nontrivial cliques,
/// and anything containing one of those as a side or under relabeling).
bool known_not_auto_trivial(const GraphSpec& g);

}  // namespace graphlearn
