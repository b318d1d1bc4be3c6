#pragma once

#include <string_view>

#include "graphlearn/graph_spec.hpp"
#include "graphlearn/staged_graph.hpp"

namespace graphlearn {

/// Largest vertex count reduction_h will build before refusing.
inline constexpr Vertex kReductionVertexCap = Vertex{1} << 16;

/// Stage 0 does nothing; stage s+1 reads prefix[s+1], so prefix[0] never
/// affects the output. Fresh vertices are consecutive naturals in order of
/// addition.
///
/// Bit 0 adds one isolated vertex. Bit 1 adds, for every subset U of the
/// current vertices, a fresh vertex adjacent to exactly U; subsets are taken in
/// lexicographic order of their characteristic strings, whose position i
/// stands for vertex i. Throws BudgetExceeded when the graph would grow past
/// `cap` vertices.
StagedGraph reduction_h(std::string_view prefix, Vertex cap = kReductionVertexCap);

/// Stage s+1 adds 2s and 2s+1. Bit 0 marks both unused, for good. Bit 1 adds
/// (2i, 2j+1) for every i < j <= s with neither endpoint unused.
StagedGraph reduction_f(std::string_view prefix);

/// Bit 1 at stage s+1 adds a fresh clique on s vertices (nothing when s = 0);
/// bit 0 adds one isolated vertex.
StagedGraph reduction_g(std::string_view prefix);

/// The disconnected union (left on evens, right on odds) of f(p) and g(q);
/// the shorter prefix is padded with zeros.
GraphSpec combined_fg(std::string_view p, std::string_view q);
/// The disconnected union of h(p) and f(q), padded the same way.
GraphSpec combined_hf(std::string_view p, std::string_view q, Vertex cap = kReductionVertexCap);

}  // namespace graphlearn
