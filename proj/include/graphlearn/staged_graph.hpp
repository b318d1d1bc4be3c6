#pragma once

#include <string>
#include <vector>

#include "graphlearn/edge_set.hpp"

namespace graphlearn {

enum class ReductionKind { H, F, G };

const char* to_string(ReductionKind kind);
ReductionKind reduction_kind_from_string(const std::string& name);

/// What one stage of a reduction did.
struct StageRecord {
  std::size_t stage = 0;
  int bit = 0;
  std::string action;  // "none" | "isolated" | "extension" | "pair" | "clique"
  std::vector<Vertex> added;
  std::vector<VertexPair> edges;
  std::vector<Vertex> unused;

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

/// Finite graph fragment produced by a staged reduction; every vertex at or
/// beyond vertex_count is isolated.
struct StagedGraph {
  ReductionKind reduction = ReductionKind::H;
  std::string prefix;
  std::vector<StageRecord> stages;
  Vertex vertex_count = 0;
  EdgeSet edges;
  std::vector<Vertex> unused;  // sorted; only populated by f

  bool edge(Vertex u, Vertex v) const { return edges.contains(u, v); }
  bool is_unused(Vertex v) const;

  friend bool operator==(const StagedGraph&, const StagedGraph&) = default;
};

}  // namespace graphlearn
