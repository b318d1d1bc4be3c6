#include "graphlearn/window_adjacency.hpp"

namespace graphlearn {

WindowAdjacency::WindowAdjacency(const GraphSpec& base, Vertex window)
    : window_(window), words_((window + 63) / 64), rows_(window * words_, 0) {
  auto set = [this](Vertex u, Vertex v) {
    rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63U);
    rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63U);
  };
  // Explicit edge lists are copied directly instead of queried pair by pair.
  const EdgeSet* listed = nullptr;
  if (const auto* s = std::get_if<shape::ExplicitStaged>(&base.node())) listed = &s->graph.edges;
  if (const auto* f = std::get_if<shape::FinitePlusIsolatedTail>(&base.node())) listed = &f->edges;
  if (listed) {
    for (const auto& e : listed->edges())
      if (e.u < window && e.v < window) set(e.u, e.v);
    return;
  }
  for (Vertex u = 0; u < window; ++u)
    for (Vertex v = u + 1; v < window; ++v)
      if (base.edge(u, v)) set(u, v);
}

}  // namespace graphlearn
