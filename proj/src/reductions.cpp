#include "graphlearn/reductions.hpp"

#include <algorithm>
#include <string>

namespace graphlearn {

namespace {

int bit_at(std::string_view prefix, std::size_t i) {
  const char c = prefix[i];
  if (c != '0' && c != '1') throw InvalidArgument("prefix must be a 0/1 string");
  return c - '0';
}

StagedGraph start(ReductionKind kind, std::string_view prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) bit_at(prefix, i);
  StagedGraph g;
  g.reduction = kind;
  g.prefix = std::string(prefix);
  if (!prefix.empty()) g.stages.push_back({0, bit_at(prefix, 0), "none", {}, {}, {}});
  return g;
}

void commit(StagedGraph& g, StageRecord record) {
  for (const auto& e : record.edges) g.edges.append_unsorted(e.u, e.v);
  g.stages.push_back(std::move(record));
}

std::pair<std::string, std::string> padded(std::string_view p, std::string_view q) {
  std::string a(p), b(q);
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, '0');
  b.resize(len, '0');
  return {a, b};
}

}  // namespace

StagedGraph reduction_h(std::string_view prefix, Vertex cap) {
  StagedGraph g = start(ReductionKind::H, prefix);
  for (std::size_t s = 0; s + 1 < prefix.size(); ++s) {
    const int bit = bit_at(prefix, s + 1);
    StageRecord rec{s + 1, bit, bit ? "extension" : "isolated", {}, {}, {}};
    const Vertex c = g.vertex_count;
    if (bit == 0) {
      rec.added.push_back(g.vertex_count++);
    } else {
      if (c >= 63 || c + (Vertex{1} << c) > cap)
        throw BudgetExceeded("reduction h would exceed " + std::to_string(cap) + " vertices at stage " +
                             std::to_string(s + 1));
      for (Vertex mask = 0; mask < (Vertex{1} << c); ++mask) {
        const Vertex fresh = g.vertex_count++;
        rec.added.push_back(fresh);
        for (Vertex i = 0; i < c; ++i)
          if ((mask >> (c - 1 - i)) & 1U) rec.edges.push_back({i, fresh});
      }
    }
    commit(g, std::move(rec));
  }
  g.edges.normalize();
  return g;
}

StagedGraph reduction_f(std::string_view prefix) {
  StagedGraph g = start(ReductionKind::F, prefix);
  for (std::size_t s = 0; s + 1 < prefix.size(); ++s) {
    const int bit = bit_at(prefix, s + 1);
    StageRecord rec{s + 1, bit, bit ? "pair" : "isolated", {2 * s, 2 * s + 1}, {}, {}};
    g.vertex_count = 2 * s + 2;
    if (bit == 0) {
      rec.unused = {2 * s, 2 * s + 1};
      g.unused.push_back(2 * s);
      g.unused.push_back(2 * s + 1);
    } else {
      for (Vertex j = 1; j <= s; ++j)
        for (Vertex i = 0; i < j; ++i) {
          const VertexPair e{2 * i, 2 * j + 1};
          if (g.is_unused(e.u) || g.is_unused(e.v) || g.edges.contains(e.u, e.v)) continue;
          rec.edges.push_back(e);
        }
      std::sort(rec.edges.begin(), rec.edges.end());
    }
    commit(g, std::move(rec));
    g.edges.normalize();
  }
  return g;
}

StagedGraph reduction_g(std::string_view prefix) {
  StagedGraph g = start(ReductionKind::G, prefix);
  for (std::size_t s = 0; s + 1 < prefix.size(); ++s) {
    const int bit = bit_at(prefix, s + 1);
    StageRecord rec{s + 1, bit, bit ? "clique" : "isolated", {}, {}, {}};
    const Vertex size = bit ? s : 1;
    const Vertex first = g.vertex_count;
    for (Vertex i = 0; i < size; ++i) rec.added.push_back(g.vertex_count++);
    if (bit)
      for (Vertex u = first; u < g.vertex_count; ++u)
        for (Vertex v = u + 1; v < g.vertex_count; ++v) rec.edges.push_back({u, v});
    commit(g, std::move(rec));
  }
  g.edges.normalize();
  return g;
}

GraphSpec combined_fg(std::string_view p, std::string_view q) {
  auto [a, b] = padded(p, q);
  return GraphSpec::oplus(GraphSpec::staged(reduction_f(a)), GraphSpec::staged(reduction_g(b)));
}

GraphSpec combined_hf(std::string_view p, std::string_view q, Vertex cap) {
  auto [a, b] = padded(p, q);
  return GraphSpec::oplus(GraphSpec::staged(reduction_h(a, cap)), GraphSpec::staged(reduction_f(b)));
}

}  // namespace graphlearn
