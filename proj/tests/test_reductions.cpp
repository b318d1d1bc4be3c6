#include <doctest.h>

#include <numeric>
#include <optional>
#include <random>

#include "generators.hpp"
#include "graphlearn/classifier.hpp"
#include "graphlearn/graph_json.hpp"
#include "graphlearn/reductions.hpp"

using namespace graphlearn;

namespace {

std::vector<Vertex> neighbours(const StagedGraph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count; ++u)
    if (g.edge(u, v)) out.push_back(u);
  return out;
}

std::size_t isolated_count(const StagedGraph& g) {
  std::size_t n = 0;
  for (Vertex v = 0; v < g.vertex_count; ++v) n += neighbours(g, v).empty();
  return n;
}

// p is a stage-for-stage prefix of q, and q adds nothing among p's vertices.
bool extends(const StagedGraph& p, const StagedGraph& q) {
  if (p.stages.size() > q.stages.size() || q.vertex_count < p.vertex_count) return false;
  if (!std::equal(p.stages.begin(), p.stages.end(), q.stages.begin())) return false;
  std::vector<VertexPair> inside;
  for (const auto& e : q.edges.edges())
    if (e.u < p.vertex_count && e.v < p.vertex_count) inside.push_back(e);
  if (inside != p.edges.edges()) return false;
  return std::includes(q.unused.begin(), q.unused.end(), p.unused.begin(), p.unused.end());
}

std::vector<std::size_t> component_sizes(const StagedGraph& g) {
  std::vector<Vertex> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges.edges()) parent[find(e.u)] = find(e.v);
  std::vector<std::size_t> size(g.vertex_count, 0);
  for (Vertex v = 0; v < g.vertex_count; ++v) ++size[find(v)];
  return size;
}

std::optional<StagedGraph> try_h(const std::string& p) {
  try {
    return reduction_h(p);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("reduction h by hand") {
  for (std::string p : {"00", "01"}) {
    const auto g = reduction_h(p);
    CHECK(g.vertex_count == 1);
    CHECK(g.edges.size() == 0);
  }
  for (std::size_t len = 0; len <= 12; ++len) {
    const auto g = reduction_h(std::string(len, '0'));
    CHECK(g.vertex_count == (len == 0 ? 0 : len - 1));
    CHECK(g.edges.size() == 0);
  }

  const auto three = reduction_h("011");
  CHECK(three.vertex_count == 3);
  CHECK(neighbours(three, 1).empty());
  CHECK(neighbours(three, 2) == std::vector<Vertex>{0});

  // Stage 3 walks the subsets of {0,1,2} as strings 000, 001, 010, ..., 111.
  const auto eleven = reduction_h("0111");
  CHECK(eleven.vertex_count == 11);
  const std::vector<std::vector<Vertex>> expected{{}, {2}, {1}, {1, 2}, {0}, {0, 2}, {0, 1}, {0, 1, 2}};
  for (Vertex i = 0; i < 8; ++i) {
    auto n = neighbours(eleven, 3 + i);
    CHECK(n == expected[i]);
  }

  CHECK(reduction_h("01111").vertex_count == 2059);
  CHECK_THROWS_AS(reduction_h("011111"), BudgetExceeded);
  CHECK_THROWS_AS(reduction_h("0111", 10), BudgetExceeded);
  CHECK_THROWS_AS(reduction_h("01a"), InvalidArgument);
  CHECK(reduction_h("").stages.empty());
}

TEST_CASE("reduction f by hand") {
  const auto zeros = reduction_f("00000");
  CHECK(zeros.vertex_count == 8);
  CHECK(zeros.edges.size() == 0);
  CHECK(zeros.unused.size() == 8);

  const auto g = reduction_f("011");
  CHECK(g.vertex_count == 4);
  CHECK(g.unused.empty());
  CHECK(g.edges.edges() == std::vector<VertexPair>{{0, 3}});
  // 0, 2, 3, 1 go to 0, 2, 1, 4 inside 𝖱.
  const std::vector<Vertex> into_r{0, 4, 2, 1};
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(g.edge(u, v) == GraphSpec::rgraph().edge(into_r[u], into_r[v]));

  // A zero stage leaves its pair isolated even after later ones.
  const auto gap = reduction_f("01011");
  CHECK(gap.is_unused(2));
  CHECK(gap.is_unused(3));
  CHECK(neighbours(gap, 2).empty());
  CHECK(neighbours(gap, 3).empty());
  CHECK(gap.edge(0, 5));
  CHECK(gap.edge(0, 7));
  CHECK(gap.edge(4, 7));
}

TEST_CASE("all-one f prefixes are 𝖱 on their window") {
  // Even 2i stays put, odd 2j+1 moves to 2j-1, and the lone odd vertex 1 moves
  // to the first even vertex past the image.
  for (std::size_t len = 2; len <= 10; ++len) {
    const auto g = reduction_f(std::string(len, '1'));
    const Vertex n = g.vertex_count;
    std::vector<Vertex> phi(n);
    for (Vertex v = 0; v < n; ++v) phi[v] = v % 2 == 0 ? v : (v == 1 ? n : v - 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) REQUIRE(g.edge(u, v) == GraphSpec::rgraph().edge(phi[u], phi[v]));
  }
}

TEST_CASE("reduction g by hand") {
  const auto zeros = reduction_g("0000");
  CHECK(zeros.vertex_count == 3);
  CHECK(isolated_count(zeros) == 3);

  // Stage 1 reads a 0 (one isolated vertex), then K_1 and K_2.
  const auto g = reduction_g("0011");
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.edges() == std::vector<VertexPair>{{2, 3}});
  CHECK(isolated_count(g) == 2);

  // K_0 at stage 1 adds nothing.
  CHECK(reduction_g("01").vertex_count == 0);
  CHECK(reduction_g("01").stages.back().action == "clique");
}

TEST_CASE("g grows its largest clique with every later one") {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 40; ++n) {
    std::string p(64, '0');
    for (auto& c : p) c = gen::coin(rng) ? '1' : '0';
    std::size_t previous = 0;
    for (std::size_t len = 1; len <= 64; ++len) {
      const auto g = reduction_g(p.substr(0, len));
      const auto sizes = component_sizes(g);
      const std::size_t largest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
      std::size_t expect = 0;
      for (std::size_t i = 1; i < len; ++i) expect = std::max<std::size_t>(expect, p[i] == '1' ? i - 1 : 1);
      CHECK(largest == expect);
      CHECK(largest >= previous);
      previous = largest;
    }
  }
}

TEST_CASE("prefix monotonicity") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string p(len, '0');
      for (std::size_t i = 0; i < len; ++i) p[i] = (bits >> i) & 1 ? '1' : '0';
      for (char b : {'0', '1'}) {
        CHECK(extends(reduction_f(p), reduction_f(p + b)));
        CHECK(extends(reduction_g(p), reduction_g(p + b)));
        const auto hp = try_h(p), hb = try_h(p + b);
        if (!hp) CHECK_FALSE(hb.has_value());
        if (hp && hb) CHECK(extends(*hp, *hb));
      }
    }
}

TEST_CASE("combined reductions") {
  const GraphSpec fg = combined_fg("00000000", "11111111");
  const auto g = reduction_g("11111111");
  for (Vertex u = 0; u < 60; ++u)
    for (Vertex v = 0; v < 60; ++v) {
      if (u % 2 == 0 || v % 2 == 0) {
        CHECK_FALSE(fg.edge(u, v));
        continue;
      }
      CHECK(fg.edge(u, v) == g.edge(u / 2, v / 2));
    }
  // Disjoint cliques carry the n=1 staircase but never n=2, and the clique
  // side holds ever larger matchings.
  CHECK(lemma56_witness(fg, 1, 40).has_value());
  CHECK_FALSE(lemma56_witness(fg, 2, 40).has_value());
  CHECK(find_induced(fg, make_pattern(PatternKind::Md, 2), 40).has_value());

  const GraphSpec hf = combined_hf("000000", "111111");
  for (Vertex u = 0; u < 40; u += 2)
    for (Vertex v = 0; v < 40; v += 2) CHECK_FALSE(hf.edge(u, v));
  const auto w = lemma56_witness(hf, 2, 24);
  REQUIRE(w.has_value());
  CHECK(validate(hf, *w));

  // The shorter prefix is padded with zeros.
  CHECK(canonical_dump(to_json(combined_fg("0", "0111"))) == canonical_dump(to_json(combined_fg("0000", "0111"))));
  CHECK_THROWS_AS(combined_hf("011111", "0"), BudgetExceeded);
}

TEST_CASE("f levels grow with ones and freeze under zeros") {
  std::size_t previous = 0;
  for (std::size_t len = 3; len <= 8; ++len) {
    const GraphSpec g = GraphSpec::staged(reduction_f(std::string(len, '1')));
    std::size_t level = 0;
    while (lemma56_witness(g, level + 1, 2 * len).has_value()) ++level;
    CHECK(level >= len - 3);
    CHECK(level >= previous);
    previous = level;
  }
  const auto frozen = [](const std::string& p) {
    const GraphSpec g = GraphSpec::staged(reduction_f(p));
    std::size_t level = 0;
    while (lemma56_witness(g, level + 1, 24).has_value()) ++level;
    return level;
  };
  const std::size_t base = frozen("011111");
  for (std::size_t zeros = 1; zeros <= 5; ++zeros) CHECK(frozen("011111" + std::string(zeros, '0')) == base);
}

TEST_CASE("h levels grow with ones and matchings stay bounded under zeros") {
  CHECK(almost_random_witness(GraphSpec::staged(reduction_h("011")), 1, 3).has_value());
  CHECK_FALSE(almost_random_witness(GraphSpec::staged(reduction_h("011")), 2, 3).has_value());
  const auto three = almost_random_witness(GraphSpec::staged(reduction_h("0111")), 3, 11);
  REQUIRE(three.has_value());
  CHECK(three->a == std::vector<Vertex>{0, 1, 2});

  // "011" plus zeros carries a single edge, so a matching of two never appears.
  const GraphSpec quiet = GraphSpec::staged(reduction_h("011" + std::string(20, '0')));
  CHECK(find_induced(quiet, make_pattern(PatternKind::Md, 1), 24).has_value());
  CHECK_FALSE(find_induced(quiet, make_pattern(PatternKind::Md, 2), 24).has_value());
}

TEST_CASE("identical prefixes give identical documents") {
  std::mt19937_64 rng(59);
  for (int n = 0; n < 50; ++n) {
    const std::string p = gen::random_prefix(rng, 12);
    for (auto build : {reduction_f, reduction_g}) {
      const std::string a = canonical_dump(to_json(GraphSpec::staged(build(p))));
      const std::string b = canonical_dump(to_json(GraphSpec::staged(build(p))));
      CHECK(a == b);
      const GraphSpec back = graph_from_json(Json::parse(a));
      CHECK(canonical_dump(to_json(back)) == a);
    }
  }
}
