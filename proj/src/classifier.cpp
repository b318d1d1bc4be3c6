#include "graphlearn/classifier.hpp"

#include <algorithm>
#include <set>

#include "graphlearn/parallel.hpp"

namespace graphlearn {

const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Md: return "md";
    case PatternKind::Nd: return "nd";
    case PatternKind::CoMd: return "comd";
  }
  return "?";
}

PatternKind pattern_kind_from_string(const std::string& name) {
  if (name == "md") return PatternKind::Md;
  if (name == "nd") return PatternKind::Nd;
  if (name == "comd") return PatternKind::CoMd;
  throw InvalidArgument("unknown pattern '" + name + "'");
}

Pattern make_pattern(PatternKind kind, std::size_t d) {
  if (d < 1) throw InvalidArgument("pattern parameter d must be at least 1");
  Pattern p{kind, d, 0, {}};
  switch (kind) {
    case PatternKind::Md:
      p.size = 4 * d;
      for (Vertex i = 0; i < d; ++i) p.edges.append_unsorted(2 * i, 2 * i + 1);
      break;
    case PatternKind::Nd:
      p.size = 2 * d + 1;
      for (Vertex i = 1; i <= d; ++i) p.edges.append_unsorted(0, i);
      break;
    case PatternKind::CoMd:
      p.size = 4 * d;
      for (Vertex u = 0; u < p.size; ++u)
        for (Vertex v = u + 1; v < p.size; ++v)
          if (!(u % 2 == 0 && v == u + 1 && u < 2 * d)) p.edges.append_unsorted(u, v);
      break;
  }
  p.edges.normalize();
  return p;
}

namespace {

// twins[x] lists every w < x whose transposition with x is an automorphism of
// the window graph. The first embedding never uses x while such a w is free,
// since trading x for w gives a valid and smaller image.
std::vector<std::vector<Vertex>> smaller_twins(const WindowAdjacency& adj) {
  const Vertex window = adj.window();
  std::vector<std::vector<Vertex>> twins(window);
  for (Vertex x = 0; x < window; ++x)
    for (Vertex w = 0; w < x; ++w) {
      bool same = true;
      for (std::size_t i = 0; i < adj.words() && same; ++i) {
        std::uint64_t diff = adj.row(w)[i] ^ adj.row(x)[i];
        if (w >> 6 == i) diff &= ~(std::uint64_t{1} << (w & 63U));
        if (x >> 6 == i) diff &= ~(std::uint64_t{1} << (x & 63U));
        same = diff == 0;
      }
      if (same) twins[x].push_back(w);
    }
  return twins;
}

}  // namespace

std::optional<Embedding> find_induced(const GraphSpec& base, const Pattern& pattern, Vertex window,
                                      const SearchOptions& opts) {
  const Vertex size = pattern.size;
  if (size > window) return std::nullopt;
  const WindowAdjacency adj(base, window);
  // 0 and 1 are required labels, 2 means the pair is free.
  std::vector<std::vector<std::uint8_t>> want(size, std::vector<std::uint8_t>(size, 0));
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = 0; v < size; ++v)
      if (!pattern.constrains(u, v)) want[u][v] = 2;
  for (const auto& e : pattern.edges.edges()) want[e.u][e.v] = want[e.v][e.u] = 1;

  const auto twins = smaller_twins(adj);

  return first_success<Embedding>(window, opts, [&](std::size_t first, Meter& meter) -> std::optional<Embedding> {
    if (!twins[first].empty()) return std::nullopt;
    Embedding image{static_cast<Vertex>(first)};
    std::vector<std::uint8_t> taken(window, 0);
    taken[first] = 1;
    auto fits = [&](Vertex x) {
      const std::size_t p = image.size();
      for (std::size_t q = 0; q < p; ++q) {
        meter.charge();
        if (want[p][q] != 2 && adj.edge(x, image[q]) != static_cast<bool>(want[p][q])) return false;
      }
      return true;
    };
    auto place = [&](auto&& self) -> bool {
      if (image.size() == size) return true;
      for (Vertex x = 0; x < window; ++x) {
        if (taken[x] || std::any_of(twins[x].begin(), twins[x].end(), [&](Vertex w) { return !taken[w]; }) ||
            !fits(x))
          continue;
        taken[x] = 1;
        image.push_back(x);
        if (self(self)) return true;
        image.pop_back();
        taken[x] = 0;
      }
      return false;
    };
    if (place(place)) return image;
    return std::nullopt;
  });
}

bool validate_embedding(const GraphSpec& base, const Pattern& pattern, const Embedding& embedding) {
  if (embedding.size() != pattern.size) return false;
  if (std::set<Vertex>(embedding.begin(), embedding.end()).size() != embedding.size()) return false;
  for (Vertex u = 0; u < pattern.size; ++u)
    for (Vertex v = u + 1; v < pattern.size; ++v)
      if (pattern.constrains(u, v) && base.edge(embedding[u], embedding[v]) != pattern.edges.contains(u, v))
        return false;
  return true;
}

std::optional<AlmostRandomWitness> almost_random_witness(const GraphSpec& base, std::size_t n, Vertex window,
                                                         const SearchOptions& opts) {
  if (n >= 32) throw InvalidArgument("almost-random level too large");
  if (window <= n) return std::nullopt;
  if (n == 0) return AlmostRandomWitness{{}, {0}};
  const WindowAdjacency adj(base, window);

  return first_success<AlmostRandomWitness>(
      window - n + 1, opts, [&](std::size_t first, Meter& meter) -> std::optional<AlmostRandomWitness> {
        std::vector<Vertex> a{static_cast<Vertex>(first)};
        std::vector<std::uint8_t> in_a(window, 0);
        in_a[first] = 1;
        // Smallest realizer for every bipartition of a, or empty when one is missing.
        auto realize_all = [&]() -> std::vector<Vertex> {
          const std::size_t m = a.size();
          const std::size_t total = std::size_t{1} << m;
          std::vector<Vertex> table(total, window);
          std::size_t filled = 0;
          for (Vertex z = 0; z < window && filled < total; ++z) {
            if (in_a[z]) continue;
            meter.charge(m);
            std::size_t mask = 0;
            for (std::size_t i = 0; i < m; ++i)
              if (adj.edge(z, a[i])) mask |= std::size_t{1} << i;
            if (table[mask] == window) {
              table[mask] = z;
              ++filled;
            }
          }
          if (filled < total) table.clear();
          return table;
        };
        std::optional<AlmostRandomWitness> found;
        auto extend = [&](auto&& self) -> bool {
          auto table = realize_all();
          if (table.empty()) return false;
          if (a.size() == n) {
            found = AlmostRandomWitness{a, std::move(table)};
            return true;
          }
          const std::size_t need = n - a.size();
          for (Vertex x = a.back() + 1; x + need <= window; ++x) {
            a.push_back(x);
            in_a[x] = 1;
            if (self(self)) return true;
            in_a[x] = 0;
            a.pop_back();
          }
          return false;
        };
        extend(extend);
        return found;
      });
}

bool validate(const GraphSpec& base, const AlmostRandomWitness& w) {
  const std::size_t n = w.a.size();
  if (n >= 32 || w.realizers.size() != (std::size_t{1} << n)) return false;
  if (!std::is_sorted(w.a.begin(), w.a.end()) || std::adjacent_find(w.a.begin(), w.a.end()) != w.a.end())
    return false;
  for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
    const Vertex z = w.realizers[mask];
    if (std::binary_search(w.a.begin(), w.a.end(), z)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (base.edge(z, w.a[i]) != static_cast<bool>((mask >> i) & 1U)) return false;
  }
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::OnlineLearnable: return "OnlineLearnable";
    case Verdict::WeaklyOnlineNotOnline: return "WeaklyOnlineNotOnline";
    case Verdict::WeaklyPACNotWeaklyOnline: return "WeaklyPACNotWeaklyOnline";
    case Verdict::AbsolutelyNonLearnable: return "AbsolutelyNonLearnable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& name) {
  for (Verdict v : {Verdict::OnlineLearnable, Verdict::WeaklyOnlineNotOnline, Verdict::WeaklyPACNotWeaklyOnline,
                    Verdict::AbsolutelyNonLearnable, Verdict::Inconclusive})
    if (name == to_string(v)) return v;
  throw InvalidArgument("unknown verdict '" + name + "'");
}

const char* to_string(Basis b) {
  switch (b) {
    case Basis::Structural: return "structural";
    case Basis::Exact: return "exact";
    case Basis::Evidence: return "evidence";
    case Basis::None: return "none";
  }
  return "?";
}

namespace {

template <class W>
bool all_found(const std::vector<LevelResult<W>>& levels, std::size_t max_level) {
  if (levels.size() < max_level) return false;
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.witness.has_value(); });
}

template <class W>
bool some_failed(const std::vector<LevelResult<W>>& levels) {
  return std::any_of(levels.begin(), levels.end(), [](const auto& l) { return !l.witness.has_value(); });
}

/// The decision procedure, applied to the searches recorded in a report.
std::pair<Verdict, Basis> decide(const ClassificationReport& r) {
  if (r.at_form) return {Verdict::OnlineLearnable, Basis::Structural};
  if (all_found(r.almost_random, r.budgets.n_max))
    return {Verdict::AbsolutelyNonLearnable,
            r.graph.has_extension_property_hook() ? Basis::Exact : Basis::Evidence};
  bool pattern_evidence = false;
  for (const auto& [kind, levels] : r.induced)
    if (all_found(levels, r.budgets.d_max)) pattern_evidence = true;
  if (some_failed(r.lemma56) && (r.known_not_at || pattern_evidence))
    return {Verdict::WeaklyOnlineNotOnline, Basis::Evidence};
  if (all_found(r.lemma56, r.budgets.n_max) && some_failed(r.almost_random))
    return {Verdict::WeaklyPACNotWeaklyOnline, Basis::Evidence};
  return {Verdict::Inconclusive, Basis::None};
}

template <class W, class Search>
std::vector<LevelResult<W>> levels_until_failure(std::size_t from, std::size_t to, Search search) {
  std::vector<LevelResult<W>> out;
  for (std::size_t level = from; level <= to; ++level) {
    out.push_back({level, search(level)});
    if (!out.back().witness) break;
  }
  return out;
}

}  // namespace

ClassificationReport classify(const GraphSpec& graph, const Budgets& budgets, const SearchOptions& opts) {
  if (budgets.d_max < 1 || budgets.n_max < 1 || budgets.window < 1)
    throw InvalidArgument("classification budgets must be positive");
  ClassificationReport r{graph, budgets, auto_trivial_form(graph), known_not_auto_trivial(graph), {}, {}, {}, {}, {}, {}};
  const Vertex w = budgets.window;

  for (PatternKind kind : {PatternKind::Md, PatternKind::Nd, PatternKind::CoMd})
    r.induced[kind] = levels_until_failure<Embedding>(
        1, budgets.d_max, [&](std::size_t d) { return find_induced(graph, make_pattern(kind, d), w, opts); });
  r.almost_random = levels_until_failure<AlmostRandomWitness>(
      1, budgets.n_max, [&](std::size_t n) { return almost_random_witness(graph, n, w, opts); });
  r.lemma56 = levels_until_failure<Lemma56Witness>(
      1, budgets.n_max, [&](std::size_t n) { return lemma56_witness(graph, n, w, opts); });

  std::tie(r.verdict, r.basis) = decide(r);
  if (r.at_form) r.notes.push_back("automorphically trivial by construction; online learnable");
  if (r.known_not_at) r.notes.push_back("not automorphically trivial by construction");
  if (r.basis == Basis::Exact) r.notes.push_back("extension property holds at every level for this presentation");
  if (r.basis == Basis::Evidence)
    r.notes.push_back("searches are limited to the window [0," + std::to_string(w) + "); verdict is evidence");
  if (r.verdict == Verdict::WeaklyPACNotWeaklyOnline)
    r.notes.push_back("thresholds up to n_max=" + std::to_string(budgets.n_max) + " found");
  return r;
}

bool validate(const ClassificationReport& r) {
  const Vertex w = r.budgets.window;
  auto expected_form = auto_trivial_form(r.graph);
  if (r.at_form.has_value() != expected_form.has_value()) return false;
  if (r.at_form && (r.at_form->m != expected_form->m || r.at_form->s0_edges != expected_form->s0_edges ||
                    r.at_form->s0_prime != expected_form->s0_prime || r.at_form->tail != expected_form->tail))
    return false;
  if (r.known_not_at != known_not_auto_trivial(r.graph)) return false;

  auto in_window = [w](const std::vector<Vertex>& xs) {
    return std::all_of(xs.begin(), xs.end(), [w](Vertex x) { return x < w; });
  };
  for (const auto& [kind, levels] : r.induced)
    for (const auto& l : levels)
      if (l.witness && (!in_window(*l.witness) ||
                        !validate_embedding(r.graph, make_pattern(kind, l.level), *l.witness)))
        return false;
  for (const auto& l : r.almost_random)
    if (l.witness && (l.witness->a.size() != l.level || !in_window(l.witness->a) ||
                      !in_window(l.witness->realizers) || !validate(r.graph, *l.witness)))
      return false;
  for (const auto& l : r.lemma56)
    if (l.witness && (l.witness->v.size() != l.level || !in_window(l.witness->u) || !in_window(l.witness->v) ||
                      !validate(r.graph, *l.witness)))
      return false;

  const auto [verdict, basis] = decide(r);
  return verdict == r.verdict && basis == r.basis;
}

}  // namespace graphlearn
