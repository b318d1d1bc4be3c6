#include "reference.hpp"

#include <algorithm>
#include <numeric>

namespace ref {

std::size_t Table::moved() const {
  std::size_t n = 0;
  for (Vertex x = 0; x < fwd.size(); ++x) n += fwd[x] != x;
  return n;
}

graphlearn::Permutation Table::to_permutation() const {
  std::vector<graphlearn::Permutation::Move> moves;
  for (Vertex x = 0; x < fwd.size(); ++x)
    if (fwd[x] != x) moves.push_back({x, fwd[x]});
  return graphlearn::Permutation(std::move(moves));
}

std::vector<Table> tables(std::size_t k, Vertex window) {
  std::vector<Vertex> word(window);
  std::iota(word.begin(), word.end(), Vertex{0});
  std::vector<Table> out;
  do {
    std::size_t moved = 0;
    for (Vertex x = 0; x < window; ++x) moved += word[x] != x;
    if (moved > k) continue;
    Table t{word, std::vector<Vertex>(window)};
    for (Vertex x = 0; x < window; ++x) t.inv[word[x]] = x;
    out.push_back(std::move(t));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

std::uint64_t derangements_by_filter(std::size_t j) {
  std::uint64_t count = 0;
  for (const auto& t : tables(j, j)) count += t.moved() == j;
  return count;
}

bool copy_edge(const GraphSpec& base, const Table& t, Vertex x, Vertex y) {
  return base.edge(t.unapply(x), t.unapply(y));
}

bool realizable(const GraphSpec& base, const std::vector<Table>& cls, const PairList& pairs,
                const std::vector<bool>& labels) {
  return min_realizer_support(base, cls, pairs, labels).has_value();
}

std::optional<std::size_t> min_realizer_support(const GraphSpec& base, const std::vector<Table>& cls,
                                                const PairList& pairs, const std::vector<bool>& labels) {
  std::optional<std::size_t> best;
  for (const auto& t : cls) {
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) ok = copy_edge(base, t, pairs[i].u, pairs[i].v) == labels[i];
    if (ok && (!best || t.moved() < *best)) best = t.moved();
  }
  return best;
}

bool shattered(const GraphSpec& base, const std::vector<Table>& cls, const PairList& pairs) {
  const std::size_t d = pairs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<bool> labels(d);
    for (std::size_t i = 0; i < d; ++i) labels[i] = (mask >> i) & 1U;
    if (!realizable(base, cls, pairs, labels)) return false;
  }
  return true;
}

namespace {

PairList all_pairs(Vertex window) {
  PairList out;
  for (Vertex u = 0; u < window; ++u)
    for (Vertex v = u + 1; v < window; ++v) out.push_back({u, v});
  return out;
}

// Calls visit on index tuples of length len over [0, n) in lexicographic order:
// strictly increasing tuples when `increasing`, otherwise tuples of distinct indices.
template <class Visit>
bool tuples(std::size_t n, std::size_t len, bool increasing, std::vector<std::size_t>& cur, Visit&& visit) {
  if (cur.size() == len) return visit(cur);
  const std::size_t start = increasing && !cur.empty() ? cur.back() + 1 : 0;
  for (std::size_t i = start; i < n; ++i) {
    if (!increasing && std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
    cur.push_back(i);
    if (tuples(n, len, increasing, cur, visit)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PairList> first_shattered(const GraphSpec& base, std::size_t k, std::size_t d, Vertex window) {
  const auto cls = tables(k, window);
  const auto pairs = all_pairs(window);
  std::optional<PairList> found;
  std::vector<std::size_t> cur;
  tuples(pairs.size(), d, true, cur, [&](const std::vector<std::size_t>& idx) {
    PairList chosen;
    for (auto i : idx) chosen.push_back(pairs[i]);
    if (!shattered(base, cls, chosen)) return false;
    found = chosen;
    return true;
  });
  return found;
}

std::optional<PairList> first_thresholds(const GraphSpec& base, std::size_t k, std::size_t t, Vertex window) {
  const auto cls = tables(k, window);
  const auto pairs = all_pairs(window);
  std::optional<PairList> found;
  std::vector<std::size_t> cur;
  tuples(pairs.size(), t - 1, false, cur, [&](const std::vector<std::size_t>& idx) {
    PairList chosen;
    for (auto i : idx) chosen.push_back(pairs[i]);
    for (std::size_t i = 1; i <= t; ++i) {
      std::vector<bool> labels(t - 1);
      for (std::size_t j = 1; j < t; ++j) labels[j - 1] = i <= j;
      if (!realizable(base, cls, chosen, labels)) return false;
    }
    found = chosen;
    return true;
  });
  return found;
}

std::optional<Lemma56> first_lemma56(const GraphSpec& base, std::size_t n, Vertex window) {
  // Position 2(n-i) holds u_i, position 2(n-j)+1 holds v_j.
  const std::size_t len = 2 * n + 1;
  std::optional<Lemma56> found;
  std::vector<std::size_t> cur;
  tuples(window, len, false, cur, [&](const std::vector<std::size_t>& idx) {
    Lemma56 w{std::vector<Vertex>(n + 1), std::vector<Vertex>(n)};
    for (std::size_t i = 0; i <= n; ++i) w.u[i] = idx[2 * (n - i)];
    for (std::size_t j = 1; j <= n; ++j) w.v[j - 1] = idx[2 * (n - j) + 1];
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (base.edge(w.v[j - 1], w.u[i]) != (j <= i)) return false;
    found = w;
    return true;
  });
  return found;
}

std::optional<AlmostRandom> first_almost_random(const GraphSpec& base, std::size_t n, Vertex window) {
  std::optional<AlmostRandom> found;
  std::vector<std::size_t> cur;
  tuples(window, n, true, cur, [&](const std::vector<std::size_t>& idx) {
    AlmostRandom w;
    w.a.assign(idx.begin(), idx.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::optional<Vertex> z;
      for (Vertex c = 0; c < window && !z; ++c) {
        if (std::find(w.a.begin(), w.a.end(), c) != w.a.end()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = base.edge(c, w.a[i]) == bool((mask >> i) & 1U);
        if (ok) z = c;
      }
      if (!z) return false;
      w.realizers.push_back(*z);
    }
    found = w;
    return true;
  });
  return found;
}

std::optional<std::vector<Vertex>> first_induced(const GraphSpec& base, const graphlearn::Pattern& pattern,
                                                 Vertex window) {
  std::optional<std::vector<Vertex>> found;
  std::vector<std::size_t> cur;
  tuples(window, pattern.size, false, cur, [&](const std::vector<std::size_t>& idx) {
    const bool star_family = pattern.kind == graphlearn::PatternKind::Nd;
    for (Vertex a = 0; a < pattern.size; ++a)
      for (Vertex b = a + 1; b < pattern.size; ++b) {
        if (star_family && a != 0) continue;
        if (base.edge(idx[a], idx[b]) != pattern.edges.contains(a, b)) return false;
      }
    found = std::vector<Vertex>(idx.begin(), idx.end());
    return true;
  });
  return found;
}

std::size_t max_mistakes_all_orders(const graphlearn::Learner& learner, const graphlearn::PresentedCopy& target,
                                    const PairList& pairs) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t worst = 0;
  do {
    auto l = learner.clone();
    std::size_t mistakes = 0;
    for (auto i : order) {
      const bool truth = graphlearn::presented_edge(target, pairs[i].u, pairs[i].v);
      mistakes += l->predict(pairs[i]) != truth;
      l->feedback(pairs[i], truth);
    }
    worst = std::max(worst, mistakes);
  } while (std::next_permutation(order.begin(), order.end()));
  return worst;
}

std::size_t AtModel::count(Vertex v) const {
  for (const auto& [x, c] : counts_)
    if (x == v) return c;
  return 0;
}

bool AtModel::predict(VertexPair p) const {
  const bool flipped = count(p.u) > m_ || count(p.v) > m_;
  return flipped ? !tail_ : tail_;
}

void AtModel::feedback(VertexPair p, bool truth) {
  if (predict(p) == truth) return;
  for (Vertex v : {p.u, p.v}) {
    auto it = std::find_if(counts_.begin(), counts_.end(), [v](const auto& e) { return e.first == v; });
    if (it == counts_.end())
      counts_.push_back({v, 1});
    else
      ++it->second;
  }
}

}  // namespace ref
