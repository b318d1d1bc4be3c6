#include "graphlearn/classes.hpp"

#include <algorithm>
#include <limits>

namespace graphlearn {

namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturate(u128 x) { return x > kSaturated ? kSaturated : static_cast<std::uint64_t>(x); }

u128 sat_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) return u128(kSaturated) + 1;
  return out;
}

/// Visits every j-subset of [0, W) in lexicographic order.
bool for_each_subset(std::size_t j, Vertex window, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> s(j);
  for (std::size_t i = 0; i < j; ++i) s[i] = i;
  while (true) {
    if (!visit(s)) return false;
    std::size_t i = j;
    while (i > 0 && s[i - 1] == window - j + (i - 1)) --i;
    if (i == 0) return true;
    ++s[i - 1];
    for (std::size_t t = i; t < j; ++t) s[t] = s[t - 1] + 1;
  }
}

}  // namespace

Labels labels_from_string(std::string_view bits) {
  Labels out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("configuration must be a 0/1 string");
    out.push_back(c == '1');
  }
  return out;
}

std::string labels_to_string(const Labels& labels) {
  std::string out;
  out.reserve(labels.size());
  for (auto b : labels) out.push_back(b ? '1' : '0');
  return out;
}

std::uint64_t derangements(std::size_t j) {
  // D(0) = 1, D(1) = 0, D(n) = (n-1)(D(n-1) + D(n-2))
  u128 prev = 1, cur = 0;
  if (j == 0) return 1;
  for (std::size_t n = 2; n <= j; ++n) {
    u128 next = sat_mul(n - 1, prev + cur);
    prev = cur;
    cur = next > kSaturated ? u128(kSaturated) + 1 : next;
  }
  return saturate(cur);
}

std::uint64_t class_size(std::size_t k, Vertex window) {
  u128 total = 0, binom = 1;  // binom = C(W, j)
  for (std::size_t j = 0; j <= k && j <= window; ++j) {
    if (j > 0) binom = binom > kSaturated ? binom : binom * (window - j + 1) / j;
    total += sat_mul(binom, derangements(j));
    if (total > kSaturated) return kSaturated;
  }
  return saturate(total);
}

void for_each_permutation(std::size_t k, Vertex window, const std::function<bool(const Permutation&)>& visit) {
  if (k > window) throw InvalidArgument("support bound k exceeds the window");
  if (!visit(Permutation::identity())) return;
  for (std::size_t j = 2; j <= k; ++j) {
    const bool more = for_each_subset(j, window, [&](const std::vector<Vertex>& support) {
      std::vector<Vertex> word = support;
      while (std::next_permutation(word.begin(), word.end())) {
        bool deranged = true;
        for (std::size_t i = 0; i < j && deranged; ++i) deranged = word[i] != support[i];
        if (!deranged) continue;
        std::vector<Permutation::Move> moves(j);
        for (std::size_t i = 0; i < j; ++i) moves[i] = {support[i], word[i]};
        if (!visit(Permutation(std::move(moves)))) return false;
      }
      return true;
    });
    if (!more) return;
  }
}

std::vector<Permutation> enumerate_permutations(std::size_t k, Vertex window) {
  std::vector<Permutation> out;
  for_each_permutation(k, window, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

bool WindowedClass::contains(const Permutation& h) const {
  if (h.support_size() > k) return false;
  const auto s = h.support();
  return s.empty() || s.back() < window;
}

bool realizes(const GraphSpec& base, const Permutation& h, std::span<const VertexPair> pairs, const Labels& tau) {
  if (tau.size() != pairs.size()) return false;
  const PresentedCopy copy{base, h};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (presented_edge(copy, pairs[i].u, pairs[i].v) != static_cast<bool>(tau[i])) return false;
  return true;
}

ConfigurationRealizer::ConfigurationRealizer(const GraphSpec& base, std::size_t k, Vertex window)
    : base_(base), k_(k), adjacency_(base, window) {}

namespace {

struct Constraint {
  std::size_t other;  // index into the vertex list, smaller than the owner
  bool label;
};

/// Depth-first search for sigma = h^{-1} on the listed vertices.
class SigmaSearch {
 public:
  SigmaSearch(const WindowAdjacency& adj, const std::vector<Vertex>& vertices,
              const std::vector<std::vector<Constraint>>& constraints, Meter* meter)
      : adj_(adj),
        vertices_(vertices),
        constraints_(constraints),
        meter_(meter),
        sigma_(vertices.size()),
        used_(adj.window(), 0),
        in_d_(adj.window(), 0) {}

  bool run(std::size_t bound) {
    bound_ = bound;
    d_size_ = 0;
    return step(0);
  }

  const std::vector<Vertex>& sigma() const { return sigma_; }

 private:
  void add_d(Vertex v) {
    if (in_d_[v]++ == 0) ++d_size_;
  }
  void remove_d(Vertex v) {
    if (--in_d_[v] == 0) --d_size_;
  }

  bool try_candidate(std::size_t idx, Vertex x, Vertex cand) {
    if (used_[cand]) return false;
    if (meter_) meter_->charge();
    const bool moved = cand != x;
    if (moved) {
      add_d(x);
      add_d(cand);
    }
    bool ok = d_size_ <= bound_;
    for (std::size_t c = 0; ok && c < constraints_[idx].size(); ++c) {
      const auto& con = constraints_[idx][c];
      if (meter_) meter_->charge();
      ok = adj_.edge(cand, sigma_[con.other]) == con.label;
    }
    if (ok) {
      sigma_[idx] = cand;
      used_[cand] = 1;
      if (step(idx + 1)) return true;
      used_[cand] = 0;
    }
    if (moved) {
      remove_d(x);
      remove_d(cand);
    }
    return false;
  }

  bool step(std::size_t idx) {
    if (idx == vertices_.size()) return true;
    const Vertex x = vertices_[idx];
    if (try_candidate(idx, x, x)) return true;
    for (Vertex cand = 0; cand < adj_.window(); ++cand)
      if (cand != x && try_candidate(idx, x, cand)) return true;
    return false;
  }

  const WindowAdjacency& adj_;
  const std::vector<Vertex>& vertices_;
  const std::vector<std::vector<Constraint>>& constraints_;
  Meter* meter_;
  std::vector<Vertex> sigma_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> in_d_;
  std::size_t bound_ = 0;
  std::size_t d_size_ = 0;
};

/// Closes the partial injection x -> sigma(x) into a permutation of minimum
/// support and returns its inverse h.
Permutation complete(const std::vector<Vertex>& domain, const std::vector<Vertex>& sigma) {
  std::vector<Permutation::Move> moves;  // moves of sigma
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (sigma[i] != domain[i]) moves.push_back({domain[i], sigma[i]});
  std::sort(moves.begin(), moves.end());
  auto image_of = [&](Vertex x) -> std::optional<Vertex> {
    auto it = std::lower_bound(moves.begin(), moves.end(), x,
                               [](const Permutation::Move& m, Vertex v) { return m.from < v; });
    if (it != moves.end() && it->from == x) return it->to;
    return std::nullopt;
  };
  std::vector<Vertex> images;
  for (const auto& m : moves) images.push_back(m.to);
  std::sort(images.begin(), images.end());

  std::vector<Permutation::Move> closing;
  for (const auto& m : moves) {
    if (std::binary_search(images.begin(), images.end(), m.from)) continue;  // not a chain start
    Vertex end = m.to;
    while (auto next = image_of(end)) end = *next;
    closing.push_back({end, m.from});
  }
  std::vector<Permutation::Move> inverse;
  inverse.reserve(moves.size() + closing.size());
  for (const auto& m : moves) inverse.push_back({m.to, m.from});
  for (const auto& m : closing) inverse.push_back({m.to, m.from});
  return Permutation(std::move(inverse));
}

}  // namespace

std::optional<Permutation> ConfigurationRealizer::realize(std::span<const VertexPair> pairs, const Labels& tau,
                                                          Meter* meter) const {
  if (tau.size() != pairs.size()) throw InvalidArgument("configuration length differs from the number of pairs");
  const Vertex w = window();
  std::vector<Vertex> vertices;
  for (const auto& p : pairs) {
    if (p.u >= w || p.v >= w) throw InvalidArgument("pair outside the window");
    vertices.push_back(p.u);
    vertices.push_back(p.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto index_of = [&](Vertex x) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
  };

  std::vector<std::vector<Constraint>> constraints(vertices.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].u == pairs[i].v) {
      if (tau[i]) return std::nullopt;  // no copy has a loop
      continue;
    }
    std::size_t a = index_of(pairs[i].u), b = index_of(pairs[i].v);
    if (a < b) std::swap(a, b);
    constraints[a].push_back({b, static_cast<bool>(tau[i])});
  }

  SigmaSearch search(adjacency_, vertices, constraints, meter);
  const std::size_t max_bound = std::min<std::size_t>(k_, w);
  for (std::size_t bound = 0; bound <= max_bound; ++bound) {
    if (bound == 1) continue;  // no permutation moves exactly one point
    if (search.run(bound)) return complete(vertices, search.sigma());
  }
  return std::nullopt;
}

std::optional<Permutation> realize_configuration(const GraphSpec& base, std::span<const VertexPair> pairs,
                                                 const Labels& tau, std::size_t k, Vertex window) {
  return ConfigurationRealizer(base, k, window).realize(pairs, tau);
}

}  // namespace graphlearn
