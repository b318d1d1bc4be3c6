#include "graphlearn/learners.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace graphlearn {

namespace {

template <class... Ts>
void append_raw(std::string& out, Ts... values) {
  (out.append(reinterpret_cast<const char*>(&values), sizeof(values)), ...);
}

}  // namespace

// ---------------------------------------------------------------------------
// ATLearner

ATLearner::ATLearner(ATLearnerConfig config)
    : config_(std::move(config)), default_label_(config_.tail == Tail::Clique) {}

bool ATLearner::flipped(Vertex v) const {
  auto it = mistakes_.find(v);
  return it != mistakes_.end() && it->second > config_.m;
}

bool ATLearner::predict(VertexPair p) const {
  return (flipped(p.u) || flipped(p.v)) ? !default_label_ : default_label_;
}

void ATLearner::feedback(VertexPair p, bool truth) {
  if (predict(p) == truth) return;
  ++mistakes_[p.u];
  if (p.v != p.u) ++mistakes_[p.v];
}

std::string ATLearner::fingerprint() const {
  std::string out;
  out.reserve(mistakes_.size() * 2 * sizeof(std::uint64_t));
  for (const auto& [v, c] : mistakes_) append_raw(out, v, std::min<std::uint64_t>(c, config_.m + 1));
  return out;
}

// ---------------------------------------------------------------------------
// CliqueFiso2Learner

CliqueFiso2Learner::CliqueFiso2Learner(GraphSpec base) : base_(std::move(base)) {}

const CliqueFiso2Learner::VertexState* CliqueFiso2Learner::state(Vertex v) const {
  auto it = states_.find(v);
  return it == states_.end() ? nullptr : &it->second;
}

bool CliqueFiso2Learner::apply(const VertexState& s, Vertex x) const {
  return s.rule == Rule::CopyNeighborhood ? base_.edge(s.copy_of, x) : false;
}

bool CliqueFiso2Learner::predict(VertexPair p) const {
  const VertexState* su = state(p.u);
  const VertexState* sv = state(p.v);
  const bool u_anchored = su && su->rule != Rule::None;
  const bool v_anchored = sv && sv->rule != Rule::None;
  if (u_anchored && (!v_anchored || su->anchored_at < sv->anchored_at)) return apply(*su, p.v);
  if (v_anchored) return apply(*sv, p.u);
  return base_.edge(p.u, p.v);
}

void CliqueFiso2Learner::count_mistake(Vertex v, Vertex other, bool predicted) {
  VertexState& s = states_[v];
  if (predicted) {
    ++s.c1;
  } else {
    ++s.c0;
    if (s.c0 == 1) s.z = other;
    if (s.c0 == 2) s.w = other;
  }
  // The rule follows the current counters, so a vertex silenced by c1 = 2
  // starts copying z as soon as c0 reaches 1.
  const Rule before = s.rule;
  if (s.c0 >= 2) {
    s.rule = Rule::CopyNeighborhood;
    s.copy_of = *s.w;
  } else if (s.c1 >= 2 && s.c0 == 1) {
    s.rule = Rule::CopyNeighborhood;
    s.copy_of = *s.z;
  } else if (s.c1 >= 2) {
    s.rule = Rule::AllZero;
  }
  if (before == Rule::None && s.rule != Rule::None) s.anchored_at = ++anchors_;
}

void CliqueFiso2Learner::feedback(VertexPair p, bool truth) {
  const bool predicted = predict(p);
  if (predicted == truth) return;
  count_mistake(p.u, p.v, predicted);
  if (p.v != p.u) count_mistake(p.v, p.u, predicted);
}

std::string CliqueFiso2Learner::fingerprint() const {
  std::string out;
  out.reserve(states_.size() * 64);
  for (const auto& [v, st] : states_)
    append_raw(out, v, st.c0, st.c1, st.z.value_or(~Vertex{0}), st.w.value_or(~Vertex{0}),
               static_cast<std::uint8_t>(st.rule), st.copy_of, st.anchored_at);
  return out;
}

// ---------------------------------------------------------------------------
// Games

std::size_t GameTranscript::recount() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const Round& r) { return r.prediction != r.truth; }));
}

std::optional<VertexPair> OrderAdversary::next_pair() {
  if (next_ >= order_.size()) return std::nullopt;
  return order_[next_++];
}

bool OrderAdversary::reveal(VertexPair p, bool) { return presented_edge(target_, p.u, p.v); }

VersionSpaceAdversary::VersionSpaceAdversary(const GraphSpec& base, std::size_t k, Vertex window,
                                             RevealPolicy policy)
    : pairs_(window_pairs(window)), window_(window), policy_(policy), asked_(pairs_.size(), 0) {
  const WindowAdjacency adj(base, window);
  std::set<std::vector<std::uint64_t>> seen;
  for_each_permutation(k, window, [&](const Permutation& h) {
    add_member(adj, h, seen);
    return true;
  });
}

VersionSpaceAdversary::VersionSpaceAdversary(const GraphSpec& base, const std::vector<Permutation>& members,
                                             Vertex window, RevealPolicy policy)
    : pairs_(window_pairs(window)), window_(window), policy_(policy), asked_(pairs_.size(), 0) {
  const WindowAdjacency adj(base, window);
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& h : members) {
    for (Vertex v : h.support())
      if (v >= window) throw InvalidArgument("member moves a vertex outside the window");
    add_member(adj, h, seen);
  }
}

void VersionSpaceAdversary::add_member(const WindowAdjacency& adj, const Permutation& h,
                                       std::set<std::vector<std::uint64_t>>& seen) {
  std::vector<std::uint64_t> labels((pairs_.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (adj.edge(h.inverse_of(pairs_[i].u), h.inverse_of(pairs_[i].v))) labels[i >> 6] |= std::uint64_t{1} << (i & 63U);
  if (seen.insert(labels).second) members_.push_back({h, std::move(labels)});
}

std::size_t VersionSpaceAdversary::index_of(VertexPair p) const {
  const VertexPair q = p.normalized();
  if (q.v >= window_ || q.u == q.v) throw InvalidArgument("pair outside the adversary's window");
  return static_cast<std::size_t>(std::lower_bound(pairs_.begin(), pairs_.end(), q) - pairs_.begin());
}

std::optional<VertexPair> VersionSpaceAdversary::next_pair() {
  if (members_.size() <= 1) return std::nullopt;
  std::size_t best = pairs_.size(), best_balance = 0;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (asked_[i]) continue;
    std::size_t ones = 0;
    for (const auto& m : members_) ones += label(m, i);
    const std::size_t balance = std::min(ones, members_.size() - ones);
    if (balance > best_balance) {
      best_balance = balance;
      best = i;
    }
  }
  if (best == pairs_.size()) return std::nullopt;
  return pairs_[best];
}

bool VersionSpaceAdversary::reveal(VertexPair p, bool prediction) {
  const std::size_t i = index_of(p);
  asked_[i] = 1;
  std::size_t ones = 0;
  for (const auto& m : members_) ones += label(m, i);
  const std::size_t zeros = members_.size() - ones;
  bool truth;
  if (policy_ == RevealPolicy::ForceMistake) {
    truth = (prediction ? zeros : ones) > 0 ? !prediction : prediction;
  } else {
    truth = ones > zeros;
  }
  std::erase_if(members_, [&](const Member& m) { return label(m, i) != truth; });
  return truth;
}

std::optional<Permutation> VersionSpaceAdversary::target() const {
  if (members_.empty()) return std::nullopt;
  return members_.front().perm;
}

GameTranscript run_game(Learner& learner, Adversary& adversary, std::size_t max_rounds) {
  GameTranscript t;
  std::set<VertexPair> asked;
  while (t.rounds.size() < max_rounds) {
    auto p = adversary.next_pair();
    if (!p) break;
    if (!asked.insert(p->normalized()).second) continue;
    Round r{*p, learner.predict(*p), false};
    r.truth = adversary.reveal(*p, r.prediction);
    learner.feedback(*p, r.truth);
    if (r.prediction != r.truth) ++t.mistakes;
    t.rounds.push_back(r);
  }
  t.target = adversary.target();
  return t;
}

GameTranscript run_game(Learner& learner, const PairList& order, const PresentedCopy& target,
                        std::size_t max_rounds) {
  OrderAdversary adversary(order, target);
  return run_game(learner, adversary, max_rounds);
}

// ---------------------------------------------------------------------------
// Sweeps

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

void deterministic_shuffle(PairList& pairs, std::mt19937_64& rng) {
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[uniform_below(rng, i)]);
}

namespace {

struct MemoKey {
  std::uint64_t mask;
  std::string state;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    return std::hash<std::string>{}(k.state) ^ (k.mask * 0x9E3779B97F4A7C15ULL);
  }
};

struct MemoEntry {
  std::size_t mistakes;
  std::size_t choice;
};

class WorstCaseSearch {
 public:
  WorstCaseSearch(const PresentedCopy& target, const PairList& pairs) : pairs_(pairs) {
    for (const auto& p : pairs) truth_.push_back(presented_edge(target, p.u, p.v));
  }

  std::size_t solve(const Learner& learner, std::uint64_t mask) {
    if (mask == full()) return 0;
    MemoKey key{mask, learner.fingerprint()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.mistakes;
    MemoEntry best{0, pairs_.size()};
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if ((mask >> i) & 1U) continue;
      auto next = learner.clone();
      const std::size_t wrong = next->predict(pairs_[i]) != truth_[i];
      next->feedback(pairs_[i], truth_[i]);
      // A correct round that leaves the state alone can always be postponed to
      // the end without losing mistakes, so only state-changing rounds branch.
      if (!wrong && next->fingerprint() == key.state) continue;
      const std::size_t total = wrong + solve(*next, mask | (std::uint64_t{1} << i));
      if (best.choice == pairs_.size() || total > best.mistakes) best = {total, i};
    }
    memo_.emplace(std::move(key), best);
    return best.mistakes;
  }

  PairList replay(const Learner& start) {
    PairList order;
    auto learner = start.clone();
    std::uint64_t mask = 0;
    while (mask != full()) {
      const std::size_t i = memo_.at(MemoKey{mask, learner->fingerprint()}).choice;
      if (i == pairs_.size()) break;
      order.push_back(pairs_[i]);
      learner->feedback(pairs_[i], truth_[i]);
      mask |= std::uint64_t{1} << i;
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (!((mask >> i) & 1U)) order.push_back(pairs_[i]);
    return order;
  }

 private:
  std::uint64_t full() const { return pairs_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs_.size()) - 1; }

  const PairList& pairs_;
  std::vector<bool> truth_;
  std::unordered_map<MemoKey, MemoEntry, MemoHash> memo_;
};

}  // namespace

WorstCase worst_case_mistakes(const Learner& learner, const PresentedCopy& target, const PairList& pairs) {
  if (pairs.size() > 64) throw InvalidArgument("exhaustive order sweep supports at most 64 pairs");
  WorstCaseSearch search(target, pairs);
  WorstCase out;
  out.mistakes = search.solve(learner, 0);
  out.order = search.replay(learner);
  return out;
}

WorstCase sampled_worst_case(const Learner& learner, const PresentedCopy& target, const PairList& pairs,
                             std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WorstCase out;
  PairList order = pairs;
  for (std::size_t s = 0; s < samples; ++s) {
    deterministic_shuffle(order, rng);
    auto l = learner.clone();
    const auto t = run_game(*l, order, target);
    if (s == 0 || t.mistakes > out.mistakes) out = {t.mistakes, order};
  }
  return out;
}

}  // namespace graphlearn
