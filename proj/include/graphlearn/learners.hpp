#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "graphlearn/classes.hpp"
#include "graphlearn/window_adjacency.hpp"

namespace graphlearn {

/// An online learner. predict is a pure function of the state; feedback is
/// called once per round with the revealed label, after predict.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual bool predict(VertexPair p) const = 0;
  virtual void feedback(VertexPair p, bool truth) = 0;
  virtual std::unique_ptr<Learner> clone() const = 0;
  /// Canonical encoding of the state; equal fingerprints predict identically forever.
  virtual std::string fingerprint() const = 0;
  virtual std::string name() const = 0;
};

/// Known automorphically trivial base for the AT learner.
struct ATLearnerConfig {
  Vertex m = 0;
  EdgeSet s0_edges;
  std::vector<Vertex> s0_prime;
  Tail tail = Tail::Anticlique;

  static ATLearnerConfig from(const AutoTrivialForm& form) { return {form.m, form.s0_edges, form.s0_prime, form.tail}; }
  GraphSpec to_graph() const { return GraphSpec::auto_trivial(m, s0_edges.edges(), s0_prime, tail); }
};

/// Predicts the tail's constant label, and the opposite label on pairs touching
/// a vertex that has been involved in more than m mistakes.
class ATLearner final : public Learner {
 public:
  explicit ATLearner(ATLearnerConfig config);

  bool predict(VertexPair p) const override;
  void feedback(VertexPair p, bool truth) override;
  std::unique_ptr<Learner> clone() const override { return std::make_unique<ATLearner>(*this); }
  std::string fingerprint() const override;
  std::string name() const override { return "at"; }

  bool flipped(Vertex v) const;
  const ATLearnerConfig& config() const { return config_; }

 private:
  ATLearnerConfig config_;
  bool default_label_;
  std::map<Vertex, std::uint64_t> mistakes_;
};

/// Learner for the two-point copies of a disjoint union of cliques.
///
/// Counters c0, c1 per vertex count wrong predictions of 0 and of 1 on pairs
/// through it. Once a counter reaches 2 the vertex is anchored, with a rule
/// read off the current counters:
///   c0 >= 2, raised to 2 on (v,w): predict (v,x) as the base edge (w,x);
///   c1 >= 2 and c0 = 1: predict (v,x) as the base edge (z,x), where (v,z)
///   is the pair that raised c0 to 1;
///   c1 >= 2 and c0 = 0: predict (v,x) as 0.
/// A pair is answered by the rule of its earlier-anchored endpoint, and by the
/// base graph when neither endpoint is anchored.
class CliqueFiso2Learner final : public Learner {
 public:
  explicit CliqueFiso2Learner(GraphSpec base);

  bool predict(VertexPair p) const override;
  void feedback(VertexPair p, bool truth) override;
  std::unique_ptr<Learner> clone() const override { return std::make_unique<CliqueFiso2Learner>(*this); }
  std::string fingerprint() const override;
  std::string name() const override { return "clique-fiso2"; }

 private:
  enum class Rule : std::uint8_t { None, CopyNeighborhood, AllZero };
  struct VertexState {
    std::uint32_t c0 = 0;
    std::uint32_t c1 = 0;
    std::optional<Vertex> z;  // partner on the pair that raised c0 to 1
    std::optional<Vertex> w;  // partner on the pair that raised c0 to 2
    Rule rule = Rule::None;
    Vertex copy_of = 0;
    std::uint64_t anchored_at = 0;  // order of first anchoring, 0 when never anchored
  };

  const VertexState* state(Vertex v) const;
  bool apply(const VertexState& s, Vertex x) const;
  void count_mistake(Vertex v, Vertex other, bool predicted);

  GraphSpec base_;
  std::map<Vertex, VertexState> states_;
  std::uint64_t anchors_ = 0;
};

class ConstantLearner final : public Learner {
 public:
  explicit ConstantLearner(bool label) : label_(label) {}
  bool predict(VertexPair) const override { return label_; }
  void feedback(VertexPair, bool) override {}
  std::unique_ptr<Learner> clone() const override { return std::make_unique<ConstantLearner>(*this); }
  std::string fingerprint() const override { return {}; }
  std::string name() const override { return label_ ? "constant-one" : "constant-zero"; }

 private:
  bool label_;
};

/// Always predicts the labels of one fixed copy.
class CopyLearner final : public Learner {
 public:
  explicit CopyLearner(PresentedCopy copy) : copy_(std::move(copy)) {}
  bool predict(VertexPair p) const override { return presented_edge(copy_, p.u, p.v); }
  void feedback(VertexPair, bool) override {}
  std::unique_ptr<Learner> clone() const override { return std::make_unique<CopyLearner>(*this); }
  std::string fingerprint() const override { return {}; }
  std::string name() const override { return "copy"; }

 private:
  PresentedCopy copy_;
};

struct Round {
  VertexPair pair;
  bool prediction = false;
  bool truth = false;
};

struct GameTranscript {
  std::vector<Round> rounds;
  std::size_t mistakes = 0;
  std::optional<Permutation> target;  // a copy consistent with every revealed label

  std::size_t recount() const;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  /// Next pair to ask, or nullopt to end the game.
  virtual std::optional<VertexPair> next_pair() = 0;
  /// Label revealed after the learner predicted.
  virtual bool reveal(VertexPair p, bool prediction) = 0;
  /// A target consistent with everything revealed so far, when known.
  virtual std::optional<Permutation> target() const = 0;
};

/// Asks a fixed list of pairs and answers from a fixed target.
class OrderAdversary final : public Adversary {
 public:
  OrderAdversary(PairList order, PresentedCopy target) : order_(std::move(order)), target_(std::move(target)) {}
  std::optional<VertexPair> next_pair() override;
  bool reveal(VertexPair p, bool prediction) override;
  std::optional<Permutation> target() const override { return target_.perm; }

 private:
  PairList order_;
  std::size_t next_ = 0;
  PresentedCopy target_;
};

enum class RevealPolicy {
  /// Contradict the prediction whenever some consistent member allows it.
  ForceMistake,
  /// Keep the label shared by more consistent members (ties: 0).
  LargerHalf,
};

/// Maintains the members of the windowed class consistent with past reveals
/// (identified by their labels on window pairs) and asks the lexicographically
/// first unasked pair whose split of the version space is most balanced.
class VersionSpaceAdversary final : public Adversary {
 public:
  VersionSpaceAdversary(const GraphSpec& base, std::size_t k, Vertex window,
                        RevealPolicy policy = RevealPolicy::ForceMistake);
  /// The version space spanned by an explicit list of members, each moving
  /// only vertices inside the window.
  VersionSpaceAdversary(const GraphSpec& base, const std::vector<Permutation>& members, Vertex window,
                        RevealPolicy policy = RevealPolicy::ForceMistake);

  std::optional<VertexPair> next_pair() override;
  bool reveal(VertexPair p, bool prediction) override;
  std::optional<Permutation> target() const override;

  std::size_t version_space_size() const { return members_.size(); }

 private:
  struct Member {
    Permutation perm;
    std::vector<std::uint64_t> labels;  // bit i: label of window pair i
  };
  bool label(const Member& m, std::size_t pair_index) const {
    return (m.labels[pair_index >> 6] >> (pair_index & 63U)) & 1U;
  }
  std::size_t index_of(VertexPair p) const;
  void add_member(const WindowAdjacency& adj, const Permutation& h, std::set<std::vector<std::uint64_t>>& seen);

  PairList pairs_;
  Vertex window_;
  RevealPolicy policy_;
  std::vector<Member> members_;
  std::vector<std::uint8_t> asked_;
};

/// Plays the protocol until the adversary stops or max_rounds rounds have been
/// recorded. A repeated pair is answered from the transcript without asking
/// the learner and is not recorded.
GameTranscript run_game(Learner& learner, Adversary& adversary, std::size_t max_rounds);
GameTranscript run_game(Learner& learner, const PairList& order, const PresentedCopy& target,
                        std::size_t max_rounds = SIZE_MAX);

/// Uniform index in [0, bound) from a 64-bit generator, by rejection; unlike
/// std::uniform_int_distribution this is identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Fisher-Yates shuffle driven by uniform_below.
void deterministic_shuffle(PairList& pairs, std::mt19937_64& rng);

struct WorstCase {
  std::size_t mistakes = 0;
  PairList order;  // an order achieving the maximum
};

/// Largest number of mistakes the learner makes against the target over all
/// orders of the given pairs, by memoizing on (asked set, learner state).
/// At most 64 pairs.
WorstCase worst_case_mistakes(const Learner& learner, const PresentedCopy& target, const PairList& pairs);

/// Largest mistake count over `samples` deterministic shuffles of pairs seeded by `seed`.
WorstCase sampled_worst_case(const Learner& learner, const PresentedCopy& target, const PairList& pairs,
                             std::size_t samples, std::uint64_t seed);

}  // namespace graphlearn
