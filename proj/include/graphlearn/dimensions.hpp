#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlearn/budget.hpp"
#include "graphlearn/classes.hpp"

namespace graphlearn {

/// Configuration number `mask` of d pairs: pair i gets bit (d-1-i) of mask,
/// so masks in increasing order list configurations in increasing binary order.
Labels configuration_of(std::uint64_t mask, std::size_t d);

struct ShatterWitness {
  PairList pairs;
  std::vector<Permutation> realizers;  // realizers[mask] realizes configuration_of(mask, d)
};

/// Hypotheses H_1..H_t and pairs p_1..p_{t-1} with p_j an edge of H_i's copy iff i <= j.
struct ThresholdWitness {
  PairList pairs;
  std::vector<Permutation> hypotheses;
};

/// u_0..u_n and v_1..v_n (v[j-1] holds v_j) with v_j adjacent to u_i iff j <= i.
struct Lemma56Witness {
  std::vector<Vertex> u;
  std::vector<Vertex> v;
};

/// Labels H_i assigns to the first m threshold pairs (i counts from 1).
Labels threshold_configuration(std::size_t i, std::size_t m);

std::optional<ShatterWitness> shatters(const GraphSpec& base, std::size_t k, const PairList& pairs, Vertex window,
                                       const SearchOptions& opts = {});

/// First d-tuple of window pairs (lexicographic over index tuples) that the
/// windowed class shatters.
std::optional<ShatterWitness> vc_lower_bound(const GraphSpec& base, std::size_t k, std::size_t d, Vertex window,
                                             const SearchOptions& opts = {});

/// First sequence of t-1 distinct window pairs (lexicographic) carrying t thresholds.
std::optional<ThresholdWitness> contains_thresholds(const GraphSpec& base, std::size_t k, std::size_t t,
                                                    Vertex window, const SearchOptions& opts = {});

/// First tuple in lexicographic order of (u_n, v_n, u_{n-1}, v_{n-1}, ..., u_1, v_1, u_0),
/// all 2n+1 vertices distinct and below the window.
std::optional<Lemma56Witness> lemma56_witness(const GraphSpec& base, std::size_t n, Vertex window,
                                              const SearchOptions& opts = {});

/// Result of testing one implication instance: a premise witness search and,
/// when the premise holds, a conclusion witness search.
struct ImplicationCheck {
  enum class Status { PremiseUnmet, PremiseInconclusive, ConclusionWitnessed, ConclusionInconclusive };
  Status status = Status::PremiseUnmet;
  std::size_t premise_size = 0;     // d (shattering) or t (thresholds)
  std::size_t conclusion_size = 0;
  std::string detail;
};

const char* to_string(ImplicationCheck::Status status);

struct CollapseReport {
  ImplicationCheck vc;          // VC(Fiso_k) >= 2(k+1)kj  =>  VC(Fiso_2) >= j
  ImplicationCheck thresholds;  // 2k(j+1)^{k+1}+1 thresholds in Fiso_k  =>  j+1 thresholds in Fiso_2
};

CollapseReport check_collapse_implication(const GraphSpec& base, std::size_t j, std::size_t k, Vertex window_small,
                                          Vertex window_large, const SearchOptions& opts = {});

/// Re-checks a witness through presented_edge and class membership.
bool validate(const GraphSpec& base, const ShatterWitness& w, std::size_t k, Vertex window);
bool validate(const GraphSpec& base, const ThresholdWitness& w, std::size_t k, Vertex window);
bool validate(const GraphSpec& base, const Lemma56Witness& w);

}  // namespace graphlearn
