#pragma once

#include <string>

#include "graphlearn/classifier.hpp"
#include "graphlearn/graph_json.hpp"
#include "graphlearn/learners.hpp"

namespace graphlearn {

/// Every certificate document carries "kind", the full "graph" and its
/// "graph_hash", so it can be re-checked from the file alone.
///
///   shatter        {k, window, pairs, realizers: [{config, perm}...]}
///   thresholds     {k, window, t, pairs, hypotheses: [perm...]}
///   lemma56        {n, window, u, v}
///   almost_random  {n, window, a, realizers: [{x, z}...]}
///   induced        {pattern, d, window, embedding}
///   report         {budgets, at_structure, at_form?, known_not_at, induced,
///                   almost_random, lemma56, verdict, basis, notes}
Json shatter_json(const GraphSpec& base, std::size_t k, Vertex window, const ShatterWitness& w);
Json thresholds_json(const GraphSpec& base, std::size_t k, Vertex window, const ThresholdWitness& w);
Json lemma56_json(const GraphSpec& base, Vertex window, const Lemma56Witness& w);
Json almost_random_json(const GraphSpec& base, Vertex window, const AlmostRandomWitness& w);
Json induced_json(const GraphSpec& base, const Pattern& pattern, Vertex window, const Embedding& e);
Json report_json(const ClassificationReport& report);

ClassificationReport report_from_json(const Json& j);

struct VerifyResult {
  bool ok = false;
  std::string message;
};

/// Re-validates any certificate or report produced by this library.
/// Malformed documents are reported as failures, never thrown.
VerifyResult verify_certificate(const Json& doc);

/// One JSON object per round, then a summary record.
std::string transcript_jsonl(const GameTranscript& t, const Json& meta);

}  // namespace graphlearn
