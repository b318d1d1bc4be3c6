#pragma once

#include <string>

#include <json.hpp>

#include "graphlearn/graph_spec.hpp"

namespace graphlearn {

using Json = nlohmann::json;

/// GraphSpec documents carry a "family" discriminator:
///   clique | anticlique | rado | rgraph
///   finite        {n_named, edges: [[u,v],...]}
///   clique_union  {rule: {kind: constant, size} | {kind: arithmetic, first, step}
///                        | {kind: periodic, prefix: [...], cycle: [...]}}
///   auto_trivial  {m, s0_edges, s0_prime, tail: clique|anticlique}
///   oplus         {left, right}
///   complement    {inner}
///   permuted      {inner, perm: [[from,to],...]}
///   staged        {reduction, prefix, vertex_count, unused, stages: [...]}
Json to_json(const GraphSpec& g);
/// Throws InvalidArgument on malformed documents.
GraphSpec graph_from_json(const Json& j);

Json to_json(const FiniteSupportPermutation& p);
FiniteSupportPermutation permutation_from_json(const Json& j);

Json to_json(const StagedGraph& g);
StagedGraph staged_from_json(const Json& j);

Json pairs_to_json(const PairList& pairs);
PairList pairs_from_json(const Json& j);

/// Canonical serialization (sorted keys, no whitespace).
std::string canonical_dump(const Json& j);
/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string graph_hash(const GraphSpec& g);

}  // namespace graphlearn
