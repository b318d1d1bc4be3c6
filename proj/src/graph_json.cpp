#include "graphlearn/graph_json.hpp"

#include <cstdio>

namespace graphlearn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
  }
}

Tail tail_from_string(const std::string& s) {
  if (s == "clique") return Tail::Clique;
  if (s == "anticlique") return Tail::Anticlique;
  throw InvalidArgument("unknown tail '" + s + "'");
}

Json edges_to_json(const EdgeSet& e) { return pairs_to_json(e.edges()); }

Json rule_to_json(const CliqueSizeRule& r) {
  switch (r.kind) {
    case CliqueSizeRule::Kind::Constant: return {{"kind", "constant"}, {"size", r.first}};
    case CliqueSizeRule::Kind::Arithmetic: return {{"kind", "arithmetic"}, {"first", r.first}, {"step", r.step}};
    case CliqueSizeRule::Kind::Periodic: return {{"kind", "periodic"}, {"prefix", r.prefix}, {"cycle", r.cycle}};
  }
  return {};
}

CliqueSizeRule rule_from_json(const Json& j) {
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "constant") return CliqueSizeRule::constant(get_as<std::uint64_t>(j, "size"));
  if (kind == "arithmetic")
    return CliqueSizeRule::arithmetic(get_as<std::uint64_t>(j, "first"), get_as<std::uint64_t>(j, "step"));
  if (kind == "periodic")
    return CliqueSizeRule::periodic(get_as<std::vector<std::uint64_t>>(j, "prefix"),
                                    get_as<std::vector<std::uint64_t>>(j, "cycle"));
  throw InvalidArgument("unknown clique size rule '" + kind + "'");
}

}  // namespace

Json pairs_to_json(const PairList& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.u, p.v});
  return out;
}

PairList pairs_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of pairs");
  PairList out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw InvalidArgument("expected a pair [u, v] of naturals");
    out.push_back({p[0].get<Vertex>(), p[1].get<Vertex>()});
  }
  return out;
}

Json to_json(const FiniteSupportPermutation& p) {
  Json out = Json::array();
  for (const auto& m : p.moves()) out.push_back({m.from, m.to});
  return out;
}

FiniteSupportPermutation permutation_from_json(const Json& j) {
  std::vector<FiniteSupportPermutation::Move> moves;
  for (const auto& p : pairs_from_json(j)) moves.push_back({p.u, p.v});
  return FiniteSupportPermutation(std::move(moves));
}

Json to_json(const StagedGraph& g) {
  Json stages = Json::array();
  for (const auto& s : g.stages) {
    stages.push_back({{"stage", s.stage},
                      {"bit", s.bit},
                      {"action", s.action},
                      {"added", s.added},
                      {"edges", pairs_to_json(s.edges)},
                      {"unused", s.unused}});
  }
  return {{"reduction", to_string(g.reduction)},
          {"prefix", g.prefix},
          {"vertex_count", g.vertex_count},
          {"unused", g.unused},
          {"stages", std::move(stages)}};
}

StagedGraph staged_from_json(const Json& j) {
  StagedGraph g;
  g.reduction = reduction_kind_from_string(get_as<std::string>(j, "reduction"));
  g.prefix = get_as<std::string>(j, "prefix");
  g.vertex_count = get_as<Vertex>(j, "vertex_count");
  g.unused = get_as<std::vector<Vertex>>(j, "unused");
  const auto& stages = field(j, "stages");
  if (!stages.is_array()) throw InvalidArgument("'stages' must be an array");
  for (const auto& s : stages) {
    StageRecord r;
    r.stage = get_as<std::size_t>(s, "stage");
    r.bit = get_as<int>(s, "bit");
    r.action = get_as<std::string>(s, "action");
    r.added = get_as<std::vector<Vertex>>(s, "added");
    r.edges = pairs_from_json(field(s, "edges"));
    r.unused = get_as<std::vector<Vertex>>(s, "unused");
    for (const auto& e : r.edges) g.edges.append_unsorted(e.u, e.v);
    g.stages.push_back(std::move(r));
  }
  g.edges.normalize();
  return g;
}

Json to_json(const GraphSpec& g) {
  Json out = std::visit(
      Overloaded{
          [](const shape::Clique&) { return Json::object(); },
          [](const shape::Anticlique&) { return Json::object(); },
          [](const shape::Rado&) { return Json::object(); },
          [](const shape::RGraph&) { return Json::object(); },
          [](const shape::FinitePlusIsolatedTail& f) {
            return Json{{"n_named", f.n_named}, {"edges", edges_to_json(f.edges)}};
          },
          [](const shape::CliqueUnion& c) { return Json{{"rule", rule_to_json(c.rule)}}; },
          [](const shape::AutoTrivial& a) {
            return Json{{"m", a.m},
                        {"s0_edges", edges_to_json(a.s0_edges)},
                        {"s0_prime", a.s0_prime},
                        {"tail", to_string(a.tail)}};
          },
          [](const shape::Oplus& o) { return Json{{"left", to_json(*o.left)}, {"right", to_json(*o.right)}}; },
          [](const shape::Complement& c) { return Json{{"inner", to_json(*c.inner)}}; },
          [](const shape::Permuted& p) { return Json{{"inner", to_json(*p.inner)}, {"perm", to_json(p.perm)}}; },
          [](const shape::ExplicitStaged& s) { return to_json(s.graph); },
      },
      g.node());
  out["family"] = g.family();
  return out;
}

GraphSpec graph_from_json(const Json& j) {
  const auto family = get_as<std::string>(j, "family");
  if (family == "clique") return GraphSpec::clique();
  if (family == "anticlique") return GraphSpec::anticlique();
  if (family == "rado") return GraphSpec::rado();
  if (family == "rgraph") return GraphSpec::rgraph();
  if (family == "finite") return GraphSpec::finite(get_as<Vertex>(j, "n_named"), pairs_from_json(field(j, "edges")));
  if (family == "clique_union") return GraphSpec::clique_union(rule_from_json(field(j, "rule")));
  if (family == "auto_trivial")
    return GraphSpec::auto_trivial(get_as<Vertex>(j, "m"), pairs_from_json(field(j, "s0_edges")),
                                   get_as<std::vector<Vertex>>(j, "s0_prime"),
                                   tail_from_string(get_as<std::string>(j, "tail")));
  if (family == "oplus") return GraphSpec::oplus(graph_from_json(field(j, "left")), graph_from_json(field(j, "right")));
  if (family == "complement") return GraphSpec::complement(graph_from_json(field(j, "inner")));
  if (family == "permuted")
    return GraphSpec::permuted(graph_from_json(field(j, "inner")), permutation_from_json(field(j, "perm")));
  if (family == "staged") return GraphSpec::staged(staged_from_json(j));
  throw InvalidArgument("unknown graph family '" + family + "'");
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string graph_hash(const GraphSpec& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_dump(to_json(g))) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace graphlearn
