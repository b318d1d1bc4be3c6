#include "graphlearn/certificates.hpp"

#include <algorithm>
#include <set>

namespace graphlearn {

namespace {

Json header(const char* kind, const GraphSpec& base) {
  return {{"kind", kind}, {"graph", to_json(base)}, {"graph_hash", graph_hash(base)}};
}

std::vector<Vertex> subset_of(const std::vector<Vertex>& a, std::size_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(a[i]);
  return out;
}

Json ar_body(const AlmostRandomWitness& w) {
  Json realizers = Json::array();
  for (std::size_t mask = 0; mask < w.realizers.size(); ++mask)
    realizers.push_back({{"x", subset_of(w.a, mask)}, {"z", w.realizers[mask]}});
  return {{"a", w.a}, {"realizers", std::move(realizers)}};
}

AlmostRandomWitness ar_from(const Json& j) {
  AlmostRandomWitness w;
  w.a = j.at("a").get<std::vector<Vertex>>();
  const auto& rs = j.at("realizers");
  if (w.a.size() >= 32 || rs.size() != (std::size_t{1} << w.a.size()))
    throw InvalidArgument("almost-random witness needs one realizer per bipartition");
  w.realizers.assign(rs.size(), 0);
  std::vector<std::uint8_t> seen(rs.size(), 0);
  for (const auto& r : rs) {
    std::size_t mask = 0;
    for (Vertex x : r.at("x").get<std::vector<Vertex>>()) {
      auto it = std::find(w.a.begin(), w.a.end(), x);
      if (it == w.a.end()) throw InvalidArgument("bipartition side is not a subset of A");
      mask |= std::size_t{1} << (it - w.a.begin());
    }
    if (seen[mask]++) throw InvalidArgument("bipartition listed twice");
    w.realizers[mask] = r.at("z").get<Vertex>();
  }
  return w;
}

Json l56_body(const Lemma56Witness& w) { return {{"u", w.u}, {"v", w.v}}; }

Lemma56Witness l56_from(const Json& j) {
  return {j.at("u").get<std::vector<Vertex>>(), j.at("v").get<std::vector<Vertex>>()};
}

const char* tail_name(Tail t) { return to_string(t); }

Tail tail_from(const std::string& s) {
  if (s == "clique") return Tail::Clique;
  if (s == "anticlique") return Tail::Anticlique;
  throw InvalidArgument("unknown tail '" + s + "'");
}

Basis basis_from(const std::string& s) {
  for (Basis b : {Basis::Structural, Basis::Exact, Basis::Evidence, Basis::None})
    if (s == to_string(b)) return b;
  throw InvalidArgument("unknown basis '" + s + "'");
}

GraphSpec checked_graph(const Json& doc) {
  GraphSpec graph = graph_from_json(doc.at("graph"));
  if (doc.at("graph_hash").get<std::string>() != graph_hash(graph))
    throw InvalidArgument("graph_hash does not match the embedded graph");
  return graph;
}

VerifyResult verdict(bool ok, const std::string& what) {
  return {ok, ok ? what + " certificate verified" : what + " certificate rejected"};
}

}  // namespace

Json shatter_json(const GraphSpec& base, std::size_t k, Vertex window, const ShatterWitness& w) {
  Json j = header("shatter", base);
  j["k"] = k;
  j["window"] = window;
  j["pairs"] = pairs_to_json(w.pairs);
  Json realizers = Json::array();
  for (std::size_t mask = 0; mask < w.realizers.size(); ++mask)
    realizers.push_back(
        {{"config", labels_to_string(configuration_of(mask, w.pairs.size()))}, {"perm", to_json(w.realizers[mask])}});
  j["realizers"] = std::move(realizers);
  return j;
}

Json thresholds_json(const GraphSpec& base, std::size_t k, Vertex window, const ThresholdWitness& w) {
  Json j = header("thresholds", base);
  j["k"] = k;
  j["window"] = window;
  j["t"] = w.hypotheses.size();
  j["pairs"] = pairs_to_json(w.pairs);
  Json hyps = Json::array();
  for (const auto& h : w.hypotheses) hyps.push_back(to_json(h));
  j["hypotheses"] = std::move(hyps);
  return j;
}

Json lemma56_json(const GraphSpec& base, Vertex window, const Lemma56Witness& w) {
  Json j = header("lemma56", base);
  j["n"] = w.v.size();
  j["window"] = window;
  j.update(l56_body(w));
  return j;
}

Json almost_random_json(const GraphSpec& base, Vertex window, const AlmostRandomWitness& w) {
  Json j = header("almost_random", base);
  j["n"] = w.a.size();
  j["window"] = window;
  j.update(ar_body(w));
  return j;
}

Json induced_json(const GraphSpec& base, const Pattern& pattern, Vertex window, const Embedding& e) {
  Json j = header("induced", base);
  j["pattern"] = to_string(pattern.kind);
  j["d"] = pattern.d;
  j["window"] = window;
  j["embedding"] = e;
  return j;
}

Json report_json(const ClassificationReport& r) {
  Json j = header("report", r.graph);
  j["budgets"] = {{"d_max", r.budgets.d_max}, {"n_max", r.budgets.n_max}, {"window", r.budgets.window}};
  j["at_structure"] = r.at_form ? "given" : "not_given";
  if (r.at_form)
    j["at_form"] = {{"m", r.at_form->m},
                    {"s0_edges", pairs_to_json(r.at_form->s0_edges.edges())},
                    {"s0_prime", r.at_form->s0_prime},
                    {"tail", tail_name(r.at_form->tail)}};
  j["known_not_at"] = r.known_not_at;
  Json induced = Json::object();
  for (const auto& [kind, levels] : r.induced) {
    Json arr = Json::array();
    for (const auto& l : levels) {
      Json e{{"d", l.level}, {"found", l.witness.has_value()}};
      if (l.witness) e["embedding"] = *l.witness;
      arr.push_back(std::move(e));
    }
    induced[to_string(kind)] = std::move(arr);
  }
  j["induced"] = std::move(induced);
  Json ar = Json::array();
  for (const auto& l : r.almost_random) {
    Json e{{"n", l.level}, {"found", l.witness.has_value()}};
    if (l.witness) e.update(ar_body(*l.witness));
    ar.push_back(std::move(e));
  }
  j["almost_random"] = std::move(ar);
  Json l56 = Json::array();
  for (const auto& l : r.lemma56) {
    Json e{{"n", l.level}, {"found", l.witness.has_value()}};
    if (l.witness) e.update(l56_body(*l.witness));
    l56.push_back(std::move(e));
  }
  j["lemma56"] = std::move(l56);
  j["verdict"] = to_string(r.verdict);
  j["basis"] = to_string(r.basis);
  j["notes"] = r.notes;
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  try {
    ClassificationReport r{checked_graph(j), {}, {}, {}, {}, {}, {}, {}, {}, {}};
    const auto& b = j.at("budgets");
    r.budgets = {b.at("d_max").get<std::size_t>(), b.at("n_max").get<std::size_t>(), b.at("window").get<Vertex>()};
    if (j.at("at_structure").get<std::string>() == "given") {
      const auto& f = j.at("at_form");
      AutoTrivialForm form;
      form.m = f.at("m").get<Vertex>();
      form.s0_edges = EdgeSet(pairs_from_json(f.at("s0_edges")));
      form.s0_prime = f.at("s0_prime").get<std::vector<Vertex>>();
      form.tail = tail_from(f.at("tail").get<std::string>());
      r.at_form = std::move(form);
    }
    r.known_not_at = j.at("known_not_at").get<bool>();
    for (const auto& [name, levels] : j.at("induced").items()) {
      auto& out = r.induced[pattern_kind_from_string(name)];
      for (const auto& l : levels) {
        LevelResult<Embedding> e{l.at("d").get<std::size_t>(), std::nullopt};
        if (l.at("found").get<bool>()) e.witness = l.at("embedding").get<Embedding>();
        out.push_back(std::move(e));
      }
    }
    for (const auto& l : j.at("almost_random")) {
      LevelResult<AlmostRandomWitness> e{l.at("n").get<std::size_t>(), std::nullopt};
      if (l.at("found").get<bool>()) e.witness = ar_from(l);
      r.almost_random.push_back(std::move(e));
    }
    for (const auto& l : j.at("lemma56")) {
      LevelResult<Lemma56Witness> e{l.at("n").get<std::size_t>(), std::nullopt};
      if (l.at("found").get<bool>()) e.witness = l56_from(l);
      r.lemma56.push_back(std::move(e));
    }
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.basis = basis_from(j.at("basis").get<std::string>());
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

VerifyResult verify_certificate(const Json& doc) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "report") {
      const auto r = report_from_json(doc);
      return verdict(validate(r), "report");
    }
    const GraphSpec graph = checked_graph(doc);
    const Vertex window = doc.at("window").get<Vertex>();
    auto in_window = [window](const std::vector<Vertex>& xs) {
      return std::all_of(xs.begin(), xs.end(), [window](Vertex x) { return x < window; });
    };
    if (kind == "shatter") {
      ShatterWitness w{pairs_from_json(doc.at("pairs")), {}};
      const std::size_t d = w.pairs.size();
      const auto& rs = doc.at("realizers");
      if (d >= 64 || rs.size() != (std::size_t{1} << d)) return verdict(false, kind);
      w.realizers.resize(rs.size());
      std::set<std::string> seen;
      for (const auto& r : rs) {
        const Labels config = labels_from_string(r.at("config").get<std::string>());
        if (config.size() != d || !seen.insert(labels_to_string(config)).second) return verdict(false, kind);
        std::uint64_t mask = 0;
        for (auto b : config) mask = (mask << 1) | b;
        w.realizers[mask] = permutation_from_json(r.at("perm"));
      }
      return verdict(validate(graph, w, doc.at("k").get<std::size_t>(), window), kind);
    }
    if (kind == "thresholds") {
      ThresholdWitness w{pairs_from_json(doc.at("pairs")), {}};
      for (const auto& h : doc.at("hypotheses")) w.hypotheses.push_back(permutation_from_json(h));
      const bool ok = w.hypotheses.size() == doc.at("t").get<std::size_t>() &&
                      validate(graph, w, doc.at("k").get<std::size_t>(), window);
      return verdict(ok, kind);
    }
    if (kind == "lemma56") {
      const auto w = l56_from(doc);
      const bool ok = w.v.size() == doc.at("n").get<std::size_t>() && in_window(w.u) && in_window(w.v) &&
                      validate(graph, w);
      return verdict(ok, kind);
    }
    if (kind == "almost_random") {
      const auto w = ar_from(doc);
      const bool ok = w.a.size() == doc.at("n").get<std::size_t>() && in_window(w.a) && in_window(w.realizers) &&
                      validate(graph, w);
      return verdict(ok, kind);
    }
    if (kind == "induced") {
      const Pattern p = make_pattern(pattern_kind_from_string(doc.at("pattern").get<std::string>()),
                                     doc.at("d").get<std::size_t>());
      const auto e = doc.at("embedding").get<Embedding>();
      return verdict(in_window(e) && validate_embedding(graph, p, e), kind);
    }
    return {false, "unknown certificate kind '" + kind + "'"};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

std::string transcript_jsonl(const GameTranscript& t, const Json& meta) {
  std::string out;
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    const Json line{{"round", i + 1},
                    {"pair", {r.pair.u, r.pair.v}},
                    {"prediction", static_cast<int>(r.prediction)},
                    {"truth", static_cast<int>(r.truth)},
                    {"mistake", r.prediction != r.truth}};
    out += line.dump() + "\n";
  }
  Json summary = meta;
  summary["summary"] = true;
  summary["rounds"] = t.rounds.size();
  summary["mistakes"] = t.mistakes;
  if (t.target) summary["target"] = to_json(*t.target);
  out += summary.dump() + "\n";
  return out;
}

}  // namespace graphlearn
