// graphlearn: command-line front end for the searches, learners and reductions.
//
// Exit codes: 0 verdict or witness produced, 1 usage or malformed input,
// 2 search budget exceeded, 3 no witness within the window, 4 certificate rejected.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "graphlearn/certificates.hpp"
#include "graphlearn/reductions.hpp"

using namespace graphlearn;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kNoWitness = 3, kRejected = 4 };

struct GraphOptions {
  std::string family;
  std::string graph_path;
  std::size_t d_param = 2;
  std::string sizes = "arith:1:1";
  Vertex m = 2;
  std::string s0_edges = "0-1";
  std::string hubs = "0";
  std::string tail = "anticlique";
};

struct CommonOptions {
  std::string output = "-";
  std::string format = "json";
  std::uint64_t budget = 0;
  bool serial = false;

  SearchOptions search() const {
    SearchOptions s;
    if (budget > 0) s.ceiling = budget;
    if (serial) s.execution = Execution::Serial;
    return s;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint64_t to_natural(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw InvalidArgument("expected a natural number, got '" + s + "'");
  return v;
}

/// "0-1,2-3" -> [(0,1),(2,3)]
PairList parse_pairs(const std::string& s) {
  PairList out;
  for (const auto& item : split(s, ',')) {
    auto ends = split(item, '-');
    if (ends.size() != 2) throw InvalidArgument("expected a pair like 0-1, got '" + item + "'");
    out.push_back({to_natural(ends[0]), to_natural(ends[1])});
  }
  return out;
}

/// "N" constant, "A,B,..." repeating cycle, "arith:FIRST:STEP" arithmetic,
/// "P1,P2/C1,C2" prefix then cycle.
CliqueSizeRule parse_sizes(const std::string& s) {
  auto naturals = [](const std::string& list) {
    std::vector<std::uint64_t> out;
    for (const auto& x : split(list, ',')) out.push_back(to_natural(x));
    return out;
  };
  if (s.rfind("arith:", 0) == 0) {
    auto parts = split(s.substr(6), ':');
    if (parts.size() != 2) throw InvalidArgument("expected arith:FIRST:STEP");
    return CliqueSizeRule::arithmetic(to_natural(parts[0]), to_natural(parts[1]));
  }
  if (auto slash = s.find('/'); slash != std::string::npos)
    return CliqueSizeRule::periodic(naturals(s.substr(0, slash)), naturals(s.substr(slash + 1)));
  auto values = naturals(s);
  if (values.size() == 1) return CliqueSizeRule::constant(values[0]);
  return CliqueSizeRule::periodic({}, values);
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    text = read_all(in);
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

GraphSpec build_family(const GraphOptions& g) {
  const std::string& f = g.family;
  if (f == "clique") return GraphSpec::clique();
  if (f == "anticlique") return GraphSpec::anticlique();
  if (f == "rado") return GraphSpec::rado();
  if (f == "rgraph") return GraphSpec::rgraph();
  if (f == "m-core") return GraphSpec::m_core(g.d_param);
  if (f == "n-core") return GraphSpec::n_core(g.d_param);
  if (f == "co-m-core") return GraphSpec::complement(GraphSpec::m_core(g.d_param));
  if (f == "clique-union") return GraphSpec::clique_union(parse_sizes(g.sizes));
  if (f == "auto-trivial") {
    std::vector<Vertex> hubs;
    for (const auto& h : split(g.hubs, ',')) hubs.push_back(to_natural(h));
    const Tail tail = g.tail == "clique" ? Tail::Clique
                      : g.tail == "anticlique" ? Tail::Anticlique
                                               : throw InvalidArgument("tail must be clique or anticlique");
    return GraphSpec::auto_trivial(g.m, parse_pairs(g.s0_edges), hubs, tail);
  }
  throw InvalidArgument("unknown family '" + f + "'");
}

/// The graph named by --family or --graph; stdin when neither is given and
/// stdin_default is set.
GraphSpec load_graph(const GraphOptions& g, bool stdin_default, const std::string& fallback_family = {}) {
  if (!g.family.empty() && !g.graph_path.empty()) throw InvalidArgument("give either --family or --graph, not both");
  if (!g.graph_path.empty()) return graph_from_json(read_json(g.graph_path));
  if (!g.family.empty()) return build_family(g);
  if (!fallback_family.empty()) {
    GraphOptions copy = g;
    copy.family = fallback_family;
    return build_family(copy);
  }
  if (stdin_default) return graph_from_json(read_json("-"));
  throw InvalidArgument("no graph given; use --family or --graph");
}

void add_graph_options(CLI::App* app, GraphOptions& g) {
  app->add_option("--family", g.family,
                  "clique | anticlique | rado | rgraph | m-core | n-core | co-m-core | clique-union | auto-trivial");
  app->add_option("--graph", g.graph_path, "GraphSpec JSON file ('-' for stdin)");
  app->add_option("--d-param", g.d_param, "parameter d of m-core, n-core, co-m-core")->check(CLI::PositiveNumber);
  app->add_option("--sizes", g.sizes, "clique-union sizes: N | A,B,... | arith:FIRST:STEP | P,../C,..");
  app->add_option("--m", g.m, "auto-trivial core size");
  app->add_option("--s0-edges", g.s0_edges, "auto-trivial core edges, e.g. 0-1,1-2");
  app->add_option("--hubs", g.hubs, "auto-trivial hub set, e.g. 0,2");
  app->add_option("--tail", g.tail, "auto-trivial tail: clique | anticlique");
}

void add_common_options(CLI::App* app, CommonOptions& c) {
  app->add_option("--output,-o", c.output, "output file ('-' for stdout)");
  app->add_option("--format", c.format, "json | human")->check(CLI::IsMember({"json", "human"}));
  app->add_option("--budget", c.budget, "search ceiling in elementary checks (overrides GRAPHLEARN_BUDGET)");
  app->add_flag("--serial", c.serial, "run searches on one thread");
}

void emit(const CommonOptions& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw InvalidArgument("cannot write '" + c.output + "'");
  out << text;
}

void emit_json(const CommonOptions& c, const Json& j, const std::string& human) {
  emit(c, c.format == "json" ? j.dump(2) + "\n" : human);
}

std::string pairs_text(const PairList& pairs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? " " : "") << "(" << pairs[i].u << "," << pairs[i].v << ")";
  return os.str();
}

std::string vertices_text(const std::vector<Vertex>& xs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ")";
  return os.str();
}

void check_window(std::size_t k, Vertex window) {
  if (window < 1) throw InvalidArgument("window must be positive");
  if (k > window) throw InvalidArgument("window must be at least k");
}

// ---------------------------------------------------------------------------
// Subcommands

struct ClassifyArgs {
  GraphOptions graph;
  CommonOptions common;
  Budgets budgets;
};

int cmd_classify(const ClassifyArgs& a) {
  const GraphSpec graph = load_graph(a.graph, true);
  const auto report = classify(graph, a.budgets, a.common.search());
  std::ostringstream human;
  human << "verdict: " << to_string(report.verdict) << " (" << to_string(report.basis) << ")\n";
  for (const auto& note : report.notes) human << "  " << note << "\n";
  emit_json(a.common, report_json(report), human.str());
  return kOk;
}

struct VcArgs {
  GraphOptions graph;
  CommonOptions common;
  std::size_t k = 2;
  std::size_t d = 1;
  Vertex window = 8;
  std::string pairs;
};

int cmd_vc(const VcArgs& a) {
  const GraphSpec graph = load_graph(a.graph, false);
  check_window(a.k, a.window);
  const auto w = a.pairs.empty() ? vc_lower_bound(graph, a.k, a.d, a.window, a.common.search())
                                 : shatters(graph, a.k, parse_pairs(a.pairs), a.window, a.common.search());
  if (!w) {
    std::cerr << "no shattered tuple within the window\n";
    return kNoWitness;
  }
  emit_json(a.common, shatter_json(graph, a.k, a.window, *w), "shattered: " + pairs_text(w->pairs) + "\n");
  return kOk;
}

struct ThresholdArgs {
  GraphOptions graph;
  CommonOptions common;
  std::size_t k = 2;
  std::size_t t = 2;
  Vertex window = 8;
};

int cmd_thresholds(const ThresholdArgs& a) {
  const GraphSpec graph = load_graph(a.graph, false);
  check_window(a.k, a.window);
  const auto w = contains_thresholds(graph, a.k, a.t, a.window, a.common.search());
  if (!w) {
    std::cerr << "no " << a.t << " thresholds within the window\n";
    return kNoWitness;
  }
  emit_json(a.common, thresholds_json(graph, a.k, a.window, *w), "thresholds on: " + pairs_text(w->pairs) + "\n");
  return kOk;
}

struct WitnessArgs {
  GraphOptions graph;
  CommonOptions common;
  std::string kind = "lemma56";
  std::size_t n = 2;
  std::string pattern = "md";
  std::size_t d = 1;
  Vertex window = 16;
};

int cmd_witness(const WitnessArgs& a) {
  const GraphSpec graph = load_graph(a.graph, false);
  check_window(0, a.window);
  const auto opts = a.common.search();
  if (a.kind == "lemma56") {
    const auto w = lemma56_witness(graph, a.n, a.window, opts);
    if (!w) return std::cerr << "no lemma56 witness within the window\n", kNoWitness;
    emit_json(a.common, lemma56_json(graph, a.window, *w), "u=" + vertices_text(w->u) + " v=" + vertices_text(w->v) + "\n");
    return kOk;
  }
  if (a.kind == "almost-random") {
    const auto w = almost_random_witness(graph, a.n, a.window, opts);
    if (!w) return std::cerr << "no almost-random witness within the window\n", kNoWitness;
    emit_json(a.common, almost_random_json(graph, a.window, *w),
              "A=" + vertices_text(w->a) + " realizers=" + vertices_text(w->realizers) + "\n");
    return kOk;
  }
  if (a.kind == "induced") {
    const Pattern p = make_pattern(pattern_kind_from_string(a.pattern), a.d);
    const auto e = find_induced(graph, p, a.window, opts);
    if (!e) return std::cerr << "no induced copy within the window\n", kNoWitness;
    emit_json(a.common, induced_json(graph, p, a.window, *e), "embedding=" + vertices_text(*e) + "\n");
    return kOk;
  }
  throw InvalidArgument("unknown witness kind '" + a.kind + "'");
}

struct GameArgs {
  GraphOptions graph;
  CommonOptions common;
  std::string learner = "at";
  std::string adversary = "order";
  std::string target = "identity";
  std::string order = "lex";
  std::string sweep;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::size_t k = 2;
  Vertex window = 10;
  std::size_t max_rounds = 100000;
};

std::unique_ptr<Learner> make_learner(const std::string& name, const GraphSpec& base) {
  if (name == "at") {
    auto form = auto_trivial_form(base);
    if (!form) throw InvalidArgument("the at learner needs an automorphically trivial base");
    return std::make_unique<ATLearner>(ATLearnerConfig::from(*form));
  }
  if (name == "clique-fiso2") return std::make_unique<CliqueFiso2Learner>(base);
  if (name == "constant-zero") return std::make_unique<ConstantLearner>(false);
  if (name == "constant-one") return std::make_unique<ConstantLearner>(true);
  if (name == "copy") return std::make_unique<CopyLearner>(PresentedCopy{base, Permutation::identity()});
  throw InvalidArgument("unknown learner '" + name + "'");
}

/// "identity", "a-b" (transposition) or "x>y,y>x,..." (explicit moves).
Permutation parse_target(const std::string& s) {
  if (s == "identity") return Permutation::identity();
  if (s.find('>') != std::string::npos) {
    std::vector<Permutation::Move> moves;
    for (const auto& item : split(s, ',')) {
      auto ends = split(item, '>');
      if (ends.size() != 2) throw InvalidArgument("expected moves like 0>4,4>0");
      moves.push_back({to_natural(ends[0]), to_natural(ends[1])});
    }
    return Permutation(std::move(moves));
  }
  auto p = parse_pairs(s);
  if (p.size() != 1) throw InvalidArgument("expected identity, a-b or x>y,...");
  return Permutation::transposition(p[0].u, p[0].v);
}

std::string default_family_for(const std::string& learner) {
  if (learner == "at") return "auto-trivial";
  if (learner == "clique-fiso2") return "clique-union";
  return "m-core";
}

int cmd_game(GameArgs a) {
  GraphOptions g = a.graph;
  if (g.family.empty() && g.graph_path.empty() && a.learner == "clique-fiso2" && g.sizes == "arith:1:1") g.sizes = "2";
  const GraphSpec base = load_graph(g, false, default_family_for(a.learner));
  check_window(a.k, a.window);
  const auto learner = make_learner(a.learner, base);
  Json meta{{"learner", learner->name()}, {"graph", to_json(base)}, {"graph_hash", graph_hash(base)}, {"window", a.window}};
  if (auto* at = dynamic_cast<const ATLearner*>(learner.get()))
    meta["bound"] = at->config().s0_edges.size() + at->config().m * at->config().m;

  if (!a.sweep.empty()) {
    const PairList pairs = window_pairs(a.window);
    if (a.sweep == "exhaustive" && pairs.size() > 28)
      throw InvalidArgument("an exhaustive sweep over all orders needs window <= 8; use --sweep sampled");
    if (a.sweep != "exhaustive" && a.sweep != "sampled") throw InvalidArgument("--sweep is exhaustive or sampled");
    std::string out;
    std::size_t worst = 0, targets = 0;
    for_each_permutation(a.k, a.window, [&](const Permutation& h) {
      const PresentedCopy target{base, h};
      const WorstCase wc = a.sweep == "exhaustive" ? worst_case_mistakes(*learner, target, pairs)
                                                   : sampled_worst_case(*learner, target, pairs, a.samples, a.seed);
      worst = std::max(worst, wc.mistakes);
      ++targets;
      out += Json{{"target", to_json(h)}, {"max_mistakes", wc.mistakes}, {"order", pairs_to_json(wc.order)}}.dump() + "\n";
      return true;
    });
    meta["summary"] = true;
    meta["sweep"] = a.sweep;
    meta["k"] = a.k;
    meta["targets"] = targets;
    meta["max_mistakes"] = worst;
    out += meta.dump() + "\n";
    emit(a.common, a.common.format == "json" ? out
                                             : "max mistakes " + std::to_string(worst) + " over " +
                                                   std::to_string(targets) + " targets\n");
    return kOk;
  }

  GameTranscript t;
  if (a.adversary == "halving") {
    meta["k"] = a.k;
    VersionSpaceAdversary adv(base, a.k, a.window);
    t = run_game(*learner, adv, a.max_rounds);
  } else if (a.adversary == "order") {
    PairList order = window_pairs(a.window);
    if (a.order == "shuffle") {
      std::mt19937_64 rng(a.seed);
      deterministic_shuffle(order, rng);
    } else if (a.order != "lex") {
      throw InvalidArgument("--order is lex or shuffle");
    }
    t = run_game(*learner, order, PresentedCopy{base, parse_target(a.target)}, a.max_rounds);
  } else {
    throw InvalidArgument("--adversary is order or halving");
  }
  emit(a.common, a.common.format == "json" ? transcript_jsonl(t, meta)
                                           : std::to_string(t.mistakes) + " mistakes in " +
                                                 std::to_string(t.rounds.size()) + " rounds\n");
  return kOk;
}

struct ReduceArgs {
  CommonOptions common;
  std::string which;
  std::string prefix;
  std::string prefix2;
  std::string prefix_file;
};

std::string describe_staged(const StagedGraph& g) {
  std::vector<std::size_t> degree(g.vertex_count, 0);
  for (const auto& e : g.edges.edges()) ++degree[e.u], ++degree[e.v];
  const auto isolated = std::count(degree.begin(), degree.end(), 0);
  std::ostringstream os;
  os << to_string(g.reduction) << "(" << g.prefix << "): " << g.vertex_count << " vertices, " << g.edges.size()
     << " edges, " << isolated << " isolated";
  if (!g.unused.empty()) os << ", " << g.unused.size() << " unused";
  os << "\n";
  return os.str();
}

int cmd_reduce(const ReduceArgs& a) {
  std::string p = a.prefix;
  if (!a.prefix_file.empty()) {
    std::ifstream in(a.prefix_file);
    if (!in) throw InvalidArgument("cannot open '" + a.prefix_file + "'");
    in >> p;
  }
  GraphSpec graph = GraphSpec::anticlique();
  std::string human;
  if (a.which == "h" || a.which == "f" || a.which == "g") {
    const StagedGraph g = a.which == "h" ? reduction_h(p) : a.which == "f" ? reduction_f(p) : reduction_g(p);
    human = describe_staged(g);
    graph = GraphSpec::staged(g);
  } else if (a.which == "fg") {
    graph = combined_fg(p, a.prefix2);
    human = "f(" + p + ") + g(" + a.prefix2 + ")\n";
  } else if (a.which == "hf") {
    graph = combined_hf(p, a.prefix2);
    human = "h(" + p + ") + f(" + a.prefix2 + ")\n";
  } else {
    throw InvalidArgument("--which is h, f, g, fg or hf");
  }
  emit(a.common, a.common.format == "json" ? canonical_dump(to_json(graph)) + "\n" : human);
  return kOk;
}

struct VerifyArgs {
  std::string file = "-";
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Json doc = read_json(a.file);
  const VerifyResult r = verify_certificate(doc);
  if (!a.quiet) (r.ok ? std::cout : std::cerr) << r.message << "\n";
  return r.ok ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlearn: learnability of graph copies under finite-support permutations"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "place a graph in the four-class landscape");
  add_graph_options(classify_cmd, classify_args.graph);
  add_common_options(classify_cmd, classify_args.common);
  classify_cmd->add_option("--d-max", classify_args.budgets.d_max)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--n-max", classify_args.budgets.n_max)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--window", classify_args.budgets.window)->check(CLI::PositiveNumber);

  VcArgs vc_args;
  auto* vc_cmd = app.add_subcommand("vc", "search for a shattered tuple of pairs");
  add_graph_options(vc_cmd, vc_args.graph);
  add_common_options(vc_cmd, vc_args.common);
  vc_cmd->add_option("--k", vc_args.k, "support bound");
  vc_cmd->add_option("--d", vc_args.d, "tuple size")->check(CLI::PositiveNumber);
  vc_cmd->add_option("--window", vc_args.window);
  vc_cmd->add_option("--pairs", vc_args.pairs, "check this tuple instead of searching, e.g. 0-1,2-3");

  ThresholdArgs th_args;
  auto* th_cmd = app.add_subcommand("thresholds", "search for thresholds");
  add_graph_options(th_cmd, th_args.graph);
  add_common_options(th_cmd, th_args.common);
  th_cmd->add_option("--k", th_args.k, "support bound");
  th_cmd->add_option("--t", th_args.t, "number of thresholds")->check(CLI::PositiveNumber);
  th_cmd->add_option("--window", th_args.window);

  WitnessArgs w_args;
  auto* w_cmd = app.add_subcommand("witness", "search for a lemma56, almost-random or induced-pattern witness");
  add_graph_options(w_cmd, w_args.graph);
  add_common_options(w_cmd, w_args.common);
  w_cmd->add_option("--kind", w_args.kind)->check(CLI::IsMember({"lemma56", "almost-random", "induced"}));
  w_cmd->add_option("--n", w_args.n, "level n");
  w_cmd->add_option("--pattern", w_args.pattern)->check(CLI::IsMember({"md", "nd", "comd"}));
  w_cmd->add_option("--d", w_args.d, "pattern parameter")->check(CLI::PositiveNumber);
  w_cmd->add_option("--window", w_args.window);

  GameArgs g_args;
  auto* g_cmd = app.add_subcommand("game", "play the online learning game");
  add_graph_options(g_cmd, g_args.graph);
  add_common_options(g_cmd, g_args.common);
  g_cmd->add_option("--learner", g_args.learner)
      ->check(CLI::IsMember({"at", "clique-fiso2", "constant-zero", "constant-one", "copy"}));
  g_cmd->add_option("--adversary", g_args.adversary)->check(CLI::IsMember({"order", "halving"}));
  g_cmd->add_option("--target", g_args.target, "identity | a-b | x>y,...");
  g_cmd->add_option("--order", g_args.order)->check(CLI::IsMember({"lex", "shuffle"}));
  g_cmd->add_option("--sweep", g_args.sweep, "exhaustive | sampled: every target in the windowed class");
  g_cmd->add_option("--samples", g_args.samples);
  g_cmd->add_option("--seed", g_args.seed);
  g_cmd->add_option("--k", g_args.k, "support bound of the target class");
  g_cmd->add_option("--window", g_args.window);
  g_cmd->add_option("--max-rounds", g_args.max_rounds);

  ReduceArgs r_args;
  auto* r_cmd = app.add_subcommand("reduce", "run a staged reduction on a prefix");
  add_common_options(r_cmd, r_args.common);
  r_cmd->add_option("--which", r_args.which)->required()->check(CLI::IsMember({"h", "f", "g", "fg", "hf"}));
  r_cmd->add_option("--prefix", r_args.prefix, "0/1 string");
  r_cmd->add_option("--prefix2", r_args.prefix2, "second prefix for fg and hf");
  r_cmd->add_option("--prefix-file", r_args.prefix_file);

  VerifyArgs v_args;
  auto* v_cmd = app.add_subcommand("verify", "re-check a witness or report file");
  v_cmd->add_option("file", v_args.file, "certificate file ('-' for stdin)");
  v_cmd->add_flag("--quiet,-q", v_args.quiet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_args);
    if (*vc_cmd) return cmd_vc(vc_args);
    if (*th_cmd) return cmd_thresholds(th_args);
    if (*w_cmd) return cmd_witness(w_args);
    if (*g_cmd) return cmd_game(g_args);
    if (*r_cmd) return cmd_reduce(r_args);
    if (*v_cmd) return cmd_verify(v_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
