#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphlearn/budget.hpp"
#include "graphlearn/dimensions.hpp"

namespace graphlearn {

enum class PatternKind { Md, Nd, CoMd };

const char* to_string(PatternKind kind);
PatternKind pattern_kind_from_string(const std::string& name);

/// The finite pattern graph on vertices 0..size-1. N_d is a family: centre 0
/// is joined to 1..d and not to d+1..2d, and pairs away from the centre are free.
struct Pattern {
  PatternKind kind;
  std::size_t d;
  Vertex size;
  EdgeSet edges;

  bool constrains(Vertex u, Vertex v) const { return kind != PatternKind::Nd || u == 0 || v == 0; }
};

Pattern make_pattern(PatternKind kind, std::size_t d);

/// embedding[i] is the image of pattern vertex i.
using Embedding = std::vector<Vertex>;

/// First injective induced embedding of the pattern into base restricted to
/// [0, W), in lexicographic order of the image tuple.
std::optional<Embedding> find_induced(const GraphSpec& base, const Pattern& pattern, Vertex window,
                                      const SearchOptions& opts = {});
bool validate_embedding(const GraphSpec& base, const Pattern& pattern, const Embedding& embedding);

/// A = {a_0 < ... < a_{n-1}} and realizers[mask] = z, adjacent to a_i exactly
/// when bit i of mask is set, with z outside A.
struct AlmostRandomWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> realizers;
};

/// First n-subset A of [0, W) (lexicographic) all of whose bipartitions are
/// realized by some z in [0, W) \ A; each realizer is the smallest such z.
std::optional<AlmostRandomWitness> almost_random_witness(const GraphSpec& base, std::size_t n, Vertex window,
                                                         const SearchOptions& opts = {});
bool validate(const GraphSpec& base, const AlmostRandomWitness& w);

enum class Verdict { OnlineLearnable, WeaklyOnlineNotOnline, WeaklyPACNotWeaklyOnline, AbsolutelyNonLearnable, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& name);

/// "structural": follows from how the graph is built; "exact": a search at
/// every requested level plus a structural hook; "evidence": budgeted searches only.
enum class Basis { Structural, Exact, Evidence, None };

const char* to_string(Basis b);

struct Budgets {
  std::size_t d_max = 3;
  std::size_t n_max = 3;
  Vertex window = 64;
};

template <class W>
struct LevelResult {
  std::size_t level = 0;
  std::optional<W> witness;  // nullopt: none within the window
};

struct ClassificationReport {
  GraphSpec graph;
  Budgets budgets;
  std::optional<AutoTrivialForm> at_form;  // set when AT structure is given
  bool known_not_at = false;
  std::map<PatternKind, std::vector<LevelResult<Embedding>>> induced;
  std::vector<LevelResult<AlmostRandomWitness>> almost_random;
  std::vector<LevelResult<Lemma56Witness>> lemma56;
  Verdict verdict = Verdict::Inconclusive;
  Basis basis = Basis::None;
  std::vector<std::string> notes;
};

/// Levels are searched in increasing order and each search stops at its first
/// failure, since failure at one level implies failure at every higher level
/// within the same window.
ClassificationReport classify(const GraphSpec& graph, const Budgets& budgets = {}, const SearchOptions& opts = {});

/// Re-checks every certificate embedded in the report against its graph.
bool validate(const ClassificationReport& report);

}  // namespace graphlearn
