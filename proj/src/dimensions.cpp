#include "graphlearn/dimensions.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "graphlearn/parallel.hpp"

namespace graphlearn {

Labels configuration_of(std::uint64_t mask, std::size_t d) {
  Labels out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = (mask >> (d - 1 - i)) & 1U;
  return out;
}

Labels threshold_configuration(std::size_t i, std::size_t m) {
  Labels out(m);
  for (std::size_t j = 1; j <= m; ++j) out[j - 1] = i <= j;
  return out;
}

namespace {

void check_pairs(const PairList& pairs, Vertex window) {
  std::set<VertexPair> seen;
  for (const auto& p : pairs) {
    if (p.u >= window || p.v >= window) throw InvalidArgument("pair outside the window");
    if (!seen.insert(p.normalized()).second) throw InvalidArgument("pairs must be distinct");
  }
}

bool too_many_configurations(std::size_t d, std::size_t k, Vertex window) {
  return d >= 64 || (std::uint64_t{1} << d) > class_size(k, window);
}

/// Realizers for every configuration of pairs, or nullopt at the first unrealizable one.
std::optional<std::vector<Permutation>> all_configurations(const ConfigurationRealizer& r, const PairList& pairs,
                                                           Meter& meter) {
  const std::size_t d = pairs.size();
  std::vector<Permutation> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    auto h = r.realize(pairs, configuration_of(mask, d), &meter);
    if (!h) return std::nullopt;
    out.push_back(std::move(*h));
  }
  return out;
}

/// Window pairs whose label differs between at least two members of the class.
PairList informative_pairs(const ConfigurationRealizer& r, Meter& meter) {
  PairList out;
  for (const auto& p : window_pairs(r.window())) {
    const PairList one{p};
    const Labels flipped{static_cast<std::uint8_t>(!r.adjacency().edge(p.u, p.v))};
    if (r.realize(one, flipped, &meter)) out.push_back(p);
  }
  return out;
}

SearchOptions remaining(const SearchOptions& opts, const Meter& spent) {
  SearchOptions out = opts;
  out.ceiling = opts.ceiling - std::min(opts.ceiling, spent.used());
  return out;
}

}  // namespace

std::optional<ShatterWitness> shatters(const GraphSpec& base, std::size_t k, const PairList& pairs, Vertex window,
                                       const SearchOptions& opts) {
  check_pairs(pairs, window);
  if (too_many_configurations(pairs.size(), k, window)) return std::nullopt;
  ConfigurationRealizer r(base, k, window);
  Meter meter(opts.ceiling);
  auto realizers = all_configurations(r, pairs, meter);
  if (!realizers) return std::nullopt;
  return ShatterWitness{pairs, std::move(*realizers)};
}

std::optional<ShatterWitness> vc_lower_bound(const GraphSpec& base, std::size_t k, std::size_t d, Vertex window,
                                             const SearchOptions& opts) {
  if (d < 1) throw InvalidArgument("d must be at least 1");
  if (too_many_configurations(d, k, window)) return std::nullopt;
  const ConfigurationRealizer r(base, k, window);
  Meter setup(opts.ceiling);
  const PairList candidates = informative_pairs(r, setup);
  if (candidates.size() < d) return std::nullopt;

  return first_success<ShatterWitness>(
      candidates.size() - d + 1, remaining(opts, setup), [&](std::size_t first, Meter& meter) {
        PairList tuple{candidates[first]};
        std::vector<std::size_t> index{first};
        std::optional<ShatterWitness> found;
        // Extend a shattered prefix one pair at a time, in increasing index order.
        auto extend = [&](auto&& self) -> bool {
          if (tuple.size() == d) return true;
          const std::size_t need = d - tuple.size();
          for (std::size_t next = index.back() + 1; next + need <= candidates.size(); ++next) {
            tuple.push_back(candidates[next]);
            index.push_back(next);
            auto realizers = all_configurations(r, tuple, meter);
            if (realizers) {
              if (tuple.size() == d) {
                found = ShatterWitness{tuple, std::move(*realizers)};
                return true;
              }
              if (self(self)) return true;
            }
            tuple.pop_back();
            index.pop_back();
          }
          return false;
        };
        if (d == 1) {
          auto realizers = all_configurations(r, tuple, meter);
          if (realizers) found = ShatterWitness{tuple, std::move(*realizers)};
          return found;
        }
        extend(extend);
        return found;
      });
}

std::optional<ThresholdWitness> contains_thresholds(const GraphSpec& base, std::size_t k, std::size_t t,
                                                    Vertex window, const SearchOptions& opts) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (t == 1) return ThresholdWitness{{}, {Permutation::identity()}};
  if (t > class_size(k, window)) return std::nullopt;
  const ConfigurationRealizer r(base, k, window);
  Meter setup(opts.ceiling);
  const PairList candidates = informative_pairs(r, setup);
  if (candidates.size() < t - 1) return std::nullopt;

  // Hypotheses H_1..H_{m+1} for the current m-pair prefix.
  auto staircase = [&](const PairList& prefix, Meter& meter) -> std::optional<std::vector<Permutation>> {
    const std::size_t m = prefix.size();
    std::vector<Permutation> hyps;
    for (std::size_t i = 1; i <= m + 1; ++i) {
      auto h = r.realize(prefix, threshold_configuration(i, m), &meter);
      if (!h) return std::nullopt;
      hyps.push_back(std::move(*h));
    }
    return hyps;
  };

  return first_success<ThresholdWitness>(
      candidates.size(), remaining(opts, setup), [&](std::size_t first, Meter& meter) {
        PairList seq{candidates[first]};
        std::vector<std::uint8_t> used(candidates.size(), 0);
        used[first] = 1;
        std::optional<ThresholdWitness> found;
        auto grow = [&](auto&& self) -> bool {
          auto hyps = staircase(seq, meter);
          if (!hyps) return false;
          if (seq.size() == t - 1) {
            found = ThresholdWitness{seq, std::move(*hyps)};
            return true;
          }
          for (std::size_t next = 0; next < candidates.size(); ++next) {
            if (used[next]) continue;
            used[next] = 1;
            seq.push_back(candidates[next]);
            if (self(self)) return true;
            seq.pop_back();
            used[next] = 0;
          }
          return false;
        };
        grow(grow);
        return found;
      });
}

std::optional<Lemma56Witness> lemma56_witness(const GraphSpec& base, std::size_t n, Vertex window,
                                              const SearchOptions& opts) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const std::size_t len = 2 * n + 1;
  if (window < len) return std::nullopt;
  const WindowAdjacency adj(base, window);

  // Position p holds u_{n-p/2} for even p and v_{n-(p-1)/2} for odd p.
  auto is_u = [](std::size_t p) { return p % 2 == 0; };
  auto level = [n](std::size_t p) { return n - p / 2; };

  return first_success<Lemma56Witness>(window, opts, [&](std::size_t first, Meter& meter) {
    std::vector<Vertex> seq{static_cast<Vertex>(first)};
    std::vector<std::uint8_t> taken(window, 0);
    taken[first] = 1;
    auto fits = [&](std::size_t p, Vertex x) {
      for (std::size_t q = 0; q < p; ++q) {
        if (is_u(p) == is_u(q)) continue;
        meter.charge();
        const std::size_t i = is_u(p) ? level(p) : level(q);
        const std::size_t j = is_u(p) ? level(q) : level(p);
        if (adj.edge(x, seq[q]) != (j <= i)) return false;
      }
      return true;
    };
    auto place = [&](auto&& self) -> bool {
      const std::size_t p = seq.size();
      if (p == len) return true;
      for (Vertex x = 0; x < window; ++x) {
        if (taken[x] || !fits(p, x)) continue;
        taken[x] = 1;
        seq.push_back(x);
        if (self(self)) return true;
        seq.pop_back();
        taken[x] = 0;
      }
      return false;
    };
    if (!place(place)) return std::optional<Lemma56Witness>{};
    Lemma56Witness w;
    w.u.assign(n + 1, 0);
    w.v.assign(n, 0);
    for (std::size_t p = 0; p < len; ++p) {
      if (is_u(p)) w.u[level(p)] = seq[p];
      else w.v[level(p) - 1] = seq[p];
    }
    return std::optional<Lemma56Witness>{std::move(w)};
  });
}

const char* to_string(ImplicationCheck::Status status) {
  switch (status) {
    case ImplicationCheck::Status::PremiseUnmet: return "premise unmet, implication vacuous";
    case ImplicationCheck::Status::PremiseInconclusive: return "premise inconclusive (budget)";
    case ImplicationCheck::Status::ConclusionWitnessed: return "both witnessed";
    case ImplicationCheck::Status::ConclusionInconclusive: return "inconclusive (window too small)";
  }
  return "?";
}

namespace {

std::size_t saturating_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(out, base, &out)) return std::numeric_limits<std::size_t>::max();
  return out;
}

template <class Premise, class Conclusion>
ImplicationCheck run_implication(std::size_t premise_size, std::size_t conclusion_size, Premise premise,
                                 Conclusion conclusion) {
  ImplicationCheck out;
  out.premise_size = premise_size;
  out.conclusion_size = conclusion_size;
  try {
    if (!premise()) {
      out.status = ImplicationCheck::Status::PremiseUnmet;
      return out;
    }
  } catch (const BudgetExceeded& e) {
    out.status = ImplicationCheck::Status::PremiseInconclusive;
    out.detail = e.what();
    return out;
  }
  try {
    out.status = conclusion() ? ImplicationCheck::Status::ConclusionWitnessed
                              : ImplicationCheck::Status::ConclusionInconclusive;
  } catch (const BudgetExceeded& e) {
    out.status = ImplicationCheck::Status::ConclusionInconclusive;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

CollapseReport check_collapse_implication(const GraphSpec& base, std::size_t j, std::size_t k, Vertex window_small,
                                          Vertex window_large, const SearchOptions& opts) {
  if (j < 1 || k < 2) throw InvalidArgument("collapse check needs j >= 1 and k >= 2");
  CollapseReport report;
  const std::size_t d = 2 * (k + 1) * k * j;
  report.vc = run_implication(
      d, j, [&] { return vc_lower_bound(base, k, d, window_small, opts).has_value(); },
      [&] { return vc_lower_bound(base, 2, j, window_large, opts).has_value(); });

  std::size_t t = saturating_power(j + 1, k + 1);
  if (__builtin_mul_overflow(t, 2 * k, &t) || t == std::numeric_limits<std::size_t>::max())
    t = std::numeric_limits<std::size_t>::max();
  else
    t += 1;
  report.thresholds = run_implication(
      t, j + 1, [&] { return contains_thresholds(base, k, t, window_small, opts).has_value(); },
      [&] { return contains_thresholds(base, 2, j + 1, window_large, opts).has_value(); });
  return report;
}

bool validate(const GraphSpec& base, const ShatterWitness& w, std::size_t k, Vertex window) {
  const std::size_t d = w.pairs.size();
  if (d >= 64 || w.realizers.size() != (std::size_t{1} << d)) return false;
  try {
    check_pairs(w.pairs, window);
  } catch (const InvalidArgument&) {
    return false;
  }
  const WindowedClass cls{base, k, window};
  for (std::uint64_t mask = 0; mask < w.realizers.size(); ++mask) {
    if (!cls.contains(w.realizers[mask])) return false;
    if (!realizes(base, w.realizers[mask], w.pairs, configuration_of(mask, d))) return false;
  }
  return true;
}

bool validate(const GraphSpec& base, const ThresholdWitness& w, std::size_t k, Vertex window) {
  const std::size_t m = w.pairs.size();
  if (w.hypotheses.size() != m + 1) return false;
  try {
    check_pairs(w.pairs, window);
  } catch (const InvalidArgument&) {
    return false;
  }
  const WindowedClass cls{base, k, window};
  for (std::size_t i = 1; i <= m + 1; ++i) {
    if (!cls.contains(w.hypotheses[i - 1])) return false;
    if (!realizes(base, w.hypotheses[i - 1], w.pairs, threshold_configuration(i, m))) return false;
  }
  return true;
}

bool validate(const GraphSpec& base, const Lemma56Witness& w) {
  const std::size_t n = w.v.size();
  if (n < 1 || w.u.size() != n + 1) return false;
  std::set<Vertex> all(w.u.begin(), w.u.end());
  all.insert(w.v.begin(), w.v.end());
  if (all.size() != 2 * n + 1) return false;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (base.edge(w.u[i], w.v[j - 1]) != (j <= i)) return false;
  return true;
}

}  // namespace graphlearn
