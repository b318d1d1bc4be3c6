#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "graphlearn/classes.hpp"
#include "reference.hpp"

using namespace graphlearn;

namespace {

const GraphSpec m2 = GraphSpec::m_core(2);

std::vector<bool> bits(const Labels& l) { return {l.begin(), l.end()}; }

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(enumerate_permutations(0, 5) == std::vector<Permutation>{Permutation::identity()});
  CHECK(enumerate_permutations(2, 3).size() == 4);
  CHECK(enumerate_permutations(3, 3).size() == 6);
  CHECK(enumerate_permutations(2, 3)[1] == Permutation::transposition(0, 1));
  CHECK_THROWS_AS(enumerate_permutations(4, 3), InvalidArgument);
}

TEST_CASE("enumeration agrees with filtering every bijection of the window") {
  for (Vertex W = 0; W <= 6; ++W)
    for (std::size_t k = 0; k <= std::min<std::size_t>(4, W); ++k) {
      const auto listed = enumerate_permutations(k, W);
      const auto brute = ref::tables(k, W);
      CHECK(listed.size() == brute.size());
      CHECK(class_size(k, W) == brute.size());

      std::set<Permutation> seen(listed.begin(), listed.end());
      CHECK(seen.size() == listed.size());
      for (const auto& t : brute) CHECK(seen.count(t.to_permutation()) == 1);

      REQUIRE_FALSE(listed.empty());
      CHECK(listed.front().is_identity());
      // Support size never decreases, and within one size the supports are
      // in lexicographic order.
      for (std::size_t i = 1; i < listed.size(); ++i) {
        const auto a = listed[i - 1].support(), b = listed[i].support();
        CHECK(a.size() <= b.size());
        if (a.size() == b.size()) CHECK(a <= b);
      }
    }
}

TEST_CASE("derangement counts") {
  for (std::size_t j = 0; j <= 7; ++j) CHECK(derangements(j) == ref::derangements_by_filter(j));
  CHECK(derangements(20) == 895014631192902121ULL);
  CHECK(derangements(40) == UINT64_MAX);
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j <= 3; ++j) sum += ref::binomial(8, j) * derangements(j);
  CHECK(class_size(3, 8) == sum);
  CHECK(class_size(3, 8) == 141);
}

TEST_CASE("realizing configurations") {
  const PairList pairs{{0, 1}, {2, 3}};
  const auto id = realize_configuration(m2, pairs, labels_from_string("11"), 0, 8);
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  // A single transposition moving one endpoint of the first edge out of the way
  // already realizes "01"; the block swap {0,1} <-> {4,5} does too but moves four points.
  const auto h = realize_configuration(m2, pairs, labels_from_string("01"), 4, 8);
  REQUIRE(h.has_value());
  CHECK(realizes(m2, *h, pairs, labels_from_string("01")));
  CHECK(h->support_size() == 2);
  CHECK(*h == Permutation::transposition(1, 4));
  const Permutation block({{0, 4}, {4, 0}, {1, 5}, {5, 1}});
  CHECK(realizes(m2, block, pairs, labels_from_string("01")));

  CHECK_FALSE(realize_configuration(GraphSpec::anticlique(), PairList{{0, 1}}, labels_from_string("1"), 3, 6).has_value());
  CHECK_THROWS_AS(realize_configuration(m2, pairs, labels_from_string("1"), 2, 8), InvalidArgument);
  CHECK_THROWS_AS(realize_configuration(m2, PairList{{0, 9}}, labels_from_string("1"), 2, 8), InvalidArgument);
  CHECK_THROWS_AS(labels_from_string("012"), InvalidArgument);
}

TEST_CASE("realizer existence and minimum support match the brute-force class") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 400; ++n) {
    const GraphSpec g = gen::random_graph(rng, 1);
    const Vertex W = 3 + gen::below(rng, 4);
    const std::size_t k = gen::below(rng, W + 1);
    const auto cls = ref::tables(k, W);
    const ConfigurationRealizer realizer(g, k, W);
    PairList pairs;
    Labels tau;
    const std::size_t len = 1 + gen::below(rng, 3);
    for (std::size_t i = 0; i < len; ++i) {
      Vertex u = gen::below(rng, W), v = gen::below(rng, W);
      if (u == v) v = (u + 1) % W;
      pairs.push_back({u, v});
      tau.push_back(gen::coin(rng));
    }
    const auto h = realizer.realize(pairs, tau);
    const auto best = ref::min_realizer_support(g, cls, pairs, bits(tau));
    REQUIRE(h.has_value() == best.has_value());
    if (h) {
      CHECK(realizes(g, *h, pairs, tau));
      CHECK(h->support_size() == *best);
      CHECK(WindowedClass{g, k, W}.contains(*h));
    }
  }
}

TEST_CASE("identity realizes exactly the base configuration") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    const GraphSpec g = gen::random_graph(rng);
    const PairList pairs{{0, 1}, {1, 2}, {0, 3}};
    Labels own;
    for (const auto& p : pairs) own.push_back(g.edge(p.u, p.v));
    CHECK(realizes(g, Permutation::identity(), pairs, own));
    const auto h = realize_configuration(g, pairs, own, 4, 6);
    REQUIRE(h.has_value());
    CHECK(h->is_identity());
    Labels other = own;
    other[n % 3] ^= 1;
    CHECK_FALSE(realizes(g, Permutation::identity(), pairs, other));
  }
}

TEST_CASE("realizability is monotone in k and W") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 300; ++n) {
    const GraphSpec g = gen::random_graph(rng, 1);
    const Vertex W = 3 + gen::below(rng, 4);
    const std::size_t k = gen::below(rng, W + 1);
    const PairList pairs{{0, 1}, {1, 2}};
    const Labels tau{std::uint8_t(gen::coin(rng)), std::uint8_t(gen::coin(rng))};
    const auto small = realize_configuration(g, pairs, tau, k, W);
    if (!small) continue;
    const Vertex W2 = W + gen::below(rng, 3);
    const std::size_t k2 = std::min<std::size_t>(W2, k + gen::below(rng, 3));
    const auto large = realize_configuration(g, pairs, tau, k2, W2);
    REQUIRE(large.has_value());
    CHECK(large->support_size() <= small->support_size());
    CHECK(WindowedClass{g, k2, W2}.contains(*small));
  }
}

TEST_CASE("for_each_permutation stops on request") {
  std::size_t seen = 0;
  for_each_permutation(3, 6, [&](const Permutation&) { return ++seen < 10; });
  CHECK(seen == 10);
}
