#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcvote/orders.hpp"
#include "qcvote/qcv.hpp"

using namespace qcvote;

namespace {

LinearOrder order(std::initializer_list<int> ranking) {
  return make_order(std::vector<int>(ranking));
}

// The three-voter Condorcet cycle: x>y>z, y>z>x, z>x>y.
ClassicalProfile cycle_profile() {
  return make_profile({order({0, 1, 2}), order({1, 2, 0}), order({2, 0, 1})});
}

ClassicalProfile unanimous_xyz() {
  return make_profile({order({0, 1, 2}), order({0, 1, 2}), order({0, 1, 2})});
}

}  // namespace

TEST_CASE("Lehmer indexing of the m=3 preference basis") {
  // Enumerating all 6 permutations in factoradic order fixes the basis:
  // 0:xyz 1:xzy 2:yxz 3:yzx 4:zxy 5:zyx.
  CHECK(order_to_index(order({0, 1, 2})) == 0);
  CHECK(order_to_index(order({0, 2, 1})) == 1);
  CHECK(order_to_index(order({1, 0, 2})) == 2);
  CHECK(order_to_index(order({1, 2, 0})) == 3);
  CHECK(order_to_index(order({2, 0, 1})) == 4);
  CHECK(order_to_index(order({2, 1, 0})) == 5);

  CHECK(index_to_order(0, 3) == order({0, 1, 2}));
  CHECK(index_to_order(1, 3) == order({0, 2, 1}));
  CHECK(index_to_order(5, 3) == order({2, 1, 0}));
}

TEST_CASE("index round-trip is exhaustive for m <= 5 and duplicate-free") {
  for (int m = 1; m <= 5; ++m) {
    std::set<std::vector<int>> seen;
    for (std::int64_t i = 0; i < factorial(m); ++i) {
      const LinearOrder o = index_to_order(i, m);
      CHECK(order_to_index(o) == i);
      seen.insert(o.ranking);
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == factorial(m));
  }
  CHECK_THROWS_AS(index_to_order(6, 3), argument_error);
  CHECK_THROWS_AS(index_to_order(-1, 3), argument_error);
}

TEST_CASE("make_order rejects non-permutations") {
  CHECK_THROWS_AS(make_order({0, 0, 1}), argument_error);
  CHECK_THROWS_AS(make_order({0, 3, 1}), argument_error);
  CHECK_THROWS_AS(make_order({}), argument_error);
}

TEST_CASE("pairwise tallies") {
  CHECK(pairwise_tally(cycle_profile(), 0, 1) == 2);
  CHECK(pairwise_tally(unanimous_xyz(), 0, 1) == 3);
  CHECK(pairwise_tally(unanimous_xyz(), 1, 0) == 0);
  CHECK_THROWS_AS(pairwise_tally(cycle_profile(), 1, 1), argument_error);

  // tally(x,y) + tally(y,x) = n for every pair.
  const ClassicalProfile p = cycle_profile();
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      CHECK(pairwise_tally(p, x, y) + pairwise_tally(p, y, x) == 3);
    }
  }
}

TEST_CASE("Condorcet scores") {
  CHECK(condorcet_scores(cycle_profile()) == std::vector<int>{1, 1, 1});
  CHECK(condorcet_scores(unanimous_xyz()) == std::vector<int>{2, 1, 0});
  // Two voters tied on (x,y): the tie counts as a win for both.
  const ClassicalProfile two =
      make_profile({order({0, 1, 2}), order({1, 0, 2})});
  CHECK(condorcet_scores(two) == std::vector<int>{2, 2, 0});
}

TEST_CASE("weak order from scores") {
  CHECK(weak_order_from_scores({1, 1, 1}) == WeakOrder{{{0, 1, 2}}});
  CHECK(weak_order_from_scores({2, 1, 0}) == WeakOrder{{{0}, {1}, {2}}});
  CHECK(weak_order_from_scores({2, 2, 0}) == WeakOrder{{{0, 1}, {2}}});
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions(WeakOrder{{{0, 1, 2}}}).size() == 6);
  CHECK(linear_extensions(WeakOrder{{{0}, {1}, {2}}}) ==
        std::vector<LinearOrder>{order({0, 1, 2})});
  CHECK(linear_extensions(WeakOrder{{{0, 1}, {2}}}) ==
        std::vector<LinearOrder>{order({0, 1, 2}), order({1, 0, 2})});
}

TEST_CASE("linear extension count, ordering and group dominance") {
  auto rng = seeded_rng(31, "extensions");
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    std::vector<int> scores;
    for (int c = 0; c < m; ++c) {
      scores.push_back(static_cast<int>(rng() % 3));
    }
    const WeakOrder w = weak_order_from_scores(scores);
    const auto extensions = linear_extensions(w);

    std::int64_t expected = 1;
    for (const auto& g : w.tie_groups) {
      expected *= factorial(static_cast<int>(g.size()));
    }
    CHECK(static_cast<std::int64_t>(extensions.size()) == expected);

    // No duplicates, sorted by Lehmer index.
    for (std::size_t i = 1; i < extensions.size(); ++i) {
      CHECK(order_to_index(extensions[i - 1]) < order_to_index(extensions[i]));
    }
    // Higher group beats lower group in every extension.
    for (const auto& ext : extensions) {
      for (std::size_t ga = 0; ga < w.tie_groups.size(); ++ga) {
        for (std::size_t gb = ga + 1; gb < w.tie_groups.size(); ++gb) {
          for (int a : w.tie_groups[ga]) {
            for (int b : w.tie_groups[gb]) {
              CHECK(ext.ranks_above(a, b));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sum of Condorcet scores covers every pair") {
  auto rng = seeded_rng(37, "score-sum");
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<LinearOrder> orders;
    for (int v = 0; v < n; ++v) {
      orders.push_back(index_to_order(
          static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(factorial(m))),
          m));
    }
    const auto scores = condorcet_scores(make_profile(orders));
    int total = 0;
    for (int s : scores) total += s;
    CHECK(total >= m * (m - 1) / 2);
  }
}

TEST_CASE("condorcet_scores is anonymous and neutral") {
  auto rng = seeded_rng(41, "anon-neutral");
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3;
    const int n = 3;
    std::vector<LinearOrder> orders;
    for (int v = 0; v < n; ++v) {
      orders.push_back(index_to_order(static_cast<std::int64_t>(rng() % 6), m));
    }
    const auto base_scores = condorcet_scores(make_profile(orders));

    // Anonymity: rotate the voter list.
    std::vector<LinearOrder> shuffled = orders;
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    CHECK(condorcet_scores(make_profile(shuffled)) == base_scores);

    // Neutrality: relabel candidates via a random permutation sigma.
    const LinearOrder sigma =
        index_to_order(static_cast<std::int64_t>(rng() % 6), m);
    std::vector<LinearOrder> relabeled;
    for (const auto& o : orders) {
      std::vector<int> r;
      for (int c : o.ranking) {
        r.push_back(sigma.ranking[static_cast<std::size_t>(c)]);
      }
      relabeled.push_back(make_order(std::move(r)));
    }
    const auto relabeled_scores = condorcet_scores(make_profile(relabeled));
    for (int c = 0; c < m; ++c) {
      CHECK(relabeled_scores[static_cast<std::size_t>(
                sigma.ranking[static_cast<std::size_t>(c)])] ==
            base_scores[static_cast<std::size_t>(c)]);
    }
  }
}

TEST_CASE("candidate sets") {
  CHECK(CandidateSet::default_labels(3).labels ==
        std::vector<std::string>{"x", "y", "z"});
  CHECK(CandidateSet::default_labels(4).labels ==
        std::vector<std::string>{"c1", "c2", "c3", "c4"});
  CHECK_THROWS_AS(CandidateSet::from_labels({"x"}), argument_error);
  CHECK_THROWS_AS(CandidateSet::from_labels({"x", "x"}), argument_error);
  const CandidateSet cs = CandidateSet::default_labels(3);
  CHECK(cs.index_of("y") == 1);
  CHECK(cs.index_of("w") == -1);
  CHECK(order({2, 0, 1}).label(cs) == "z>x>y");
  CHECK(WeakOrder{{{0, 1}, {2}}}.label(cs) == "x ~ y > z");
}
