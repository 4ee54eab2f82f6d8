#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balviz/balance.hpp"
#include "balviz/signed_graph.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace balviz;

namespace {

// Number of negative edges along the witness cycle, closing edge included.
int witness_negatives(const SignedGraph& g, const std::vector<int>& cycle) {
  REQUIRE(cycle.size() >= 3);
  int negatives = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % cycle.size()];
    const int sign = g.sign_of(a, b);
    REQUIRE(sign != 0);  // consecutive witness nodes must be adjacent
    if (sign < 0) ++negatives;
  }
  return negatives;
}

}  // namespace

TEST_CASE("switching test on the (+,+,-) triangle") {
  const SignedGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  const SwitchingResult r = switching_balance_test(g);
  CHECK_FALSE(r.is_balanced);
  REQUIRE(r.witness_cycle.size() == 3);
  CHECK(witness_negatives(g, r.witness_cycle) == 1);
  std::vector<int> sorted = r.witness_cycle;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2});
}

TEST_CASE("switching test on a balanced 4-cycle (+,+,-,-)") {
  const SignedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, -1}, {0, 3, -1}});
  const SwitchingResult r = switching_balance_test(g);
  CHECK(r.is_balanced);
  REQUIRE(r.assignment.size() == 4);
  CHECK(frustration_against(g, r.assignment).positive == 0);
  CHECK(frustration_against(g, r.assignment).negative == 0);
}

TEST_CASE("switching test recovers a planted two-faction split") {
  // all positive inside {0,1,2} and {3,4}, all negative across
  std::vector<SignedEdge> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      const bool same = (u < 3) == (v < 3);
      edges.push_back({u, v, same ? 1 : -1});
    }
  }
  const SignedGraph g(5, std::move(edges));
  const SwitchingResult r = switching_balance_test(g);
  CHECK(r.is_balanced);
  // assignment equals the planted sets up to a global flip
  const int root = r.assignment[0];
  for (int u = 0; u < 5; ++u) {
    CHECK(r.assignment[static_cast<size_t>(u)] == (u < 3 ? root : -root));
  }
}

TEST_CASE("switching test rejects disconnected input") {
  const SignedGraph g(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(switching_balance_test(g), std::invalid_argument);
}

TEST_CASE("frustration_against counts disagreeing edges") {
  const SignedGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  SUBCASE("all-in-one assignment isolates the negative edge") {
    const std::vector<int> all_same{1, 1, 1};
    const FrustrationCounts c = frustration_against(g, all_same);
    CHECK(c.positive == 0);
    CHECK(c.negative == 1);
  }
  SUBCASE("splitting node 1 away frustrates one positive edge") {
    // (0,1,+) crosses; (0,2,+) internal; (1,2,-) crosses, so it is fine
    const std::vector<int> split{1, -1, 1};
    const FrustrationCounts c = frustration_against(g, split);
    CHECK(c.positive == 1);
    CHECK(c.negative == 0);
  }
  SUBCASE("no assignment frustrates exactly one positive and the negative") {
    // with the negative edge internal (s1 == s2), both positives cross or
    // none does
    for (int s0 : {-1, 1}) {
      for (int s1 : {-1, 1}) {
        const FrustrationCounts c =
            frustration_against(g, std::vector<int>{s0, s1, s1});
        CHECK(((c.positive == 2 && c.negative == 1) ||
               (c.positive == 0 && c.negative == 1)));
      }
    }
  }
  SUBCASE("wrong length or entries rejected") {
    CHECK_THROWS_AS(frustration_against(g, std::vector<int>{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(frustration_against(g, std::vector<int>{1, 0, 1}),
                    std::invalid_argument);
  }
}

TEST_CASE("triangle census") {
  SUBCASE("single unbalanced triangle") {
    const SignedGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
    const TriangleCounts c = triangle_census(g);
    CHECK(c.total == 1);
    CHECK(c.unbalanced == 1);
    CHECK(c.ratio() == 1.0);
  }
  SUBCASE("all-positive K4") {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) edges.push_back({u, v, 1});
    }
    const TriangleCounts c = triangle_census(SignedGraph(4, std::move(edges)));
    CHECK(c.total == 4);
    CHECK(c.unbalanced == 0);
  }
  SUBCASE("triangle-free graph has ratio 0") {
    const SignedGraph g(3, {{0, 1, 1}, {1, 2, -1}});
    CHECK(triangle_census(g).total == 0);
    CHECK(triangle_census(g).ratio() == 0.0);
  }
}

TEST_CASE("triangle census agrees with brute force on random graphs") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 5);  // n <= 7
    const SignedGraph g =
        testsupport::random_connected_signed_graph(gen, n, 0.5, 0.4);
    const TriangleCounts fast = triangle_census(g);
    const TriangleCounts slow = testsupport::brute_force_triangles(g);
    CHECK(fast.total == slow.total);
    CHECK(fast.unbalanced == slow.unbalanced);
  }
}

TEST_CASE("triangle census is invariant under node relabeling") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 5);
    const SignedGraph g =
        testsupport::random_connected_signed_graph(gen, n, 0.5, 0.4);

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), gen);

    std::vector<SignedEdge> relabeled;
    for (const auto& e : g.edges()) {
      relabeled.push_back({perm[static_cast<size_t>(e.u)],
                           perm[static_cast<size_t>(e.v)], e.sign});
    }
    const SignedGraph h(n, std::move(relabeled));
    const TriangleCounts a = triangle_census(g);
    const TriangleCounts b = triangle_census(h);
    CHECK(a.total == b.total);
    CHECK(a.unbalanced == b.unbalanced);
  }
}

TEST_CASE("cycle oracle basics") {
  CHECK_FALSE(cycle_oracle(SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}})));
  // trees have no cycles
  CHECK(cycle_oracle(SignedGraph(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, 1}})));
  CHECK_THROWS_AS(cycle_oracle(SignedGraph(20, {}), 12), std::invalid_argument);
}

TEST_CASE("cycle oracle matches the switching test on random graphs") {
  std::mt19937_64 gen(23);
  int unbalanced_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 6);  // n <= 8
    const SignedGraph g =
        testsupport::random_connected_signed_graph(gen, n, 0.4, 0.4);
    const SwitchingResult r = switching_balance_test(g);
    CHECK(r.is_balanced == cycle_oracle(g));
    if (!r.is_balanced) {
      ++unbalanced_seen;
      CHECK(witness_negatives(g, r.witness_cycle) % 2 == 1);
    }
  }
  CHECK(unbalanced_seen > 10);  // the sample actually exercises both sides
}

TEST_CASE("balanced constructions stay balanced under both tests") {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 6);
    const SignedGraph g = testsupport::random_balanced_signed_graph(gen, n, 0.5);
    const SwitchingResult r = switching_balance_test(g);
    CHECK(r.is_balanced);
    CHECK(cycle_oracle(g));
    CHECK(frustration_against(g, r.assignment).positive == 0);
    CHECK(frustration_against(g, r.assignment).negative == 0);
  }
}

TEST_CASE("balance report JSON carries the exact field set") {
  const SignedGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  const std::vector<int> factions{1, 1, -1};
  const BalanceReport report = make_balance_report(g, 1.0, factions);
  CHECK_FALSE(report.is_balanced);
  CHECK(report.lambda_min == 1.0);
  CHECK(report.triangle_total == 1);
  CHECK(report.triangle_unbalanced == 1);
  CHECK(report.nu() == 1.0);

  const nlohmann::ordered_json j = to_json(report);
  const std::vector<std::string> expected_keys{
      "is_balanced",         "lambda_min",     "frustrated_positive",
      "frustrated_negative", "triangle_total", "triangle_unbalanced",
      "nu"};
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == expected_keys);
  CHECK(j["is_balanced"] == false);
  CHECK(j["nu"] == 1.0);
}
