#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include "bienum/brute/image.hpp"
#include "bienum/eps_sweep.hpp"
#include "bienum/errors.hpp"
#include "bienum/problems/knapsack_gadget.hpp"
#include "bienum/problems/min_cut.hpp"
#include "bienum/problems/unconstrained.hpp"
#include "support/generators.hpp"

using namespace bienum;

namespace {

Rational q(long long num, long long den = 1) {
  return make_rational(Int(num), Int(den));
}

Point pt(long long a, long long b) { return Point(q(a), q(b)); }

Arc edge(std::size_t u, std::size_t v, long long c1, long long c2) {
  return Arc{u, v, Point(q(c1), q(c2))};
}

std::vector<Int> ints(std::initializer_list<long long> values) {
  std::vector<Int> out;
  for (const long long v : values) {
    out.emplace_back(v);
  }
  return out;
}

CostGraph triangle() {
  CostGraph g;
  g.node_count = 3;
  g.edges = {edge(0, 1, 1, 4), edge(0, 2, 4, 1), edge(1, 2, 2, 2)};
  return g;
}

}  // namespace

TEST_CASE("subset-sum front on distinct coefficients") {
  const BiFront front = subset_sum_front(UnconstrainedBi{ints({1, 2})});
  CHECK(front.points() == std::vector<Point>{pt(0, 0), pt(1, -1), pt(2, -2),
                                             pt(3, -3)});
}

TEST_CASE("subset-sum front collapses duplicate sums") {
  const BiFront front = subset_sum_front(UnconstrainedBi{ints({1, 1})});
  CHECK(front.points() ==
        std::vector<Point>{pt(0, 0), pt(1, -1), pt(2, -2)});
}

TEST_CASE("subset-sum front of the empty instance is the origin") {
  const BiFront front = subset_sum_front(UnconstrainedBi{{}});
  CHECK(front.points() == std::vector<Point>{pt(0, 0)});
}

TEST_CASE("subset-sum snapshots grow strictly for positive coefficients") {
  std::vector<BiFront> snapshots;
  subset_sum_front(UnconstrainedBi{ints({3, 1, 4, 1, 5})},
                   [&](const BiFront& f) { snapshots.push_back(f); });
  REQUIRE(snapshots.size() == 6);  // F₀ … F₅
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    CHECK(snapshots[i].size() > snapshots[i - 1].size());
    for (const Point& p : snapshots[i - 1].points()) {
      CHECK(snapshots[i].contains(p));
    }
  }
}

TEST_CASE("subset-sum snapshots stall on zero coefficients") {
  std::vector<BiFront> snapshots;
  subset_sum_front(UnconstrainedBi{ints({0})},
                   [&](const BiFront& f) { snapshots.push_back(f); });
  REQUIRE(snapshots.size() == 2);
  CHECK(snapshots[0] == snapshots[1]);
}

TEST_CASE("subset-sum front matches brute subset enumeration") {
  testing::Rng rng(1419);
  for (int round = 0; round < 40; ++round) {
    UnconstrainedBi instance;
    const std::size_t n = testing::rnd_below(rng, 11);
    for (std::size_t i = 0; i < n; ++i) {
      instance.c.emplace_back(testing::rnd_int(rng, 0, 12));
    }
    const BiFront expected = brute_front(enumerate_subset_image(instance));
    CHECK(subset_sum_front(instance) == expected);
  }
}

TEST_CASE("subset-sum rejects negative coefficients") {
  CHECK_THROWS_AS(subset_sum_front(UnconstrainedBi{ints({1, -2})}), UsageError);
}

TEST_CASE("unconstrained file format round-trips") {
  const UnconstrainedBi instance{ints({3, 0, 7})};
  std::ostringstream out;
  write_unconstrained(out, instance);
  std::istringstream in(out.str());
  const UnconstrainedBi back = parse_unconstrained(in);
  CHECK(back.c == instance.c);

  std::istringstream bad("unconstrained 2\n1 -4");
  CHECK_THROWS_AS(parse_unconstrained(bad), UsageError);
  std::istringstream fractional("unconstrained 1\n1/2");
  CHECK_THROWS_AS(parse_unconstrained(fractional), UsageError);
}

TEST_CASE("knapsack gadget of the Yes-instance") {
  KPInstance kp;
  kp.c1 = ints({1, 2});
  kp.c2 = ints({2, 3});
  kp.k1 = 2;
  kp.k2 = 3;
  const GadgetResult gadget = knapsack_to_shortest_path(kp);
  CHECK(gadget.sentinels[0] == pt(3, 0));
  CHECK(gadget.sentinels[1] == pt(0, 3));

  const BiFront front = brute_front(enumerate_path_image(gadget.graph));
  CHECK(front.points() == std::vector<Point>{pt(0, 3), pt(2, 2), pt(3, 0)});
  CHECK(brute_knapsack_feasible(kp));  // x = (0,1) fits both bounds
}

TEST_CASE("knapsack gadget of the No-instance collapses to the sentinels") {
  KPInstance kp;
  kp.c1 = ints({2, 2});
  kp.c2 = ints({1, 1});
  kp.k1 = 1;
  kp.k2 = 1;
  const GadgetResult gadget = knapsack_to_shortest_path(kp);
  CHECK(gadget.sentinels[0] == pt(2, 0));
  CHECK(gadget.sentinels[1] == pt(0, 2));

  const BiFront front = brute_front(enumerate_path_image(gadget.graph));
  CHECK(front.points() == std::vector<Point>{pt(0, 2), pt(2, 0)});
  CHECK_FALSE(brute_knapsack_feasible(kp));
}

TEST_CASE("knapsack gadget rejects degenerate instances") {
  KPInstance kp;
  kp.c1 = ints({1});
  kp.c2 = ints({1});
  kp.k1 = 1;  // coefficient sum does not exceed the bound
  kp.k2 = 1;
  CHECK_THROWS_AS(knapsack_to_shortest_path(kp), UsageError);
}

TEST_CASE("knapsack gadget has the chain-with-detours shape") {
  testing::Rng rng(8855);
  for (int round = 0; round < 20; ++round) {
    const KPInstance kp = testing::random_kp(rng, 8);
    const GadgetResult gadget = knapsack_to_shortest_path(kp);
    const CostDigraph& g = gadget.graph;
    const std::size_t n = kp.c1.size();
    REQUIRE(g.node_count == 2 * n + 2);
    REQUIRE(g.arcs.size() == 3 * n + 3);
    CHECK(g.source == 0);
    CHECK(g.target == n);
    for (std::size_t i = 0; i < n; ++i) {
      const Arc& to_detour = g.arcs[3 * i];
      const Arc& skip = g.arcs[3 * i + 1];
      const Arc& from_detour = g.arcs[3 * i + 2];
      CHECK(to_detour.from == i);
      CHECK(to_detour.to == n + 1 + i);
      CHECK(to_detour.cost == Point(Rational(kp.c1[i]), Rational(0)));
      CHECK(skip.from == i);
      CHECK(skip.to == i + 1);
      CHECK(skip.cost == Point(Rational(0), Rational(kp.c2[i])));
      CHECK(from_detour.from == n + 1 + i);
      CHECK(from_detour.to == i + 1);
      CHECK(from_detour.cost == pt(0, 0));
    }
    CHECK(g.arcs[3 * n].from == g.source);
    CHECK(g.arcs[3 * n].to == g.target);
    CHECK(g.arcs[3 * n + 1].to == 2 * n + 1);
    CHECK(g.arcs[3 * n + 2].from == 2 * n + 1);
  }
}

TEST_CASE("gadget front equals the sentinels exactly for No-instances") {
  testing::Rng rng(90210);
  for (int round = 0; round < 40; ++round) {
    const KPInstance kp = testing::random_kp(rng, 7);
    const GadgetResult gadget = knapsack_to_shortest_path(kp);
    const BiFront front = brute_front(enumerate_path_image(gadget.graph, 18));
    BiFront sentinels;
    sentinels.insert(gadget.sentinels[0]);
    sentinels.insert(gadget.sentinels[1]);
    const bool feasible = brute_knapsack_feasible(kp);
    CHECK((front == sentinels) == !feasible);
    for (const Point& m : gadget.sentinels) {
      CHECK(front.contains(m));
    }
  }
}

TEST_CASE("knapsack file format round-trips") {
  KPInstance kp;
  kp.c1 = ints({4, 1, 3});
  kp.c2 = ints({2, 2, 5});
  kp.k1 = 5;
  kp.k2 = 6;
  std::ostringstream out;
  write_knapsack(out, kp);
  std::istringstream in(out.str());
  const KPInstance back = parse_knapsack(in);
  CHECK(back.c1 == kp.c1);
  CHECK(back.c2 == kp.c2);
  CHECK(back.k1 == kp.k1);
  CHECK(back.k2 == kp.k2);

  std::istringstream invalid("knapsack 1 0 1\n2\n2");
  CHECK_THROWS_AS(parse_knapsack(invalid), UsageError);
  std::istringstream truncated("knapsack 2 1 1\n1 1\n1");
  CHECK_THROWS_AS(parse_knapsack(truncated), UsageError);
}

TEST_CASE("min-cut oracle on the two-node graph") {
  CostGraph g;
  g.node_count = 2;
  g.edges = {edge(0, 1, 3, 5)};
  MinCutOracle oracle(std::move(g));
  const OracleAnswer answer =
      oracle.eps_constraint(ObjectiveBound::below(q(6)));
  REQUIRE(answer.is_optimal());
  CHECK(answer.point == pt(3, 5));
}

TEST_CASE("min-cut oracle scans the triangle cuts") {
  MinCutOracle oracle(triangle());
  SECTION("unbounded sweep start picks the minimum second objective") {
    const OracleAnswer answer = oracle.eps_constraint(ObjectiveBound::none());
    REQUIRE(answer.is_optimal());
    CHECK(answer.point == pt(6, 3));
  }
  SECTION("a strict bound of 4 admits only one cut") {
    const OracleAnswer answer =
        oracle.eps_constraint(ObjectiveBound::below(q(4)));
    REQUIRE(answer.is_optimal());
    CHECK(answer.point == pt(3, 6));
  }
  SECTION("an unsatisfiable bound is infeasible") {
    const OracleAnswer answer =
        oracle.eps_constraint(ObjectiveBound::below(q(3)));
    CHECK_FALSE(answer.is_optimal());
  }
  SECTION("weighted queries agree with the cut list") {
    const OracleAnswer answer = oracle.weighted_sum(Weight{q(1), q(1)});
    REQUIRE(answer.is_optimal());
    CHECK(answer.point == pt(3, 6));  // values 10, 9, 9; lex tie-break
  }
}

TEST_CASE("min-cut oracle enforces its preconditions") {
  CostGraph disconnected;
  disconnected.node_count = 3;
  disconnected.edges = {edge(0, 1, 1, 1)};
  CHECK_THROWS_AS(MinCutOracle(std::move(disconnected)), UsageError);

  CostGraph big;
  big.node_count = 5;
  for (std::size_t v = 1; v < big.node_count; ++v) {
    big.edges.push_back(edge(v - 1, v, 1, 1));
  }
  CHECK_THROWS_AS(MinCutOracle(std::move(big), 4), CapacityError);
}

TEST_CASE("eps sweep over min-cut oracles matches brute cut fronts") {
  testing::Rng rng(5225);
  for (int round = 0; round < 30; ++round) {
    const CostGraph g = testing::random_graph(rng, 7);
    const BiFront expected = brute_front(enumerate_cut_image(g));
    MinCutOracle oracle(g);
    const EnumerationResult result = eps_constraint_front(oracle);
    CHECK(result.front == expected);
    CHECK(result.log.total_calls.eps == expected.size() + 1);
  }
}
