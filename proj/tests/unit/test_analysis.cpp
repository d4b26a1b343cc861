#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swarmcomm/analysis.hpp"

using namespace swarmcomm;

namespace {
GridGraph cut_vertex_graph() {
  // K4 on 0..3, bridge path 3-4-5, K5 on 5..9.
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) e.emplace_back(a, b);
  e.emplace_back(3, 4);
  e.emplace_back(4, 5);
  for (int a = 5; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) e.emplace_back(a, b);
  return GridGraph::explicit_graph(10, e, 0, 9);
}
}  // namespace

TEST(StripCount, Recurrence) {
  EXPECT_EQ(strip_column_count(0), 1u);
  EXPECT_EQ(strip_column_count(1), 2u);
  EXPECT_EQ(strip_column_count(2), 5u);
  EXPECT_EQ(strip_column_count(3), 12u);
  EXPECT_EQ(strip_column_count(5), 70u);
  EXPECT_EQ(strip_column_count(7), 408u);
  EXPECT_EQ(strip_column_count(8), 985u);
  EXPECT_EQ(strip_count(3), 7u);
  EXPECT_EQ(strip_count(4), 17u);
  EXPECT_EQ(strip_count(8), 577u);
  EXPECT_EQ(strip_count(9), 1393u);
}

TEST(EnumerateInitial, StripMatchesClosedForm) {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto g = GridGraph::eight_grid(static_cast<int>(k) + 2, 2);
    EXPECT_EQ(enumerate_initial(g, k, Membership::vertex).size(), strip_count(k)) << "k=" << k;
    EXPECT_LT(static_cast<double>(strip_count(k)), strip_bound(k));
  }
}

TEST(EnumerateInitial, BothConventionsForTinySwarms) {
  const auto g = GridGraph::eight_grid(10, 2);
  EXPECT_EQ(enumerate_initial(g, 1, Membership::vertex).size(), 1u);
  EXPECT_EQ(enumerate_initial(g, 1, Membership::column).size(), 2u);
  EXPECT_EQ(enumerate_initial(g, 2, Membership::vertex).size(), 3u);
  EXPECT_EQ(enumerate_initial(g, 2, Membership::column).size(), 5u);
}

TEST(EnumerateConnected, AgreesWithBruteForce) {
  for (bool eight : {true, false})
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto g = eight ? GridGraph::eight_grid(4, 3) : GridGraph::four_grid(4, 3);
      const auto got = enumerate_connected(g, k);
      const auto want = oracle::all_connected(4, 3, k, eight);
      std::set<std::vector<Vertex>> got_set;
      for (const auto& c : got) got_set.insert(c.cells());
      EXPECT_EQ(got.size(), got_set.size());
      EXPECT_EQ(got_set, std::set<std::vector<Vertex>>(want.begin(), want.end())) << "k=" << k << " eight=" << eight;
    }
}

TEST(EnumerateInitial, EightGridWindowsBelowCountingBound) {
  for (std::size_t k = 2; k <= 4; ++k)
    for (int n : {2, 3, 5}) {
      const auto g = GridGraph::eight_grid(2 * static_cast<int>(k) + 1, n, {static_cast<int>(k), n / 2},
                                           {2 * static_cast<int>(k), 0});
      const double count = static_cast<double>(enumerate_initial(g, k, Membership::vertex).size());
      EXPECT_LE(count, counting_bound(k));
    }
}

TEST(EnumerateInitial, GuardTrips) {
  const auto g = GridGraph::eight_grid(20, 20);
  EXPECT_THROW(enumerate_initial(g, 8, Membership::vertex, 1000), GuardExceeded);
}

TEST(Diagram, ArcsAreLegalMoves) {
  const auto g = GridGraph::eight_grid(5, 2);
  const TransitionDiagram d(g, 3);
  const auto ref = oracle::build_diagram(5, 2, 3, true, true);
  ASSERT_EQ(d.size(), ref.nodes.size());
  std::size_t arcs = 0;
  for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
    const auto j = d.find(Configuration(ref.nodes[i]));
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(d.is_initial(*j), static_cast<bool>(ref.initial[i]));
    EXPECT_EQ(d.is_terminal(*j), static_cast<bool>(ref.terminal[i]));
    std::set<std::vector<Vertex>> mine, theirs;
    for (auto t : d.arcs(*j)) mine.insert(d.node(t).cells());
    for (auto t : ref.out[i]) theirs.insert(ref.nodes[t]);
    EXPECT_EQ(mine, theirs);
    arcs += ref.out[i].size();
  }
  EXPECT_EQ(d.arc_count(), arcs);
}

TEST(MaxMu, FourGridIsSilent) {
  EXPECT_EQ(max_mu(GridGraph::four_grid(6, 3), 2).mu, 0u);
  for (std::size_t k = 2; k <= 3; ++k)
    for (int m = static_cast<int>(k) + 1; m <= 6; ++m)
      for (int n = 2; n <= 3; ++n) {
        const TransitionDiagram d(GridGraph::four_grid(m, n), k);
        EXPECT_FALSE(d.terminal_reachable()) << "k=" << k << " m=" << m << " n=" << n;
      }
}

TEST(MaxMu, CutVertexGraphIsSilent) {
  const auto g = cut_vertex_graph();
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto r = max_mu(g, k);
    EXPECT_EQ(r.mu, 0u) << "k=" << k;
    EXPECT_GT(r.initial_count, 0u);
  }
  EXPECT_EQ(max_mu(g, 1).mu, 1u);
}

TEST(MaxMu, EqualsMinimumVertexCut) {
  const auto g = GridGraph::eight_grid(6, 2);
  const auto r = max_mu(g, 2);
  const auto d = oracle::build_diagram(6, 2, 2, true, true);
  EXPECT_EQ(r.mu, oracle::min_vertex_cut(d));
  EXPECT_LE(r.mu, r.initial_count);
  EXPECT_GT(r.mu, 0u);
}

TEST(MaxMu, StrictMembershipAgreesWithOracle) {
  const auto g = GridGraph::eight_grid(5, 2);
  const auto r = max_mu(g, 2, Membership::vertex);
  EXPECT_EQ(r.mu, oracle::min_vertex_cut(oracle::build_diagram(5, 2, 2, true, false)));
}

TEST(MaxMu, WitnessPathsReplayToDistinctTerminals) {
  const auto g = GridGraph::eight_grid(6, 2);
  const auto r = max_mu(g, 3);
  ASSERT_EQ(r.paths.size(), r.mu);
  const auto follower = path_follower(r.paths);
  std::set<Configuration> terminals;
  std::set<Configuration> used;
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    const auto& p = r.paths[i];
    EXPECT_EQ(r.path_lengths[i], p.size() - 1);
    for (const auto& c : p) EXPECT_TRUE(used.insert(c).second) << "paths share a configuration";
    const auto trace = run(g, follower, p.front(), p.size());
    ASSERT_TRUE(trace.delay.has_value());
    EXPECT_EQ(*trace.delay, p.size() - 1);
    EXPECT_EQ(count_violations(g, trace), 0u);
    terminals.insert(trace.last());
  }
  EXPECT_EQ(terminals.size(), r.mu);
  EXPECT_GE(r.longest_path(), 1u);
}

TEST(Bounds, ReportValues) {
  const auto r = bounds_report(15, 100);
  EXPECT_DOUBLE_EQ(*r.alg1_capacity, 2.0);
  EXPECT_DOUBLE_EQ(*r.alg1_delay_bound, 2252.5);
  EXPECT_DOUBLE_EQ(*r.alg2_capacity, 128.0);
  EXPECT_DOUBLE_EQ(*r.alg2_delay, 1275.0);
  EXPECT_TRUE(r.pass());
  EXPECT_DOUBLE_EQ(bounds_report(3, 20, std::nullopt, std::nullopt, 10.0).delay_lower_bound, 18.0);
}

TEST(Bounds, KAlpha) {
  EXPECT_EQ(k_alpha(100), 11u);
  const double H = std::log2(100.0);
  EXPECT_DOUBLE_EQ(kstar_lower_grid(H, 100), H / 6.0 + 1.0 - std::log2(11.0) / 6.0);
  const auto r = bounds_report(20, 300, std::nullopt, 100);
  EXPECT_EQ(r.k_alpha, std::optional<std::size_t>(11));
  EXPECT_DOUBLE_EQ(*r.entropy, H);
}

TEST(Bounds, CapacityChain) {
  for (std::size_t k = 15; k <= 40; ++k) {
    EXPECT_LE(std::pow(2.0, static_cast<double>(k - 14)), strip_bound(k));
    EXPECT_LE(strip_bound(k), counting_bound(k));
  }
}
