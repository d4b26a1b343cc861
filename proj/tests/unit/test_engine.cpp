#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swarmcomm/alg_shift1x.hpp"
#include "swarmcomm/alg_shift2x.hpp"
#include "swarmcomm/engine.hpp"
#include "swarmcomm/loco.hpp"

using namespace swarmcomm;

namespace {
SwarmAlgorithm stay_everywhere() {
  return {"stay", [](const Configuration&) -> MoveAction { return Stay{}; }};
}
Violation violation_of(const GridGraph& g, const Configuration& c, const MoveAction& a) {
  try {
    apply(g, c, a);
  } catch (const IllegalMove& e) {
    return e.violation();
  }
  ADD_FAILURE() << "move was accepted";
  return Violation::not_a_vertex;
}
}  // namespace

TEST(Apply, DiagonalStepKeepsAdjacency) {
  const auto g = GridGraph::eight_grid(4, 2);
  const Configuration c({{0, 0}, {1, 0}});
  EXPECT_EQ(apply(g, c, Move{{0, 0}, {1, 1}}), Configuration({{1, 0}, {1, 1}}));
}

TEST(Apply, StayIsIdentity) {
  const auto g = GridGraph::eight_grid(4, 2);
  const Configuration c({{0, 0}, {1, 1}, {2, 1}});
  EXPECT_EQ(apply(g, c, Stay{}), c);
}

TEST(Apply, ConnectivityDependsOnAdjacency) {
  const Configuration c({{0, 0}, {1, 0}, {2, 0}});
  const Move lift{{1, 0}, {1, 1}};
  EXPECT_EQ(violation_of(GridGraph::four_grid(3, 2), c, lift), Violation::disconnected);
  EXPECT_EQ(apply(GridGraph::eight_grid(3, 2), c, lift), Configuration({{0, 0}, {1, 1}, {2, 0}}));
}

TEST(Apply, NamesEachViolatedConstraint) {
  const auto g = GridGraph::eight_grid(4, 2);
  const Configuration c({{0, 0}, {1, 0}});
  EXPECT_EQ(violation_of(g, c, Move{{1, 0}, {1, 2}}), Violation::not_a_vertex);
  EXPECT_EQ(violation_of(g, c, Move{{2, 0}, {3, 0}}), Violation::source_empty);
  EXPECT_EQ(violation_of(g, c, Move{{0, 0}, {2, 1}}), Violation::not_an_edge);
  EXPECT_EQ(violation_of(g, c, Move{{0, 0}, {1, 0}}), Violation::destination_occupied);
  EXPECT_EQ(violation_of(g, c, Move{{1, 0}, {2, 0}}), Violation::disconnected);
  try {
    apply(g, c, Move{{1, 0}, {2, 0}});
  } catch (const IllegalMove& e) {
    EXPECT_NE(std::string(e.what()).find("result disconnected"), std::string::npos);
  }
}

TEST(Run, StayNeverDeliversAndFillsTheBudget) {
  const auto g = GridGraph::eight_grid(10, 2);
  const auto trace = run(g, stay_everywhere(), loco::config(3, 0), 25);
  EXPECT_FALSE(trace.delay.has_value());
  EXPECT_EQ(trace.steps.size(), 26u);
  EXPECT_EQ(trace.move_count, 0u);
  EXPECT_EQ(count_violations(g, trace), 0u);
}

TEST(Run, ShiftByOneSmallExample) {
  const auto g = GridGraph::eight_grid(10, 2);
  const auto trace = run(g, alg2::algorithm(), alg2::encode({0, 1}, 4, 0));
  ASSERT_TRUE(trace.delay.has_value());
  EXPECT_EQ(*trace.delay, 24u);
  EXPECT_EQ(count_violations(g, trace), 0u);
}

TEST(Run, GaitMatchesHandReplay) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t m = 8 + k;
    const auto g = GridGraph::eight_grid(static_cast<int>(m), 2);
    const auto trace = run(g, loco::algorithm(), loco::config(k, 0));
    ASSERT_TRUE(trace.delay.has_value());
    EXPECT_EQ(*trace.delay, oracle::gait_delay(k, m)) << "k=" << k;
  }
  const auto g = GridGraph::eight_grid(8, 2);
  EXPECT_EQ(*run(g, loco::algorithm(), loco::config(3, 0)).delay, oracle::gait_delay(3, 8));
}

TEST(Run, DelayZeroWhenStartingOnReceiverColumn) {
  const auto g = GridGraph::eight_grid(3, 2);
  const auto trace = run(g, loco::algorithm(), loco::config(3, 0));
  EXPECT_EQ(trace.delay, std::optional<std::size_t>(0));
  EXPECT_EQ(trace.steps.size(), 1u);
}

TEST(Run, RejectsBadInitialConfigurations) {
  const auto g = GridGraph::eight_grid(10, 2);
  EXPECT_THROW(run(g, loco::algorithm(), Configuration({{0, 0}, {2, 0}}), 5), DomainError);
  EXPECT_THROW(run(g, loco::algorithm(), Configuration({{1, 0}, {2, 0}}), 5), DomainError);
}

TEST(Run, IllegalMoveAbortsWithPrefix) {
  const auto g = GridGraph::eight_grid(10, 2);
  int calls = 0;
  SwarmAlgorithm bad{"bad", [&calls](const Configuration& c) -> MoveAction {
                       if (calls++ < 2) return loco::next(c);
                       return Move{{9, 1}, {9, 0}};
                     }};
  try {
    run(g, bad, loco::config(3, 0), 100);
    FAIL() << "expected abort";
  } catch (const EngineAbort& e) {
    EXPECT_EQ(e.prefix().steps.size(), 3u);
    EXPECT_NE(std::string(e.what()).find("no robot at source"), std::string::npos);
  }
}

TEST(Run, StayFromShippedAlgorithmIsFlagged) {
  const auto g = GridGraph::eight_grid(10, 2);
  SwarmAlgorithm lazy{"lazy", [](const Configuration&) -> MoveAction { return Stay{}; }, true};
  const auto trace = run(g, lazy, loco::config(2, 0), 3);
  EXPECT_EQ(trace.warnings.size(), 3u);
}

TEST(Run, Deterministic) {
  const auto g = GridGraph::eight_grid(40, 2);
  const auto c0 = alg1::encode({1, 0}, 0);
  const auto a = run(g, alg1::algorithm(), c0);
  const auto b = run(g, alg1::algorithm(), c0);
  EXPECT_EQ(a.steps, b.steps);
  EXPECT_EQ(a.moves, b.moves);
  EXPECT_EQ(a.delay, b.delay);
}

TEST(Violations, DetectsTamperedTraces) {
  const auto g = GridGraph::eight_grid(12, 2);
  auto trace = run(g, loco::algorithm(), loco::config(3, 0));
  ASSERT_EQ(count_violations(g, trace), 0u);
  auto teleport = trace;
  teleport.steps[4] = teleport.steps[4].translated(1);
  EXPECT_GT(count_violations(g, teleport), 0u);
  auto lie = trace;
  lie.moves[0] = Stay{};
  EXPECT_GT(count_violations(g, lie), 0u);
}

TEST(Equivariance, Examples) {
  const auto g = GridGraph::eight_grid(60, 2);
  EXPECT_TRUE(check_equivariance(g, alg2::algorithm(), alg2::encode({0, 1, 0}, 6, 1), 5));
  // Mid-cycle shift-by-two state: a few steps into a run.
  const auto sender1 = GridGraph::eight_grid(60, 2, {1, 0}, {59, 0});
  const auto trace = run(sender1, alg1::algorithm(), alg1::encode({1, 1, 0}, 1), 30);
  for (std::size_t t = 1; t < trace.steps.size(); ++t)
    EXPECT_TRUE(check_equivariance(g, alg1::algorithm(), trace.steps[t], 3));
  EXPECT_TRUE(check_equivariance(g, stay_everywhere(), loco::config(4, 2), 7));
}

TEST(Equivariance, TranslationOutsideInteriorIsDomainError) {
  const auto g = GridGraph::eight_grid(10, 2);
  EXPECT_THROW(check_equivariance(g, loco::algorithm(), loco::config(3, 1), 6), DomainError);
  EXPECT_THROW(check_equivariance(g, loco::algorithm(), loco::config(3, 0), 2), DomainError);
}

TEST(FourGrid, NoTransmissionForSmallSwarms) {
  // Exhaustive reachability over the independently built diagram.
  for (std::size_t k = 2; k <= 3; ++k)
    for (int n = 2; n <= 3; ++n)
      for (int m = static_cast<int>(k) + 1; m <= 6; ++m) {
        const auto d = oracle::build_diagram(m, n, k, false, true);
        EXPECT_FALSE(oracle::any_path(d)) << "k=" << k << " m=" << m << " n=" << n;
      }
}
