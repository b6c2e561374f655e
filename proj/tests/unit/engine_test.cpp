#include <gtest/gtest.h>

#include <sstream>

#include "chipfire/chipfire.hpp"
#include "error_matchers.hpp"
#include "oracles.hpp"

namespace chipfire {
namespace {

ChipConfig chips(std::initializer_list<long> v) { return ChipConfig{make_vector(v)}; }
Sandpile sand(std::initializer_list<long> v) { return Sandpile{make_vector(v)}; }

TEST(Engine, MaxStableAndActivity) {
  const auto g = testing::two_three_path(2);
  EXPECT_EQ(max_stable(g), chips({1, 4, 2}));
  EXPECT_TRUE(is_stable(g, chips({1, 4, 2})));
  EXPECT_FALSE(is_stable(g, chips({2, 0, 0})));
  EXPECT_TRUE(is_active(g, chips({0, 5, 0}), 1));
  EXPECT_TRUE(is_stable(g, chips({-5, -5, -5})));
}

TEST(Engine, FireMovesChips) {
  const auto g = testing::two_three_path(1);
  EXPECT_EQ(fire(g, chips({2, 1}), 0), chips({0, 3}));
  EXPECT_EQ(fire(g, chips({0, 3}), 1), chips({3, 0}));
  // Firing is allowed from an inactive vertex as a raw lattice move.
  EXPECT_EQ(fire(g, chips({0, 0}), 0), chips({-2, 2}));
  EXPECT_CHIPFIRE_ERROR(fire(g, chips({0, 0}), 2), ErrorCode::VertexOutOfRange);
  EXPECT_CHIPFIRE_ERROR(fire(g, chips({0, 0, 0}), 0), ErrorCode::DimensionMismatch);
}

TEST(Engine, LoopsKeepTheirChip) {
  const auto g = DirectedMultigraph::from_adjacency({{1, 1}, {1, 0}});
  EXPECT_EQ(fire(g, chips({2, 0}), 0), chips({1, 1}));
}

TEST(Engine, FiringTheFullPeriodIsANoOp) {
  testing::for_each_graph(3, 2, true, [](const DirectedMultigraph& g) {
    const IntVector pi = period_vector(g);
    const ChipConfig sigma = chips({3, -1, 4});
    EXPECT_EQ(apply_firing_vector(g, sigma, pi), sigma);
  });
}

TEST(Engine, ReplayLegalSequence) {
  const auto g = testing::bidirected_triangle();
  const FiringVector x = replay_legal_sequence(g, chips({2, 1, 0}), std::vector<std::size_t>{0, 1});
  EXPECT_EQ(x.counts, make_vector({1, 1, 0}));
  EXPECT_CHIPFIRE_ERROR(replay_legal_sequence(g, chips({2, 1, 0}), std::vector<std::size_t>{1}),
                        ErrorCode::NotStable);
}

TEST(Halting, TriangleDiverges) {
  const auto v = decide_halting(testing::bidirected_triangle(), chips({2, 1, 0}));
  EXPECT_EQ(v.status, HaltStatus::Diverges);
  EXPECT_EQ(v.odometer.counts, make_vector({1, 1, 1}));
  EXPECT_EQ(v.threshold, make_vector({1, 1, 1}));
}

TEST(Halting, StableInputHaltsWithZeroOdometer) {
  const auto g = testing::bidirected_triangle();
  const auto v = decide_halting(g, chips({1, 1, 1}));
  EXPECT_EQ(v.status, HaltStatus::Halts);
  EXPECT_EQ(v.odometer.counts, make_vector({0, 0, 0}));
  EXPECT_EQ(v.steps, 0);
  EXPECT_TRUE(verify_halting_certificate(g, chips({1, 1, 1}), v.odometer));
}

TEST(Halting, TwoThreePathSmallHalts) {
  const auto g = testing::two_three_path(1);
  const auto v = decide_halting(g, chips({2, 1}), {std::nullopt, true, {}});
  EXPECT_EQ(v.status, HaltStatus::Halts);
  // (2,1) -> (0,3) -> (3,0) -> (1,2).
  EXPECT_EQ(v.odometer.counts, make_vector({2, 1}));
  EXPECT_EQ(v.final_config, chips({1, 2}));
  EXPECT_EQ(v.sequence, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_TRUE(verify_halting_certificate(g, chips({2, 1}), v.odometer));
}

TEST(Halting, NegativeEntriesAreAllowed) {
  const auto g = testing::bidirected_two_path();
  // (0, 2) diverges on the double-edged pair; (-1, 2) halts after one firing.
  const auto g2 = DirectedMultigraph::from_adjacency({{0, 2}, {2, 0}});
  EXPECT_EQ(decide_halting(g2, chips({0, 2})).status, HaltStatus::Diverges);
  const auto v = decide_halting(g2, chips({-1, 2}));
  EXPECT_EQ(v.status, HaltStatus::Halts);
  EXPECT_EQ(v.final_config, chips({1, 0}));
  EXPECT_EQ(decide_halting(g, chips({-3, 1})).status, HaltStatus::Halts);
}

TEST(Halting, HaltingOdometerMayExceedPeriod) {
  // pi = (1, 1) but vertex 1 fires twice: (-2,2) -> (-1,1) -> (0,0).
  const auto g = DirectedMultigraph::from_adjacency({{1, 1}, {1, 0}});
  const auto v = decide_halting(g, chips({-2, 2}));
  EXPECT_EQ(period_vector(g), make_vector({1, 1}));
  EXPECT_EQ(v.status, HaltStatus::Halts);
  EXPECT_EQ(v.odometer.counts, make_vector({0, 2}));
  EXPECT_FALSE(testing::least_action_search(g, make_vector({-2, 2}), make_vector({1, 1})));
  EXPECT_EQ(testing::least_stabilizing_vector(g, make_vector({-2, 2})), make_vector({0, 2}));
}

TEST(Halting, MatchesLeastActionOracleOnSmallGraphs) {
  testing::Rng rng(22);
  testing::for_each_graph(2, 2, true, [&](const DirectedMultigraph& g) {
    for (int k = 0; k < 10; ++k) {
      const IntVector s = testing::random_vector(rng, 2, -3, 6);
      const auto v = decide_halting(g, ChipConfig{s});
      const auto least = testing::least_stabilizing_vector(g, s);
      ASSERT_EQ(least.has_value(), v.status == HaltStatus::Halts) << to_string(g.adjacency()) << to_string(s);
      if (least) EXPECT_EQ(*least, v.odometer.counts);
    }
  });
}

TEST(Halting, TwoThreePathOverCapacityDiverges) {
  EXPECT_EQ(decide_halting(testing::two_three_path(1), chips({2, 2})).status, HaltStatus::Diverges);
  EXPECT_FALSE(decide_halting_coeulerian(testing::two_three_path(1), chips({4, 0})));
  EXPECT_TRUE(decide_halting_coeulerian(testing::two_three_path(1), chips({2, 1})));
}

TEST(Halting, StepCapGivesUnknown) {
  HaltingOptions opts;
  opts.step_cap = Integer(1);
  const auto v = decide_halting(testing::bidirected_triangle(), chips({2, 1, 0}), opts);
  EXPECT_EQ(v.status, HaltStatus::Unknown);
  EXPECT_EQ(v.steps, 1);
}

TEST(Halting, TraceSeesEveryFiring) {
  HaltingOptions opts;
  std::vector<std::size_t> seen;
  opts.trace = [&](const Integer&, std::size_t vertex, const ChipConfig&) { seen.push_back(vertex); };
  opts.record_sequence = true;
  const auto v = decide_halting(testing::bidirected_triangle(), chips({2, 1, 0}), opts);
  EXPECT_EQ(seen, v.sequence);
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Halting, CertificateRejectsWrongOdometer) {
  const auto g = testing::two_three_path(1);
  EXPECT_FALSE(verify_halting_certificate(g, chips({2, 1}), FiringVector{make_vector({0, 0})}));
  EXPECT_FALSE(verify_halting_certificate(g, chips({2, 1}), FiringVector{make_vector({4, 2})}));
}

TEST(Halting, CoEulerianFastPathMatchesSimulation) {
  testing::for_each_graph(3, 2, true, [](const DirectedMultigraph& g) {
    if (!is_coeulerian(g)) return;
    const long capacity = Integer(g.edge_count() - Integer(g.vertex_count())).get_si();
    for (long tot = std::max(0L, capacity - 1); tot <= capacity + 1; ++tot) {
      testing::for_each_composition(3, tot, [&](const IntVector& s) {
        const ChipConfig sigma{s};
        const bool fast = decide_halting_coeulerian(g, sigma, true);
        EXPECT_EQ(fast, tot <= capacity);
        EXPECT_EQ(fast, decide_halting(g, sigma).status == HaltStatus::Halts);
      });
    }
  });
}

TEST(Halting, CoEulerianFastPathErrors) {
  EXPECT_CHIPFIRE_ERROR(decide_halting_coeulerian(testing::two_three_path(1), chips({-1, 0})),
                        ErrorCode::NegativeChips);
  EXPECT_CHIPFIRE_ERROR(decide_halting_coeulerian(testing::bidirected_triangle(), chips({0, 0, 0}), true),
                        ErrorCode::NotCoEulerian);
}

TEST(Stabilize, SpecExamples) {
  const auto g = testing::bidirected_triangle();
  const auto a = stabilize_with_sink(g, 2, sand({2, 0}));
  EXPECT_EQ(a.stable, sand({0, 1}));
  EXPECT_EQ(a.odometer.counts, make_vector({1, 0}));
  EXPECT_EQ(a.grains_to_sink, 1);
  const auto b = stabilize_with_sink(g, 2, sand({2, 2}));
  EXPECT_EQ(b.stable, sand({1, 1}));
  EXPECT_EQ(b.odometer.counts, make_vector({1, 1}));
  const auto c = stabilize_with_sink(g, 2, sand({1, 0}));
  EXPECT_EQ(c.stable, sand({1, 0}));
  EXPECT_EQ(c.odometer.counts, make_vector({0, 0}));
}

TEST(Stabilize, BatchedFiringMatchesNaiveLoop) {
  testing::Rng rng(21);
  testing::for_each_graph(3, 2, true, [&](const DirectedMultigraph& g) {
    for (std::size_t s = 0; s < 3; ++s) {
      const IntVector eta = testing::random_vector(rng, 2, 0, 40);
      EXPECT_EQ(stabilize_with_sink(g, s, Sandpile{eta}).stable.grains, testing::naive_stabilize(g, s, eta));
    }
  });
}

TEST(Stabilize, ConservesGrains) {
  const auto g = testing::two_three_path(3);
  const Sandpile eta = sand({30, 7, 19});
  const auto r = stabilize_with_sink(g, 0, eta);
  EXPECT_EQ(total(r.stable.grains) + r.grains_to_sink, total(eta.grains));
}

TEST(Stabilize, ChooserOrderDoesNotMatter) {
  const auto g = testing::two_three_path(3);
  const Sandpile eta = sand({11, 9, 25});
  const auto base = stabilize_with_sink(g, 3, eta);
  const auto last = stabilize_with_sink(g, 3, eta, [](std::span<const std::size_t> a) { return a.back(); });
  EXPECT_EQ(base.stable, last.stable);
  EXPECT_EQ(base.odometer, last.odometer);
  EXPECT_EQ(base.grains_to_sink, last.grains_to_sink);
}

TEST(Stabilize, Errors) {
  const auto g = testing::bidirected_triangle();
  EXPECT_CHIPFIRE_ERROR(stabilize_with_sink(g, 3, sand({0, 0})), ErrorCode::VertexOutOfRange);
  EXPECT_CHIPFIRE_ERROR(stabilize_with_sink(g, 0, sand({0})), ErrorCode::DimensionMismatch);
}

TEST(Stabilize, RestrictAndExtend) {
  const ChipConfig sigma = chips({4, 5, 6});
  const Sandpile eta = restrict_to_nonsink(sigma, 1);
  EXPECT_EQ(eta, sand({4, 6}));
  EXPECT_EQ(extend_with_total(eta, 1, 15), sigma);
}

}  // namespace
}  // namespace chipfire
