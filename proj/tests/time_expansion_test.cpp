#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sinkloc/evaluator.hpp"
#include "sinkloc/time_expansion.hpp"

namespace sinkloc {
namespace {

// u = 0 -> v = 1, v collects.
DirectedDynamicNetwork one_arc(std::int64_t capacity, std::int64_t transit, std::int64_t supply) {
  DirectedDynamicNetwork net;
  net.vertex_count = 2;
  net.arcs = {{0, 1, capacity, transit}};
  net.supply = {supply, 0};
  net.collector = 1;
  return net;
}

TEST(BuildTimeExpanded, ArcCountsForSingleArc) {
  TimeExpandedGraph g = build_time_expanded(one_arc(1, 2, 1), 3);
  EXPECT_EQ(g.node_count(), 10u);
  EXPECT_EQ(g.count(ArcKind::Movement), 2u);
  EXPECT_EQ(g.count(ArcKind::Holdover), 6u);
  EXPECT_EQ(g.count(ArcKind::Supply), 1u);
  EXPECT_EQ(g.count(ArcKind::Collection), 4u);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> movement;
  for (const ExpandedArc& a : g.arcs()) {
    if (a.kind == ArcKind::Movement) movement.emplace_back(a.from, a.to);
  }
  ASSERT_EQ(movement.size(), 2u);
  EXPECT_EQ(movement[0], std::make_pair(g.node(0, 0), g.node(1, 2)));
  EXPECT_EQ(movement[1], std::make_pair(g.node(0, 1), g.node(1, 3)));
}

TEST(BuildTimeExpanded, ZeroHorizonKeepsOnlyZeroTransitArcs) {
  DirectedDynamicNetwork net = one_arc(1, 1, 1);
  net.vertex_count = 3;
  net.arcs.push_back({1, 2, 1, 0});
  net.collector = 2;
  TimeExpandedGraph g = build_time_expanded(net, 0);
  EXPECT_EQ(g.count(ArcKind::Movement), 1u);
  EXPECT_EQ(g.count(ArcKind::Holdover), 0u);
  EXPECT_EQ(g.count(ArcKind::Collection), 1u);

  TimeExpandedGraph g2 = build_time_expanded(net, 2);
  std::size_t zero_transit = 0;
  for (const ExpandedArc& a : g2.arcs()) {
    if (a.kind == ArcKind::Movement && a.to - a.from == 1) ++zero_transit;  // (1,t)->(2,t)
  }
  EXPECT_EQ(zero_transit, 3u);
}

TEST(BuildTimeExpanded, ZeroCapacityArcsOmitted) {
  TimeExpandedGraph g = build_time_expanded(one_arc(0, 1, 1), 4);
  EXPECT_EQ(g.count(ArcKind::Movement), 0u);
}

TEST(BuildTimeExpanded, UnboundedArcsClampedToSupply) {
  TimeExpandedGraph g = build_time_expanded(one_arc(1, 1, 7), 2);
  for (const ExpandedArc& a : g.arcs()) {
    if (a.kind == ArcKind::Holdover || a.kind == ArcKind::Collection) EXPECT_EQ(a.capacity, 7);
  }
  EXPECT_EQ(g.demand(), 7);
}

TEST(MaxFlow, Bottleneck) {
  DirectedDynamicNetwork net;
  net.vertex_count = 3;
  net.arcs = {{0, 1, 5, 1}, {1, 2, 3, 1}};
  net.supply = {3, 0, 0};
  net.collector = 2;
  EXPECT_EQ(max_flow(build_time_expanded(net, 2)).value, 3);
}

TEST(MaxFlow, SecondDepartureWaitsOneStep) {
  DirectedDynamicNetwork net = one_arc(1, 1, 2);
  EXPECT_EQ(max_flow(build_time_expanded(net, 1)).value, 1);
  EXPECT_EQ(max_flow(build_time_expanded(net, 2)).value, 2);
}

TEST(MaxFlow, EmptySupply) {
  EXPECT_EQ(max_flow(build_time_expanded(one_arc(3, 1, 0), 3)).value, 0);
}

TEST(Feasible, SingleEdgeNeedsFiveSteps) {
  DirectedDynamicNetwork net = one_arc(1, 4, 2);
  EXPECT_FALSE(feasible(net, 4));
  EXPECT_TRUE(feasible(net, 5));
}

TEST(Feasible, ZeroSupplyImmediately) { EXPECT_TRUE(feasible(one_arc(1, 4, 0), 0)); }

TEST(Feasible, DisconnectedSourceNever) {
  DirectedDynamicNetwork net;
  net.vertex_count = 3;
  net.arcs = {{1, 2, 1, 1}};
  net.supply = {1, 0, 0};
  net.collector = 2;
  for (std::int64_t t = 0; t <= 20; ++t) EXPECT_FALSE(feasible(net, t));
}

DirectedDynamicNetwork random_directed(testing::Rng& rng, std::size_t vertices, std::int64_t max_transit) {
  DirectedDynamicNetwork net;
  net.vertex_count = vertices;
  net.supply.resize(vertices);
  for (auto& s : net.supply) s = testing::uniform(rng, 0, 3);
  net.collector = static_cast<VertexId>(testing::uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
  const auto arcs = testing::uniform(rng, 1, 6);
  for (std::int64_t i = 0; i < arcs; ++i) {
    auto a = static_cast<VertexId>(testing::uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
    auto b = static_cast<VertexId>(testing::uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
    if (a == b) continue;
    net.arcs.push_back({a, b, testing::uniform(rng, 0, 3), testing::uniform(rng, 0, max_transit)});
  }
  return net;
}

TEST(MaxFlow, AgreesWithCutEnumeration) {
  testing::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    DirectedDynamicNetwork net = random_directed(rng, static_cast<std::size_t>(testing::uniform(rng, 2, 3)), 1);
    for (std::int64_t horizon = 0; horizon <= 4; ++horizon) {
      EXPECT_EQ(max_flow(build_time_expanded(net, horizon)).value, testing::cut_enumeration_max_flow(net, horizon))
          << "case " << i << " T=" << horizon;
    }
  }
}

TEST(MaxFlow, ReturnsAValidIntegralFlow) {
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    DirectedDynamicNetwork net = random_directed(rng, 5, 3);
    const std::int64_t horizon = testing::uniform(rng, 0, 8);
    TimeExpandedGraph g = build_time_expanded(net, horizon);
    FlowResult flow = max_flow(g);
    ASSERT_EQ(flow.arc_flow.size(), g.arcs().size());

    std::vector<std::int64_t> balance(g.node_count(), 0);
    for (std::size_t a = 0; a < g.arcs().size(); ++a) {
      EXPECT_GE(flow.arc_flow[a], 0);
      EXPECT_LE(flow.arc_flow[a], g.arcs()[a].capacity);
      balance[g.arcs()[a].from] -= flow.arc_flow[a];
      balance[g.arcs()[a].to] += flow.arc_flow[a];
    }
    for (std::uint32_t node = 0; node < g.node_count(); ++node) {
      if (node != g.source() && node != g.sink()) EXPECT_EQ(balance[node], 0);
    }
    EXPECT_EQ(balance[g.sink()], flow.value);
    EXPECT_LE(flow.value, g.demand());
  }
}

TEST(MaxFlow, ValueNondecreasingAndFeasibilityMonotone) {
  testing::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    DirectedDynamicNetwork net = random_directed(rng, 5, 4);
    std::int64_t previous = 0;
    bool was_feasible = false;
    for (std::int64_t horizon = 0; horizon <= 15; ++horizon) {
      std::int64_t value = max_flow(build_time_expanded(net, horizon)).value;
      EXPECT_GE(value, previous);
      previous = value;
      bool now = feasible(net, horizon);
      EXPECT_EQ(now, value == net.total_supply());
      if (was_feasible) EXPECT_TRUE(now);
      was_feasible = now;
    }
  }
}

}  // namespace
}  // namespace sinkloc
