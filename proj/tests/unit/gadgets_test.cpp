/* gadgets_test.cpp -- schedules, family structure and the tree product.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <gtest/gtest.h>

#include <random>

#include "endgraph/gadgets.hpp"
#include "support/oracles.hpp"

namespace endgraph {
namespace {

int ends_seen(const GraphOracle &g, int r) {
  return testing::brute_comp_near(g, sphere_shell(g, r));
}

TEST(Schedule, LiteralsRoundTrip) {
  for (const char *lit : {"never", "halt@3", "events@1,4,9", "events@2,5+", "events-all",
                          "events-none", "changes@2,5", "changes-none"})
    EXPECT_EQ(Schedule::parse(lit).literal(), lit);
}

TEST(Schedule, RejectsMalformed) {
  for (const char *lit : {"", "halt@", "halt@x", "events@3,1", "changes@-1", "bogus", "events@1,,2"})
    EXPECT_THROW(Schedule::parse(lit), ScheduleSyntaxError) << lit;
}

TEST(Schedule, Semantics) {
  auto h = Schedule::halt_at(3);
  EXPECT_FALSE(h.halted_by(2));
  EXPECT_TRUE(h.halted_by(3));
  EXPECT_TRUE(h.halts_exactly_at(3));
  EXPECT_FALSE(Schedule::never().halted_by(1000));

  auto e = Schedule::parse("events@2,5+");
  EXPECT_TRUE(e.event_at(2));
  EXPECT_FALSE(e.event_at(3));
  EXPECT_TRUE(e.event_at(5));
  EXPECT_TRUE(e.event_at(50));

  auto c = Schedule::changes({2, 5});
  EXPECT_EQ(c.value_at(0), 0);
  EXPECT_EQ(c.value_at(2), 1);
  EXPECT_EQ(c.value_at(4), 1);
  EXPECT_EQ(c.value_at(5), 0);
  EXPECT_TRUE(c.changes_at(5));
  EXPECT_EQ(c.last_stage(), 5);
}

TEST(Gadgets, KindMustMatchSchedule) {
  EXPECT_THROW(build_gadget({GadgetKind::Tag::LinesWithSticks}, Schedule::events_all()),
               KindScheduleMismatch);
  EXPECT_THROW(graph_from_spec("cycle-chain"), std::invalid_argument);
  EXPECT_THROW(graph_from_spec("zline:never"), std::invalid_argument);
  EXPECT_THROW(graph_from_spec("no-such-graph"), std::invalid_argument);
}

TEST(Gadgets, CycleChainEnds) {
  EXPECT_EQ(ends_seen(*graph_from_spec("cycle-chain:events-all"), 12), 1);
  EXPECT_EQ(ends_seen(*graph_from_spec("cycle-chain:events@2,5"), 12), 2);
}

TEST(Gadgets, CycleChainWithRaysEnds) {
  EXPECT_EQ(ends_seen(*graph_from_spec("cycle-chain-rays3:events-all"), 12), 3);
  EXPECT_EQ(ends_seen(*graph_from_spec("cycle-chain-rays3:events@1,6"), 14), 4);
}

TEST(Gadgets, ParityRayOddVertices) {
  auto one = graph_from_spec("sigma21:changes@4");
  auto two = graph_from_spec("sigma21:changes@3,7");
  std::vector<VertexId> odd1, odd2;
  for (VertexId v : ball(*one, one->basepoint(), 12).vertices)
    if (degree(*one, v) % 2) odd1.push_back(v);
  for (VertexId v : ball(*two, two->basepoint(), 12).vertices)
    if (degree(*two, v) % 2) odd2.push_back(v);
  EXPECT_EQ(odd1, (std::vector<VertexId>{4}));
  EXPECT_EQ(odd2, (std::vector<VertexId>{3, 7}));
}

TEST(Gadgets, LinesWithSticks) {
  auto never = graph_from_spec("lines-with-sticks:never");
  auto halts = graph_from_spec("lines-with-sticks:halt@3");
  EXPECT_EQ(testing::brute_comp_near(*never, {make_edge(0, 1)}), 2);
  EXPECT_EQ(testing::brute_comp_near(*halts, {make_edge(0, 1)}), 1);
  EXPECT_EQ(testing::brute_comp_near(*halts, {make_edge(5, 6)}), 2);
  EXPECT_EQ(multiplicity(*halts, -4, 4), 1);
}

TEST(Gadgets, CombTeethFollowEvents) {
  auto g = graph_from_spec("comb:events@1,3");
  auto tooth = [&](VertexId c) { return pack_pair(c, 1); };
  EXPECT_TRUE(g->contains(tooth(1)));
  EXPECT_TRUE(g->contains(pack_pair(3, 40)));
  EXPECT_FALSE(g->contains(pack_pair(2, 5)));
}

TEST(Gadgets, RegistryListsEveryKey) {
  for (const auto &info : gadget_registry()) {
    if (info.key == "cycle-chain-raysK") continue;
    std::string spec = info.key;
    if (info.schedule_kind == "events") spec += ":events@2,5";
    if (info.schedule_kind == "changes") spec += ":changes@2,5";
    if (info.schedule_kind == "halt") spec += ":halt@3";
    auto g = graph_from_spec(spec);
    EXPECT_TRUE(g->contains(g->basepoint())) << spec;
    EXPECT_FALSE(g->neighbors(g->basepoint()).empty()) << spec;
  }
}

TEST(Product, Degrees) {
  auto rays = product_graph(nline(), nline());
  EXPECT_EQ(degree(*rays, rays->vertex(0, 0)), 2);
  EXPECT_EQ(degree(*rays, rays->vertex(3, 5)), 4);
  auto trees = product_graph(full_binary_tree(), full_binary_tree());
  EXPECT_EQ(degree(*trees, trees->basepoint()), 4);
}

TEST(Product, PackingRoundTrips) {
  auto trees = product_graph(full_binary_tree(), full_binary_tree());
  for (VertexId a = 1; a < 40; ++a)
    for (VertexId b = 1; b < 40; ++b)
      EXPECT_EQ(trees->coordinates(trees->vertex(a, b)), std::pair(a, b));
  EXPECT_FALSE(trees->contains(-5));
}

TEST(LambdaDistance, Examples) {
  auto rays = product_graph(nline(), nline());
  EXPECT_EQ(value_of(lambda_distance(*rays, rays->vertex(0, 0), rays->vertex(3, 5), Fuel{})), 8);
  auto trees = product_graph(full_binary_tree(), full_binary_tree());
  VertexId a = trees->vertex(1, 2), b = trees->vertex(2, 1);
  EXPECT_EQ(value_of(lambda_distance(*trees, a, a, Fuel{})), 0);
  EXPECT_EQ(value_of(lambda_distance(*trees, a, b, Fuel{})), 2);
}

TEST(LambdaDistance, SymmetricAndTriangle) {
  auto trees = product_graph(full_binary_tree(), full_binary_tree());
  auto b = ball(*trees, trees->basepoint(), 5);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, b.vertices.size() - 1);
  auto d = [&](VertexId x, VertexId y) { return value_of(lambda_distance(*trees, x, y, Fuel{})); };
  for (int i = 0; i < 40; ++i) {
    VertexId x = b.vertices[pick(rng)], y = b.vertices[pick(rng)], z = b.vertices[pick(rng)];
    EXPECT_EQ(d(x, y), d(y, x));
    EXPECT_LE(d(x, z), d(x, y) + d(y, z));
  }
}

}  // namespace
}  // namespace endgraph
