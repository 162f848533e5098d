/* eulerian_test.cpp -- parity scans and the one-way and two-way checks.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <gtest/gtest.h>

#include "endgraph/eulerian.hpp"
#include "endgraph/gadgets.hpp"
#include "support/oracles.hpp"

namespace endgraph {
namespace {

TEST(OddScan, Lines) {
  EXPECT_EQ(odd_vertex_scan(*nline(), 5), (std::vector<VertexId>{0}));
  EXPECT_TRUE(odd_vertex_scan(*zline(), 5).empty());
}

TEST(OddScan, SingleMindChange) {
  auto g = graph_from_spec("sigma21:changes@4");
  EXPECT_EQ(odd_vertex_scan(*g, 10), (std::vector<VertexId>{4}));
}

TEST(OddScan, TwoMindChanges) {
  auto g = graph_from_spec("sigma21:changes@3,7");
  EXPECT_EQ(odd_vertex_scan(*g, 10), (std::vector<VertexId>{3, 7}));
}

TEST(InducesEven, Basics) {
  EXPECT_TRUE(induces_even_subgraph({}));
  EXPECT_TRUE(induces_even_subgraph({make_edge(0, 1, 0), make_edge(0, 1, 1)}));
  EXPECT_TRUE(induces_even_subgraph({make_edge(3, 3)}));
  EXPECT_FALSE(induces_even_subgraph({make_edge(0, 1)}));
}

TEST(OneWay, Ray) {
  auto v = check_one_way(*nline(), {1, {}}, ParityCertificate{2}, Fuel{});
  EXPECT_TRUE(v.holds()) << to_string(v);
}

TEST(OneWay, TwoOddVerticesWithoutCertificate) {
  auto g = graph_from_spec("sigma21:changes@3,7");
  auto v = check_one_way(*g, {1, {}}, std::nullopt, Fuel{10, 1'000'000});
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.odd_vertices, (std::vector<VertexId>{3, 7}));
}

TEST(OneWay, NoOddVertex) {
  auto g = graph_from_spec("sigma21:changes-none");
  auto v = check_one_way(*g, {1, {}}, ParityCertificate{10}, Fuel{});
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.reason, "no odd vertex");
}

TEST(OneWay, UncertifiedSingleOddIsUnknown) {
  auto g = graph_from_spec("sigma21:changes@4");
  EXPECT_TRUE(check_one_way(*g, {1, {}}, std::nullopt, Fuel{10, 1'000'000}).unknown());
}

TEST(OneWay, WrongEndCount) {
  EXPECT_TRUE(check_one_way(*zline(), {2, {make_edge(0, 1)}}, ParityCertificate{3}, Fuel{}).fails());
}

TEST(TwoWay, DoubledChainOneEnd) {
  auto g = graph_from_spec("doubled:events-all");
  auto v = check_two_way(*g, {1, {}}, ParityCertificate{0}, std::nullopt, Fuel{});
  EXPECT_TRUE(v.holds()) << to_string(v);
}

TEST(TwoWay, DoubledChainTwoEndsHasEvenSeparator) {
  auto g = graph_from_spec("doubled:events@2,5");
  EndsCertificate cert{2, testing::all_copies(*g, 6, 7)};
  auto w2 = testing::all_copies(*g, -7, -6);
  cert.witness.insert(w2.begin(), w2.end());
  auto v = check_two_way(*g, cert, ParityCertificate{8}, LocalizationCertificate{8}, Fuel{});
  ASSERT_TRUE(v.fails()) << to_string(v);
  EXPECT_TRUE(induces_even_subgraph(v.separating_set));
  EXPECT_GE(testing::brute_comp_near(*g, v.separating_set), 2);
}

TEST(TwoWay, TwoEndedLineFollowsMindChangeParity) {
  for (int k = 0; k <= 6; ++k) {
    std::vector<int> stages;
    for (int i = 0; i < k; ++i) stages.push_back(2 + 3 * i);
    auto s = Schedule::changes(stages);
    auto f = testing::make_fixture("delta2", "delta2:" + s.literal());
    int r = s.last_stage() + 3;
    auto v = check_two_way(*f.graph, f.cert, ParityCertificate{r}, LocalizationCertificate{r}, Fuel{});
    EXPECT_EQ(v.holds(), k % 2 == 1) << f.spec << " " << to_string(v);
    EXPECT_FALSE(v.unknown());
  }
}

TEST(TwoWay, OddVertexFails) {
  auto v = check_two_way(*nline(), {1, {}}, ParityCertificate{3}, std::nullopt, Fuel{});
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.odd_vertices, (std::vector<VertexId>{0}));
}

TEST(TwoWay, HaltingRay) {
  auto never = graph_from_spec("pi1:never");
  auto halts = graph_from_spec("pi1:halt@4");
  EXPECT_TRUE(check_two_way(*never, {1, {}}, ParityCertificate{12}, std::nullopt, Fuel{}).holds());
  EXPECT_TRUE(check_two_way(*halts, {1, {}}, ParityCertificate{7}, std::nullopt, Fuel{}).fails());
}

TEST(Verdict, Rendering) {
  EulerVerdict v;
  v.value = EulerVerdict::Value::Fails;
  v.clause = "one end";
  EXPECT_EQ(to_string(v), "Fails(one end)");
}

}  // namespace
}  // namespace endgraph
