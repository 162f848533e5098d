/* automatic_test.cpp -- relation automata, counting and model checking.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <gtest/gtest.h>

#include <random>

#include "endgraph/automatic.hpp"
#include "support/brute_automatic.hpp"

namespace endgraph::automatic {
namespace {

Dfa all_words(int sigma) { return Dfa::trivial(sigma, true); }

TEST(Dfa, MinimizeAndEquivalence) {
  // Two-state automaton for words of even length over one symbol, with a
  // redundant copy of each state.
  Dfa d;
  d.num_states = 4;
  d.num_letters = 1;
  d.delta = {1, 2, 3, 0};
  d.accepting = {1, 0, 1, 0};
  auto m = minimize(d);
  EXPECT_EQ(m.num_states, 2);
  EXPECT_TRUE(equivalent(d, m));
  EXPECT_TRUE(m.accepts({0, 0}));
  EXPECT_FALSE(m.accepts({0}));
}

TEST(Relations, ContradictionIsEmpty) {
  auto p = nline_presentation();
  auto a = p.adjacency;
  auto both = relation_and(a, relation_not(a, p.domain));
  EXPECT_TRUE(is_empty(both));
}

TEST(Relations, ProjectionOfLineAdjacencyIsTheDomain) {
  auto p = nline_presentation();
  auto r = evaluate(p, parse_formula("(exists v (adj u v))"));
  EXPECT_TRUE(equivalent(r.automaton, unary_from_dfa(p.domain, p.sigma())));
}

TEST(Relations, PermuteTracksTwiceIsIdentity) {
  auto p = zline_presentation();
  auto back = permute_tracks(permute_tracks(p.adjacency, {1, 0}), {1, 0});
  EXPECT_TRUE(equivalent(back, p.adjacency));
}

TEST(Relations, LlexOrderIsStrictAndTotal) {
  auto less = llex_less(2);
  auto greater = permute_tracks(less, {1, 0});
  auto id = identity_relation(2);
  EXPECT_TRUE(is_empty(relation_and(less, greater)));
  EXPECT_TRUE(is_empty(relation_and(less, id)));
  auto any = relation_or(relation_or(less, greater), id);
  EXPECT_TRUE(equivalent(any, domain_power(all_words(2), 2)));
  EXPECT_TRUE(less.accepts({{1}, {0, 0}}));
  EXPECT_TRUE(less.accepts({{0, 1}, {1, 0}}));
  EXPECT_FALSE(less.accepts({{1, 0}, {0, 1}}));
}

TEST(Relations, ArityChecks) {
  auto p = nline_presentation();
  EXPECT_THROW(relation_and(p.adjacency, unary_from_dfa(p.domain, 1)), ArityMismatch);
  EXPECT_THROW(project_exists(p.adjacency, 2), ArityMismatch);
}

TEST(Semiring, AxiomsHoldExhaustively) {
  for (int t = 1; t <= 4; ++t) {
    CountSemiring sr(t);
    auto el = sr.elements();
    for (const auto &a : el) {
      EXPECT_EQ(sr.add(a, sr.zero()), a);
      EXPECT_EQ(sr.mul(a, sr.one()), a);
      EXPECT_EQ(sr.mul(a, sr.zero()), sr.zero());
      for (const auto &b : el) {
        EXPECT_EQ(sr.add(a, b), sr.add(b, a));
        EXPECT_EQ(sr.mul(a, b), sr.mul(b, a));
        for (const auto &c : el) {
          EXPECT_EQ(sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c)));
          EXPECT_EQ(sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c)));
          EXPECT_EQ(sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c)));
        }
      }
    }
  }
}

TEST(Semiring, AgreesWithIntegers) {
  CountSemiring sr(2);
  for (std::uint64_t a = 0; a < 12; ++a)
    for (std::uint64_t b = 0; b < 12; ++b) {
      EXPECT_EQ(sr.add(sr.from(a), sr.from(b)), sr.from(a + b));
      EXPECT_EQ(sr.mul(sr.from(a), sr.from(b)), sr.from(a * b));
    }
  EXPECT_TRUE(matches(sr.from(7), CountMode::Odd));
  EXPECT_TRUE(matches(sr.from(0), CountMode::Even));
  EXPECT_TRUE(matches(sr.infinite(), CountMode::Infinite));
  EXPECT_FALSE(matches(sr.infinite(), CountMode::Even));
}

TEST(Counting, OddDegreeOnTheRayIsVertexZero) {
  auto p = nline_presentation();
  auto odd = counting_project(p.adjacency, 1, CountMode::Odd);
  auto zero = evaluate(p, parse_formula("(forall v (not (adj v u)))"));
  // Only the endpoint has one neighbor; everything else has two.
  auto only = relation_and(odd, unary_from_dfa(p.domain, p.sigma()));
  long accepted = 0;
  std::vector<int> w;
  for (int len = 0; len <= 6; ++len) {
    w.assign(len, 0);
    accepted += only.accepts({w});
  }
  EXPECT_EQ(accepted, 1);
  EXPECT_TRUE(is_empty(relation_and(zero.automaton, odd)));
}

TEST(Counting, GridDegreesAreEven) {
  auto p = grid_presentation();
  auto even = relation_and(counting_project(p.adjacency, 1, CountMode::Even),
                           unary_from_dfa(p.domain, p.sigma()));
  EXPECT_TRUE(equivalent(even, unary_from_dfa(p.domain, p.sigma())));
}

TEST(Counting, LongerSectionsAreInfinite) {
  // Pairs (u, v) with |v| >= |u| over one symbol: every section is infinite.
  RelationAutomaton r;
  r.arity = 2;
  r.sigma = 1;
  Dfa d;
  d.num_letters = 4;
  d.num_states = 3;  // 0 both running, 1 u ended, 2 sink
  d.delta.assign(12, 2);
  d.delta[0 * 4 + r.encode({0, 0})] = 0;
  d.delta[0 * 4 + r.encode({1, 0})] = 1;
  d.delta[1 * 4 + r.encode({1, 0})] = 1;
  d.accepting = {1, 1, 0};
  r.dfa = d;
  auto inf = counting_project(r, 1, CountMode::Infinite);
  EXPECT_TRUE(equivalent(inf, unary_from_dfa(all_words(1), 1)));
}

TEST(Normalize, IdentityIsAFixpoint) {
  auto p = nline_presentation();
  auto q = normalize(p);
  EXPECT_TRUE(equivalent(q.domain, p.domain));
  EXPECT_TRUE(equivalent(q.adjacency, p.adjacency));
}

TEST(Normalize, DuplicateEncodingsCollapse) {
  // Domain 1*(0|eps) over {0, 1}; 1^n and 1^n 0 name the same vertex.
  Presentation p;
  p.symbols = {"0", "1"};
  Dfa dom;
  dom.num_letters = 2;
  dom.num_states = 3;
  dom.delta = {1, 0, 2, 2, 2, 2};
  dom.accepting = {1, 1, 0};
  p.domain = dom;
  p.adjacency = relation_and(domain_power(dom, 2), permute_tracks(llex_less(2), {0, 1}));
  auto eq_pad = parse_presentation(
      "alphabet 0 1\n"
      "domain\n states a b c\n start a\n accept a b\n a 0 b\n a 1 a\n b 0 c\n b 1 c\n"
      "adjacency\n states s\n start s\n accept s\n"
      "equality\n states s t\n start s\n accept s t\n s 0|0 s\n s 1|1 s\n s #|0 t\n s 0|# t\n");
  p.equality = eq_pad.equality;
  auto q = normalize(p);
  Dfa ones;
  ones.num_letters = 2;
  ones.num_states = 2;
  ones.delta = {1, 0, 1, 1};
  ones.accepting = {1, 0};
  EXPECT_TRUE(equivalent(q.domain, ones));
}

TEST(TextFormat, RoundTripsPresets) {
  for (const auto &p : {nline_presentation(), zline_presentation(), grid_presentation()}) {
    auto q = parse_presentation(to_text(p));
    EXPECT_EQ(q.symbols, p.symbols);
    EXPECT_TRUE(equivalent(q.domain, p.domain));
    EXPECT_TRUE(equivalent(q.adjacency, p.adjacency));
  }
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(parse_presentation("domain\n"), PresentationSyntaxError);
  EXPECT_THROW(parse_presentation("alphabet a\ndomain\n states q\n start r\n"),
               PresentationSyntaxError);
  EXPECT_THROW(parse_formula("(exists v"), FormulaSyntaxError);
  EXPECT_THROW(parse_formula("(adj u)"), FormulaSyntaxError);
  EXPECT_THROW(eval_sentence(nline_presentation(), parse_formula("(adj u v)")), UnboundVariable);
}

TEST(Formula, PrintAndFreeVariables) {
  auto f = parse_formula("(forall u (exists-even v (adj u v)))");
  EXPECT_EQ(to_string(f), "(forall u (exists-even v (adj u v)))");
  EXPECT_TRUE(free_variables(f).empty());
  EXPECT_EQ(free_variables(parse_formula("(exists v (adj u v))")), (std::set<std::string>{"u"}));
}

TEST(Sentences, EulerConditions) {
  auto nline = nline_presentation();
  auto grid = grid_presentation();
  EXPECT_TRUE(eval_sentence(nline, parse_formula(kOneWayFormula)));
  EXPECT_FALSE(eval_sentence(nline, parse_formula(kTwoWayFormula)));
  EXPECT_TRUE(eval_sentence(grid, parse_formula(kTwoWayFormula)));
  EXPECT_FALSE(decide_eulerian_automatic(grid, EulerKind::OneWay));
  EXPECT_TRUE(decide_eulerian_automatic(zline_presentation(), EulerKind::TwoWay));
}

TEST(Sentences, LineFacts) {
  auto z = zline_presentation();
  EXPECT_TRUE(eval_sentence(z, parse_formula("(forall u (exists-inf v (not (adj u v))))")));
  EXPECT_FALSE(eval_sentence(z, parse_formula("(exists u (adj u u))")));
  EXPECT_TRUE(eval_sentence(z, parse_formula("(forall u (forall v (implies (adj u v) (adj v u))))")));
}

TEST(Battery, AgreesWithReferenceOnRandomPresentations) {
  std::mt19937 rng(99);
  for (int i = 0; i < 6; ++i) {
    int sigma = 1 + i % 2;
    auto p = testing::random_presentation(rng, sigma, 3);
    for (const auto &f : testing::formula_battery()) {
      auto rep = testing::compare_on_tuples(p, f, sigma == 1 ? 6 : 3);
      EXPECT_EQ(rep.mismatches, 0) << f << ": " << rep.first_mismatch;
    }
  }
}

}  // namespace
}  // namespace endgraph::automatic
