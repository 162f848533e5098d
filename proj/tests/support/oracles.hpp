/* oracles.hpp -- brute-force reference computations for the test suite.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "endgraph/gadgets.hpp"
#include "endgraph/graph_core.hpp"
#include "endgraph/separation.hpp"

namespace endgraph::testing {

// Infinite components of G minus e read off a basepoint ball: pieces of the
// ball that meet the sphere of radius r and still reach r + margin.
struct BruteComp {
  std::array<int, 3> counts{};  // at r = 30, 35, 40
  bool stable() const { return counts[0] == counts[1] && counts[1] == counts[2]; }
  int value() const { return counts[2]; }
};
int sphere_pieces(const GraphOracle &g, const EdgeSet &e, int r, int margin);
BruteComp brute_comp(const GraphOracle &g, const EdgeSet &e);
// Stable brute-force Comp, or nullopt when the three radii disagree.
std::optional<int> brute_comp_value(const GraphOracle &g, const EdgeSet &e);
// brute-force Comp on a ball big enough for e; for ends and witness oracles.
int brute_comp_near(const GraphOracle &g, const EdgeSet &e, int margin = 12);

// Radius past which comp_approx has seen every finite pocket close and every
// pair of boundary vertices in a common component meet.
int stabilization_radius(const GraphOracle &g, const EdgeSet &e);

// Plain bidirectional BFS distance in g; nullopt beyond max_depth.
std::optional<int> reference_distance(const GraphOracle &g, VertexId a, VertexId b, int max_depth);

// A family member with its analytic ends certificate.
struct Fixture {
  std::string family;
  std::string spec;
  GraphPtr graph;
  EndsCertificate cert;
};
// All copies of the edge {a, b}.
EdgeSet all_copies(const GraphOracle &g, VertexId a, VertexId b);
Fixture make_fixture(const std::string &family, const std::string &spec);
// Fixtures of the separation families used by the acceptance suite.
std::vector<Fixture> separation_fixtures();
// Edge sets to query on a fixture: singletons, pairs and seeded random subsets.
std::vector<EdgeSet> query_sets(const Fixture &f, unsigned seed, int count);

}  // namespace endgraph::testing
