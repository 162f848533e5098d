/* paths.hpp -- extending finite simple paths to infinite ones.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "endgraph/separation.hpp"

namespace endgraph {

using SimplePath = std::vector<VertexId>;

class NotASimplePath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws NotASimplePath unless p is nonempty, valid, adjacent and repeat-free.
void validate_path(const GraphOracle &g, const SimplePath &p);

// Yes iff p extends to an infinite simple path: some neighbor of the last
// vertex lies in an infinite component of G minus the vertices of p.
TriBool decide_extendable(const GraphOracle &g, const SimplePath &p, const EndsCertificate &cert,
                          const Fuel &fuel);

// `length` edges chosen greedily, least extendable neighbor first, no
// backtracking. Unknown if some extension query runs out of fuel.
Outcome<SimplePath> greedy_infinite_path(const GraphOracle &g, VertexId start,
                                         const EndsCertificate &cert, int length,
                                         const Fuel &fuel);

using PathPredicate = std::function<bool(const SimplePath &)>;

// Separation in a tree from a path oracle. For each boundary vertex u the
// component C_u of G minus e is infinite iff some vertex z at depth D below u
// (D beyond every endpoint of e) has the tree path u..z extendable.
bool tree_sep_from_path(const GraphOracle &g, const EdgeSet &e, const PathPredicate &path_oracle);

}  // namespace endgraph
