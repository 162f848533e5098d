/* cli.hpp -- command dispatch for the endgraph tool.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "endgraph/graph_core.hpp"

namespace endgraph::cli {

// Exit codes: a definite answer, a usage or input error, an Unknown verdict.
inline constexpr int kExitDefinite = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnknown = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// "(0,1),(5,6,1)" -> canonical edge set; "{}" or "" is empty.
EdgeSet parse_edges(const std::string &text);
// "0,1,2" -> vertex list.
std::vector<VertexId> parse_vertices(const std::string &text);

}  // namespace endgraph::cli
