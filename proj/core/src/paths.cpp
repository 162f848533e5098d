/* paths.cpp -- extension queries and greedy infinite paths.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/paths.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace endgraph {

void validate_path(const GraphOracle &g, const SimplePath &p) {
  if (p.empty()) throw NotASimplePath("empty path");
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) throw NotASimplePath("not a vertex: " + std::to_string(p[i]));
    if (!seen.insert(p[i]).second)
      throw NotASimplePath("vertex repeated: " + std::to_string(p[i]));
    if (i > 0 && multiplicity(g, p[i - 1], p[i]) == 0)
      throw NotASimplePath("not adjacent: " + std::to_string(p[i - 1]) + ", " +
                           std::to_string(p[i]));
  }
}

namespace {

TriBool extendable_unchecked(const GraphOracle &g, const SimplePath &p,
                             const EndsCertificate &cert, const Fuel &fuel) {
  EdgeSet e;
  for (VertexId v : p) {
    auto at = edges_at(g, v);
    e.insert(at.begin(), at.end());
  }
  std::unordered_set<VertexId> used(p.begin(), p.end());
  CertifiedSeparator sep(g, e, cert, fuel);
  if (!sep.ready()) return TriBool::unknown(sep.fuel_spent());
  auto part = sep.partition(e);
  std::unordered_set<VertexId> infinite;
  for (const auto &group : part.infinite_groups) infinite.insert(group.begin(), group.end());
  for (const auto &n : g.neighbors(p.back()))
    if (!used.count(n.id) && infinite.count(n.id)) return TriBool::yes();
  return TriBool::no();
}

}  // namespace

TriBool decide_extendable(const GraphOracle &g, const SimplePath &p, const EndsCertificate &cert,
                          const Fuel &fuel) {
  validate_path(g, p);
  return extendable_unchecked(g, p, cert, fuel);
}

Outcome<SimplePath> greedy_infinite_path(const GraphOracle &g, VertexId start,
                                         const EndsCertificate &cert, int length,
                                         const Fuel &fuel) {
  if (length < 0) throw std::invalid_argument("negative path length");
  require_vertex(g, start);
  SimplePath path{start};
  auto first = extendable_unchecked(g, path, cert, fuel);
  if (first.is_unknown()) return Unknown{first.fuel_spent};
  if (first.is_no()) throw NoExtension("no infinite simple path starts at " + std::to_string(start));
  std::unordered_set<VertexId> used{start};
  while (static_cast<int>(path.size()) <= length) {
    bool extended = false;
    for (const auto &n : g.neighbors(path.back())) {
      if (used.count(n.id)) continue;
      path.push_back(n.id);
      auto t = extendable_unchecked(g, path, cert, fuel);
      if (t.is_unknown()) return Unknown{t.fuel_spent};
      if (t.is_yes()) {
        used.insert(n.id);
        extended = true;
        break;
      }
      path.pop_back();
    }
    if (!extended)
      throw NoExtension("extendable path has no extendable successor; certificate unsound");
  }
  return path;
}

bool tree_sep_from_path(const GraphOracle &g, const EdgeSet &e, const PathPredicate &path_oracle) {
  validate_edges(g, e);
  RemovedEdges removed(e);
  std::set<VertexId> endpoints;
  for (const auto &x : e) {
    endpoints.insert(x.u);
    endpoints.insert(x.v);
  }
  std::set<VertexId> done;
  int infinite = 0;
  for (VertexId u : boundary_vertices(g, e)) {
    if (done.count(u)) continue;
    int depth = 0;
    for (VertexId w : endpoints) {
      auto d = bfs_distance(g, u, w, 1 << 20);
      if (!d) throw std::invalid_argument("graph is not connected");
      depth = std::max(depth, *d);
    }
    ++depth;
    // BFS in the component of u, keeping parents to read off tree paths.
    std::unordered_map<VertexId, VertexId> parent{{u, u}};
    std::vector<VertexId> layer{u};
    for (int d = 0; d < depth && !layer.empty(); ++d) {
      std::vector<VertexId> next;
      for (VertexId v : layer)
        for (VertexId w : remaining_neighbors(g, removed, v))
          if (parent.emplace(w, v).second) next.push_back(w);
      layer = std::move(next);
    }
    for (const auto &[v, p] : parent)
      if (endpoints.count(v)) done.insert(v);
    for (VertexId z : layer) {
      SimplePath path{z};
      while (path.back() != u) path.push_back(parent.at(path.back()));
      std::reverse(path.begin(), path.end());
      if (path_oracle(path)) {
        ++infinite;
        break;
      }
    }
  }
  return infinite >= 2;
}

}  // namespace endgraph
