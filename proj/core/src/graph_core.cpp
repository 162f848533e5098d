/* graph_core.cpp -- balls, finite components and DOT export.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/graph_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace endgraph {

std::string to_string(const EdgeRef &e) {
  std::string s = "(" + std::to_string(e.u) + "," + std::to_string(e.v);
  if (e.slot != 0) s += "," + std::to_string(e.slot);
  return s + ")";
}

std::string to_string(const EdgeSet &e) {
  std::string s;
  for (const auto &x : e) {
    if (!s.empty()) s += ",";
    s += to_string(x);
  }
  return s.empty() ? "{}" : s;
}

RemovedEdges::RemovedEdges(const EdgeSet &e) {
  for (const auto &x : e) add(x);
}

void RemovedEdges::add(const EdgeRef &e) { ++counts_[{e.u, e.v}]; }

void RemovedEdges::add_all(const GraphOracle &g, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  counts_[{a, b}] = multiplicity(g, a, b);
}

int RemovedEdges::removed(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = counts_.find({a, b});
  return it == counts_.end() ? 0 : it->second;
}

EdgeSet RemovedEdges::to_edge_set() const {
  EdgeSet out;
  for (const auto &[k, c] : counts_)
    for (int s = 0; s < c; ++s) out.insert(EdgeRef{k.first, k.second, s});
  return out;
}

void require_vertex(const GraphOracle &g, VertexId v) {
  if (!g.contains(v)) throw InvalidVertex(v);
}

int degree(const GraphOracle &g, VertexId v) {
  require_vertex(g, v);
  int d = 0;
  for (const auto &n : g.neighbors(v)) d += n.id == v ? 2 * n.multiplicity : n.multiplicity;
  return d;
}

int multiplicity(const GraphOracle &g, VertexId u, VertexId v) {
  require_vertex(g, u);
  for (const auto &n : g.neighbors(u))
    if (n.id == v) return n.multiplicity;
  return 0;
}

void validate_edges(const GraphOracle &g, const EdgeSet &e) {
  for (const auto &x : e) {
    if (x.u > x.v) throw InvalidEdge("edge not in canonical orientation: " + to_string(x));
    if (!g.contains(x.u) || !g.contains(x.v))
      throw InvalidEdge("edge endpoint not a vertex: " + to_string(x));
    if (x.slot < 0 || x.slot >= multiplicity(g, x.u, x.v))
      throw InvalidEdge("no such edge: " + to_string(x));
  }
}

EdgeSet edges_at(const GraphOracle &g, VertexId v) {
  require_vertex(g, v);
  EdgeSet out;
  for (const auto &n : g.neighbors(v))
    for (int s = 0; s < n.multiplicity; ++s) out.insert(make_edge(v, n.id, s));
  return out;
}

std::vector<VertexId> remaining_neighbors(const GraphOracle &g, const RemovedEdges &removed,
                                          VertexId v) {
  std::vector<VertexId> out;
  for (const auto &n : g.neighbors(v))
    if (n.id != v && n.multiplicity > removed.removed(v, n.id)) out.push_back(n.id);
  return out;
}

BallGrower::BallGrower(const GraphOracle &g, VertexId center) : g_(g) {
  require_vertex(g, center);
  dist_[center] = 0;
  layers_.push_back({center});
}

bool BallGrower::grow_to(int r, std::int64_t *steps, std::int64_t max_steps) {
  while (radius_ < r) {
    std::vector<VertexId> next;
    for (VertexId v : layers_[radius_]) {
      if (steps != nullptr) {
        if (max_steps >= 0 && *steps >= max_steps) return false;
        ++*steps;
      }
      for (const auto &n : g_.neighbors(v)) {
        if (dist_.emplace(n.id, radius_ + 1).second) next.push_back(n.id);
      }
    }
    std::sort(next.begin(), next.end());
    layers_.push_back(std::move(next));
    ++radius_;
  }
  return true;
}

std::optional<int> BallGrower::distance(VertexId v) const {
  auto it = dist_.find(v);
  if (it == dist_.end() || it->second > radius_) return std::nullopt;
  return it->second;
}

EdgeSet BallGrower::edges_within(int r) const {
  EdgeSet out;
  for (int d = 0; d <= r && d <= radius_; ++d)
    for (VertexId v : layers_[d])
      for (const auto &n : g_.neighbors(v)) {
        auto dn = distance(n.id);
        if (!dn || *dn > r || n.id < v) continue;
        for (int s = 0; s < n.multiplicity; ++s) out.insert(make_edge(v, n.id, s));
      }
  return out;
}

EdgeSet BallGrower::shell(int r) const {
  EdgeSet out;
  for (int d = std::max(0, r - 1); d <= r && d <= radius_; ++d)
    for (VertexId v : layers_[d])
      for (const auto &n : g_.neighbors(v)) {
        auto dn = distance(n.id);
        if (!dn || *dn > r || *dn < r - 1 || n.id < v) continue;
        for (int s = 0; s < n.multiplicity; ++s) out.insert(make_edge(v, n.id, s));
      }
  return out;
}

EdgeSet sphere_shell(const GraphOracle &g, int r) {
  BallGrower grower(g, g.basepoint());
  grower.grow_to(r);
  return grower.shell(r);
}

Ball ball(const GraphOracle &g, VertexId center, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  BallGrower grower(g, center);
  grower.grow_to(radius);
  Ball b;
  b.center = center;
  b.radius = radius;
  for (int d = 0; d <= radius; ++d)
    for (VertexId v : grower.layer(d)) {
      b.vertices.push_back(v);
      b.distances[v] = d;
    }
  std::sort(b.vertices.begin(), b.vertices.end());
  auto edges = grower.edges_within(radius);
  b.edges.assign(edges.begin(), edges.end());
  return b;
}

std::vector<std::vector<VertexId>> finite_components(const std::vector<VertexId> &vertices,
                                                     const std::vector<EdgeRef> &edges,
                                                     const EdgeSet &removed) {
  std::unordered_map<VertexId, std::size_t> index;
  for (VertexId v : vertices) index.emplace(v, index.size());
  DisjointSets ds(index.size());
  for (const auto &e : edges) {
    if (removed.count(e) != 0) continue;
    auto a = index.find(e.u), b = index.find(e.v);
    if (a == index.end() || b == index.end()) continue;
    ds.unite(a->second, b->second);
  }
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (const auto &[v, i] : index) groups[ds.find(i)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto &[root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> bfs_distance(const GraphOracle &g, VertexId a, VertexId b, int max_radius,
                                std::int64_t max_steps) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) return 0;
  std::unordered_map<VertexId, int> da{{a, 0}}, db{{b, 0}};
  std::vector<VertexId> fa{a}, fb{b};
  int ra = 0, rb = 0;
  std::int64_t steps = 0;
  while (ra + rb < max_radius && !fa.empty() && !fb.empty()) {
    bool grow_a = fa.size() <= fb.size();
    auto &frontier = grow_a ? fa : fb;
    auto &mine = grow_a ? da : db;
    auto &other = grow_a ? db : da;
    int &r = grow_a ? ra : rb;
    std::vector<VertexId> next;
    std::optional<int> best;
    for (VertexId v : frontier) {
      if (max_steps >= 0 && ++steps > max_steps) return std::nullopt;
      for (const auto &n : g.neighbors(v)) {
        if (!mine.emplace(n.id, r + 1).second) continue;
        next.push_back(n.id);
        auto it = other.find(n.id);
        if (it != other.end()) {
          int total = r + 1 + it->second;
          if (!best || total < *best) best = total;
        }
      }
    }
    ++r;
    if (best) return best;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<VertexId> symmetry_violations(const GraphOracle &g, VertexId center, int radius) {
  std::vector<VertexId> bad;
  for (VertexId v : ball(g, center, radius).vertices) {
    auto ns = g.neighbors(v);
    bool ok = std::is_sorted(ns.begin(), ns.end(),
                             [](const Neighbor &x, const Neighbor &y) { return x.id < y.id; });
    for (const auto &n : ns) {
      if (!ok) break;
      if (n.multiplicity <= 0 || !g.contains(n.id)) {
        ok = false;
        break;
      }
      int back = 0;
      for (const auto &m : g.neighbors(n.id))
        if (m.id == v) back = m.multiplicity;
      ok = back == n.multiplicity;
    }
    if (!ok) bad.push_back(v);
  }
  return bad;
}

std::string to_dot(const GraphOracle &g, const Ball &b, const EdgeSet &removed) {
  std::ostringstream out;
  out << "graph ball {\n  // " << g.name() << ", center " << b.center << ", radius " << b.radius
      << "\n";
  for (VertexId v : b.vertices) {
    out << "  \"" << v << "\" [label=\"" << g.label(v) << "\"";
    if (v == b.center) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto &e : b.edges) {
    out << "  \"" << e.u << "\" -- \"" << e.v << "\"";
    if (removed.count(e) != 0) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::add() {
  parent_.push_back(parent_.size());
  rank_.push_back(0);
  return parent_.size() - 1;
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace endgraph
