/* graph_core.hpp -- lazy oracles for infinite locally finite graphs.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace endgraph {

using VertexId = std::int64_t;

struct Neighbor {
  VertexId id;
  int multiplicity;
  bool operator==(const Neighbor &) const = default;
};

class InvalidVertex : public std::invalid_argument {
 public:
  explicit InvalidVertex(VertexId v)
      : std::invalid_argument("invalid vertex " + std::to_string(v)) {}
};

class InvalidEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A total description of a connected, infinite, locally finite (multi)graph.
// Connectivity and infiniteness are declared by the implementer, not checked.
class GraphOracle {
 public:
  virtual ~GraphOracle() = default;
  virtual bool contains(VertexId v) const = 0;
  // Sorted by id. A loop appears as (v, m) with m loops; each adds 2 to the
  // degree. Precondition: contains(v).
  virtual std::vector<Neighbor> neighbors(VertexId v) const = 0;
  virtual VertexId basepoint() const = 0;
  virtual bool is_multigraph() const = 0;
  virtual std::string name() const = 0;
  virtual std::string label(VertexId v) const { return std::to_string(v); }
};

using GraphPtr = std::shared_ptr<const GraphOracle>;

// One edge of a multigraph: the slot-th parallel copy joining u and v.
struct EdgeRef {
  VertexId u = 0;
  VertexId v = 0;
  int slot = 0;

  auto operator<=>(const EdgeRef &) const = default;
  bool is_loop() const { return u == v; }
};

inline EdgeRef make_edge(VertexId a, VertexId b, int slot = 0) {
  return a <= b ? EdgeRef{a, b, slot} : EdgeRef{b, a, slot};
}

using EdgeSet = std::set<EdgeRef>;

std::string to_string(const EdgeRef &e);
std::string to_string(const EdgeSet &e);

struct PairHash {
  std::size_t operator()(const std::pair<VertexId, VertexId> &p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.first) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.second) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Counts of removed parallel copies per vertex pair.
class RemovedEdges {
 public:
  RemovedEdges() = default;
  explicit RemovedEdges(const EdgeSet &e);
  void add(const EdgeRef &e);
  void add_all(const GraphOracle &g, VertexId a, VertexId b);
  int removed(VertexId a, VertexId b) const;
  bool empty() const { return counts_.empty(); }
  std::size_t pair_count() const { return counts_.size(); }
  EdgeSet to_edge_set() const;
  const std::unordered_map<std::pair<VertexId, VertexId>, int, PairHash> &counts() const {
    return counts_;
  }

 private:
  std::unordered_map<std::pair<VertexId, VertexId>, int, PairHash> counts_;
};

int degree(const GraphOracle &g, VertexId v);
int multiplicity(const GraphOracle &g, VertexId u, VertexId v);
void require_vertex(const GraphOracle &g, VertexId v);
// Throws InvalidEdge unless every slot exists in g.
void validate_edges(const GraphOracle &g, const EdgeSet &e);
EdgeSet edges_at(const GraphOracle &g, VertexId v);
// Neighbors of v still joined to v after removing `removed`.
std::vector<VertexId> remaining_neighbors(const GraphOracle &g, const RemovedEdges &removed,
                                          VertexId v);

struct Ball {
  VertexId center = 0;
  int radius = 0;
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeRef> edges;      // sorted, one entry per parallel copy
  std::unordered_map<VertexId, int> distances;

  bool has_vertex(VertexId v) const { return distances.count(v) != 0; }
  int distance(VertexId v) const { return distances.at(v); }
};

Ball ball(const GraphOracle &g, VertexId center, int radius);

// Incremental BFS around a fixed center; the radius only grows.
class BallGrower {
 public:
  BallGrower(const GraphOracle &g, VertexId center);
  // Grows to radius r unless the step budget runs out; returns success.
  bool grow_to(int r, std::int64_t *steps = nullptr, std::int64_t max_steps = -1);
  int radius() const { return radius_; }
  std::optional<int> distance(VertexId v) const;
  const std::vector<VertexId> &layer(int r) const { return layers_.at(r); }
  // Every edge (all copies) with both endpoints within distance r <= radius().
  EdgeSet edges_within(int r) const;
  // Edges of G[{v : r-1 <= d(v) <= r}].
  EdgeSet shell(int r) const;

 private:
  const GraphOracle &g_;
  int radius_ = 0;
  std::unordered_map<VertexId, int> dist_;
  std::vector<std::vector<VertexId>> layers_;
};

EdgeSet sphere_shell(const GraphOracle &g, int r);

std::vector<std::vector<VertexId>> finite_components(const std::vector<VertexId> &vertices,
                                                     const std::vector<EdgeRef> &edges,
                                                     const EdgeSet &removed);

// Exact distance by bidirectional BFS; nullopt if not found within max_radius.
std::optional<int> bfs_distance(const GraphOracle &g, VertexId a, VertexId b, int max_radius,
                                std::int64_t max_steps = -1);

// Vertices within radius whose neighbor lists are not mirrored exactly.
std::vector<VertexId> symmetry_violations(const GraphOracle &g, VertexId center, int radius);

std::string to_dot(const GraphOracle &g, const Ball &b, const EdgeSet &removed = {});

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0);
  std::size_t add();
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace endgraph
