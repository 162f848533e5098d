/* separation.cpp -- upper approximation, certified decider, shells.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/separation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "explorer.hpp"

namespace endgraph {

std::string to_string(const TriBool &t) {
  switch (t.value) {
    case TriBool::Value::Yes: return "Yes";
    case TriBool::Value::No: return "No";
    default: return "Unknown(" + std::to_string(t.fuel_spent) + ")";
  }
}

std::vector<VertexId> boundary_vertices(const GraphOracle &g, const EdgeSet &e) {
  RemovedEdges removed(e);
  std::set<VertexId> ends;
  for (const auto &x : e) {
    ends.insert(x.u);
    ends.insert(x.v);
  }
  std::vector<VertexId> out;
  for (VertexId v : ends)
    if (!remaining_neighbors(g, removed, v).empty()) out.push_back(v);
  return out;
}

namespace {

std::vector<VertexId> boundary_of(const GraphOracle &g, const RemovedEdges &removed) {
  std::set<VertexId> ends;
  for (const auto &[k, c] : removed.counts()) {
    ends.insert(k.first);
    ends.insert(k.second);
  }
  std::vector<VertexId> out;
  for (VertexId v : ends)
    if (!remaining_neighbors(g, removed, v).empty()) out.push_back(v);
  return out;
}

using EdgeDepths = std::unordered_map<std::pair<VertexId, VertexId>, int, PairHash>;

// For each edge of G minus `removed` touched by a walk of length <= n_max from
// v, the least n with the edge in E_{v,n+1}, i.e. its nearer endpoint depth.
EdgeDepths walk_depths(const GraphOracle &g, const RemovedEdges &removed, VertexId v, int n_max,
                       std::int64_t *steps) {
  EdgeDepths out;
  std::unordered_map<VertexId, int> dist{{v, 0}};
  std::vector<VertexId> frontier{v};
  for (int d = 0; d <= n_max && !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    for (VertexId x : frontier) {
      if (steps != nullptr) ++*steps;
      for (const auto &n : g.neighbors(x)) {
        if (n.multiplicity <= removed.removed(x, n.id)) continue;
        auto key = x <= n.id ? std::pair{x, n.id} : std::pair{n.id, x};
        out.emplace(key, d);
        if (dist.emplace(n.id, d + 1).second) next.push_back(n.id);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<int> approx_sequence(const GraphOracle &g, const EdgeSet &e, int n_max,
                                 std::int64_t *steps) {
  validate_edges(g, e);
  if (n_max < 0) throw std::invalid_argument("negative n");
  // No boundary to inspect: G itself is the one infinite component.
  if (e.empty()) return std::vector<int>(static_cast<std::size_t>(n_max) + 1, 1);
  RemovedEdges removed(e);
  std::set<VertexId> ends;
  for (const auto &x : e) {
    ends.insert(x.u);
    ends.insert(x.v);
  }
  std::vector<VertexId> verts(ends.begin(), ends.end());
  std::vector<EdgeDepths> depth;
  std::vector<int> last_growth;  // E_{v,n+1} != E_{v,n} exactly for n <= last_growth
  for (VertexId v : verts) {
    depth.push_back(walk_depths(g, removed, v, n_max, steps));
    int last = -1;
    for (const auto &[k, d] : depth.back()) last = std::max(last, d);
    last_growth.push_back(last);
  }
  // merge_at[i][j]: least n with E_{v_i,n} and E_{v_j,n} sharing an edge.
  const int m = static_cast<int>(verts.size());
  const int never = n_max + 1;
  std::vector<std::vector<int>> merge_at(m, std::vector<int>(m, never));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto &small = depth[i].size() <= depth[j].size() ? depth[i] : depth[j];
      const auto &large = depth[i].size() <= depth[j].size() ? depth[j] : depth[i];
      int best = never;
      for (const auto &[k, d] : small) {
        auto it = large.find(k);
        if (it != large.end()) best = std::min(best, std::max(d, it->second) + 1);
      }
      merge_at[i][j] = merge_at[j][i] = best;
    }
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) {
    DisjointSets ds(m);
    std::vector<int> active;
    for (int i = 0; i < m; ++i)
      if (last_growth[i] >= n) active.push_back(i);
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (merge_at[active[a]][active[b]] <= n) ds.unite(active[a], active[b]);
    std::set<std::size_t> roots;
    for (int i : active) roots.insert(ds.find(i));
    out.push_back(static_cast<int>(roots.size()));
  }
  return out;
}

void require_sound_shape(const EndsCertificate &cert) {
  if (cert.ends < 1) throw std::invalid_argument("certificate must claim at least one end");
}

// U-construction: U_r1 plus the finite pockets of G minus U_r1, with the
// boundary of U split into its infinite groups.
struct CoverResult {
  RemovedEdges cover;
  std::vector<std::vector<VertexId>> groups;
};

Outcome<CoverResult> ball_cover(const GraphOracle &g, const EdgeSet &e,
                                const EndsCertificate &cert, const Fuel &fuel,
                                std::int64_t &steps) {
  BallGrower grower(g, g.basepoint());
  std::vector<VertexId> endpoints;
  for (const auto *set : {&e, &cert.witness})
    for (const auto &x : *set) {
      endpoints.push_back(x.u);
      endpoints.push_back(x.v);
    }
  int r0 = 0;
  for (VertexId v : endpoints) {
    while (!grower.distance(v)) {
      if (grower.radius() >= fuel.max_radius ||
          !grower.grow_to(grower.radius() + 1, &steps, fuel.max_steps))
        return Unknown{steps};
    }
    r0 = std::max(r0, *grower.distance(v));
  }
  auto as_removed = [&](int r) {
    RemovedEdges x;
    for (const auto &edge : grower.edges_within(r)) x.add(edge);
    return x;
  };

  // Algorithm A on U_r0.
  RemovedEdges u0 = as_removed(r0);
  detail::Explorer a0(g, u0, boundary_of(g, u0));
  auto p0 = a0.run(cert.ends, fuel, steps);
  if (p0.status != detail::ExploreStatus::Done) {
    detail::raise_if_unsound(p0, cert.ends);
    return Unknown{steps};
  }

  // r1: each infinite group of L_r0 connected through U_r1 minus U_r0.
  int r1 = r0;
  for (;; ++r1) {
    if (r1 > fuel.max_radius || !grower.grow_to(r1 + 1, &steps, fuel.max_steps))
      return Unknown{steps};
    std::unordered_map<VertexId, std::size_t> index;
    DisjointSets ds;
    auto id = [&](VertexId v) {
      auto [it, fresh] = index.emplace(v, 0);
      if (fresh) it->second = ds.add();
      return it->second;
    };
    for (const auto &edge : grower.edges_within(r1)) {
      if (*grower.distance(edge.u) <= r0 && *grower.distance(edge.v) <= r0) continue;
      ds.unite(id(edge.u), id(edge.v));
    }
    bool joined = true;
    for (const auto &group : p0.groups) {
      for (VertexId v : group) {
        if (ds.find(id(v)) != ds.find(id(group.front()))) {
          joined = false;
          break;
        }
      }
      if (!joined) break;
    }
    if (joined) break;
  }

  // Close off the finite components of G minus U_r1.
  RemovedEdges u = as_removed(r1);
  detail::Explorer a1(g, u, boundary_of(g, u));
  auto p1 = a1.run(cert.ends, fuel, steps);
  if (p1.status != detail::ExploreStatus::Done) {
    detail::raise_if_unsound(p1, cert.ends);
    return Unknown{steps};
  }
  RemovedEdges pocket_free = u;
  for (VertexId v : p1.finite_vertices)
    for (const auto &n : g.neighbors(v))
      if (u.removed(v, n.id) < n.multiplicity && v <= n.id) pocket_free.add_all(g, v, n.id);

  detail::Explorer a2(g, pocket_free, boundary_of(g, pocket_free));
  auto p2 = a2.run(cert.ends, fuel, steps);
  if (p2.status != detail::ExploreStatus::Done) {
    detail::raise_if_unsound(p2, cert.ends);
    return Unknown{steps};
  }
  return CoverResult{std::move(pocket_free), std::move(p2.groups)};
}

// Connectivity of G[U] minus e, indexed by vertex.
struct FiniteConnectivity {
  std::unordered_map<VertexId, std::size_t> index;
  DisjointSets ds;

  FiniteConnectivity(const RemovedEdges &cover, const RemovedEdges &e) {
    for (const auto &[k, c] : cover.counts()) {
      std::size_t a = id(k.first), b = id(k.second);
      if (c - e.removed(k.first, k.second) > 0) ds.unite(a, b);
    }
  }
  std::size_t id(VertexId v) {
    auto [it, fresh] = index.emplace(v, 0);
    if (fresh) it->second = ds.add();
    return it->second;
  }
  std::size_t root(VertexId v) { return ds.find(id(v)); }
};

BoundaryPartition group_boundary(const GraphOracle &g, const EdgeSet &e,
                                 const std::function<int(VertexId)> &class_of) {
  BoundaryPartition out;
  std::map<int, std::vector<VertexId>> groups;
  for (VertexId b : boundary_vertices(g, e)) {
    int c = class_of(b);
    if (c < 0)
      out.finite_group.push_back(b);
    else
      groups[c].push_back(b);
  }
  for (auto &[c, members] : groups) out.infinite_groups.push_back(std::move(members));
  std::sort(out.infinite_groups.begin(), out.infinite_groups.end());
  return out;
}

Outcome<BoundaryPartition> partition_ball_cover(const GraphOracle &g, const EdgeSet &e,
                                                const EndsCertificate &cert, const Fuel &fuel) {
  std::int64_t steps = 0;
  auto cover = ball_cover(g, e, cert, fuel, steps);
  if (is_unknown(cover)) return std::get<Unknown>(cover);
  const auto &c = value_of(cover);
  FiniteConnectivity conn(c.cover, RemovedEdges(e));
  std::map<std::size_t, int> class_of_root;
  for (const auto &group : c.groups) {
    std::size_t r = conn.root(group.front());
    class_of_root.emplace(r, static_cast<int>(class_of_root.size()));
  }
  return group_boundary(g, e, [&](VertexId b) {
    auto it = class_of_root.find(conn.root(b));
    return it == class_of_root.end() ? -1 : it->second;
  });
}

}  // namespace

int comp_approx(const GraphOracle &g, const EdgeSet &e, int n) {
  return approx_sequence(g, e, n, nullptr).back();
}

std::vector<int> comp_approx_sequence(const GraphOracle &g, const EdgeSet &e, int n_max) {
  return approx_sequence(g, e, n_max, nullptr);
}

CertifiedSeparator::CertifiedSeparator(const GraphOracle &g, const EdgeSet &cover,
                                       const EndsCertificate &cert, const Fuel &fuel)
    : g_(g) {
  require_sound_shape(cert);
  validate_edges(g, cover);
  validate_edges(g, cert.witness);
  EdgeSet all = cover;
  all.insert(cert.witness.begin(), cert.witness.end());
  cover_ = RemovedEdges(all);
  auto sources = boundary_of(g, cover_);
  detail::Explorer explorer(g, cover_, sources);
  auto result = explorer.run(cert.ends, fuel, steps_);
  if (result.status != detail::ExploreStatus::Done) {
    detail::raise_if_unsound(result, cert.ends);
    return;
  }
  infinite_nodes_ = static_cast<int>(result.groups.size());
  node_count_ = infinite_nodes_;
  for (int i = 0; i < infinite_nodes_; ++i)
    for (VertexId v : result.groups[i]) node_of_[v] = i;
  std::map<std::size_t, int> finite_node;
  for (const auto &[v, root] : result.finite_root_of_source) {
    auto [it, fresh] = finite_node.emplace(root, node_count_);
    if (fresh) ++node_count_;
    node_of_[v] = it->second;
  }
  for (const auto &[k, c] : cover_.counts())
    for (VertexId v : {k.first, k.second})
      if (node_of_.emplace(v, node_count_).second) ++node_count_;
  ready_ = true;
}

int CertifiedSeparator::node_of(VertexId v) const {
  auto it = node_of_.find(v);
  return it == node_of_.end() ? -1 : it->second;
}

int CertifiedSeparator::comp(const EdgeSet &e) const {
  if (!ready_) throw std::logic_error("separator not ready");
  if (e.empty()) return 1;
  RemovedEdges removed(e);
  DisjointSets ds(node_count_);
  for (const auto &[k, c] : cover_.counts()) {
    int gone = removed.removed(k.first, k.second);
    if (gone > c) throw std::invalid_argument("edge set leaves the certified cover");
    if (c - gone > 0) ds.unite(node_of_.at(k.first), node_of_.at(k.second));
  }
  // Parallel copies are interchangeable: only the number removed matters.
  for (const auto &x : e)
    if (cover_.removed(x.u, x.v) < removed.removed(x.u, x.v))
      throw std::invalid_argument("edge set leaves the certified cover");
  std::set<std::size_t> roots;
  for (int i = 0; i < infinite_nodes_; ++i) roots.insert(ds.find(i));
  return static_cast<int>(roots.size());
}

BoundaryPartition CertifiedSeparator::partition(const EdgeSet &e) const {
  if (!ready_) throw std::logic_error("separator not ready");
  RemovedEdges removed(e);
  DisjointSets ds(node_count_);
  for (const auto &[k, c] : cover_.counts())
    if (c - removed.removed(k.first, k.second) > 0)
      ds.unite(node_of_.at(k.first), node_of_.at(k.second));
  std::map<std::size_t, int> class_of_root;
  for (int i = 0; i < infinite_nodes_; ++i)
    class_of_root.emplace(ds.find(i), static_cast<int>(class_of_root.size()));
  return group_boundary(g_, e, [&](VertexId b) {
    auto it = class_of_root.find(ds.find(node_of_.at(b)));
    return it == class_of_root.end() ? -1 : it->second;
  });
}

Outcome<int> decide_comp(const GraphOracle &g, const EdgeSet &e, const EndsCertificate &cert,
                         const Fuel &fuel, Route route) {
  validate_edges(g, e);
  validate_edges(g, cert.witness);
  require_sound_shape(cert);
  if (e.empty()) return 1;
  if (route == Route::Local) {
    CertifiedSeparator sep(g, e, cert, fuel);
    if (!sep.ready()) return Unknown{sep.fuel_spent()};
    return sep.comp(e);
  }
  std::int64_t steps = 0;
  auto cover = ball_cover(g, e, cert, fuel, steps);
  if (is_unknown(cover)) return std::get<Unknown>(cover);
  const auto &c = value_of(cover);
  FiniteConnectivity conn(c.cover, RemovedEdges(e));
  std::set<std::size_t> roots;
  for (const auto &group : c.groups) roots.insert(conn.root(group.front()));
  return static_cast<int>(roots.size());
}

Outcome<BoundaryPartition> boundary_partition(const GraphOracle &g, const EdgeSet &e,
                                              const EndsCertificate &cert, const Fuel &fuel,
                                              Route route) {
  validate_edges(g, e);
  validate_edges(g, cert.witness);
  require_sound_shape(cert);
  if (e.empty()) return BoundaryPartition{};
  if (route == Route::Local) {
    CertifiedSeparator sep(g, e, cert, fuel);
    if (!sep.ready()) return Unknown{sep.fuel_spent()};
    return sep.partition(e);
  }
  return partition_ball_cover(g, e, cert, fuel);
}

TriBool semidecide_not_separating(const GraphOracle &g, const EdgeSet &e, const Fuel &fuel) {
  validate_edges(g, e);
  std::int64_t steps = 0;
  for (int n = 4;; n *= 2) {
    int depth = std::min(n, fuel.max_radius);
    auto seq = approx_sequence(g, e, depth, &steps);
    if (*std::min_element(seq.begin(), seq.end()) <= 1) {
      TriBool t = TriBool::yes();
      t.fuel_spent = steps;
      return t;
    }
    if (depth >= fuel.max_radius || steps >= fuel.max_steps) return TriBool::unknown(steps);
  }
}

EdgeSetPredicate approx_sep_decider(const GraphOracle &g, int n) {
  return [&g, n](const EdgeSet &e) { return comp_approx(g, e, n) >= 2; };
}

namespace {

// Radius r with shell == E_r, or NotAShell.
int shell_radius(const GraphOracle &g, const EdgeSet &shell, BallGrower &grower) {
  if (shell.empty()) throw NotAShell("empty edge set is not a sphere shell");
  validate_edges(g, shell);
  int r = 0;
  for (const auto &x : shell)
    for (VertexId v : {x.u, x.v}) {
      while (!grower.distance(v)) {
        if (grower.radius() > 100000) throw NotAShell("shell endpoint unreachable");
        grower.grow_to(grower.radius() + 1);
      }
      r = std::max(r, *grower.distance(v));
    }
  if (r < 1) throw NotAShell("shell must reach distance >= 1");
  grower.grow_to(r + 1);
  if (grower.shell(r) != shell) throw NotAShell("edge set is not E_r for r = " + std::to_string(r));
  return r;
}

std::vector<EdgeRef> parent_edges(const BallGrower &grower, const EdgeSet &shell, VertexId u,
                                  int r) {
  std::vector<EdgeRef> out;
  for (const auto &x : shell) {
    if (x.u != u && x.v != u) continue;
    VertexId other = x.u == u ? x.v : x.u;
    if (grower.distance(other) == r - 1) out.push_back(x);
  }
  return out;
}

EdgeSet minus(const EdgeSet &a, const std::vector<EdgeRef> &b) {
  EdgeSet out = a;
  for (const auto &x : b) out.erase(x);
  return out;
}

}  // namespace

std::vector<EdgeSet> minimal_separating_subsets(const GraphOracle &g, const EdgeSet &shell,
                                                const EdgeSetPredicate &sep_decider) {
  BallGrower grower(g, g.basepoint());
  shell_radius(g, shell, grower);
  std::vector<EdgeRef> edges(shell.begin(), shell.end());
  const int n = static_cast<int>(edges.size());
  if (n > 22) throw std::length_error("shell too large for subset enumeration");
  std::vector<signed char> sep(std::size_t{1} << n, -1);
  auto subset = [&](std::uint32_t mask) {
    EdgeSet s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(edges[i]);
    return s;
  };
  auto in_sep = [&](std::uint32_t mask) {
    if (sep[mask] < 0) sep[mask] = sep_decider(subset(mask)) ? 1 : 0;
    return sep[mask] == 1;
  };
  std::vector<std::pair<int, EdgeSet>> found;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!in_sep(mask)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if (((mask >> i) & 1U) && in_sep(mask & ~(std::uint32_t{1} << i))) minimal = false;
    if (minimal) found.emplace_back(std::popcount(mask), subset(mask));
  }
  std::sort(found.begin(), found.end());
  std::vector<EdgeSet> out;
  for (auto &[size, s] : found) out.push_back(std::move(s));
  return out;
}

Outcome<int> ends_from_sepmax(const GraphOracle &g, const EdgeSetPredicate &sepmax_oracle,
                              const Fuel &fuel) {
  if (sepmax_oracle(EdgeSet{})) return 1;
  BallGrower grower(g, g.basepoint());
  std::int64_t steps = 0;
  for (int r = 1; r <= fuel.max_radius; ++r) {
    if (!grower.grow_to(r + 1, &steps, fuel.max_steps)) break;
    EdgeSet shell = grower.shell(r);
    if (!sepmax_oracle(shell)) continue;
    // Restoring the parent edges of two sphere vertices u, v joins their
    // components through the inner ball; the count drops below the maximum
    // exactly when C_u and C_v are distinct infinite components.
    const auto &sphere = grower.layer(r);
    const std::size_t m = sphere.size();
    std::vector<std::vector<EdgeRef>> parents;
    for (VertexId u : sphere) parents.push_back(parent_edges(grower, shell, u, r));
    std::vector<std::vector<char>> apart(m, std::vector<char>(m, 0));
    std::vector<char> infinite(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        auto restored = parents[i];
        restored.insert(restored.end(), parents[j].begin(), parents[j].end());
        if (!sepmax_oracle(minus(shell, restored))) {
          apart[i][j] = apart[j][i] = 1;
          infinite[i] = infinite[j] = 1;
        }
      }
    DisjointSets ds(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (infinite[i] && infinite[j] && !apart[i][j]) ds.unite(i, j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < m; ++i)
      if (infinite[i]) roots.insert(ds.find(i));
    return static_cast<int>(roots.size());
  }
  return Unknown{steps};
}

Outcome<EdgeSet> sepmax_witness_from_ends(const GraphOracle &g, int k,
                                          const EdgeSetPredicate &sep_decider, const Fuel &fuel) {
  if (k < 1) throw std::invalid_argument("number of ends must be positive");
  if (k == 1) return EdgeSet{};
  BallGrower grower(g, g.basepoint());
  std::int64_t steps = 0;
  for (int r = 1; r <= fuel.max_radius; ++r) {
    if (!grower.grow_to(r + 1, &steps, fuel.max_steps)) break;
    EdgeSet shell = grower.shell(r);
    if (!sep_decider(shell)) continue;
    // With Comp(E_r) >= 2, restoring the parent edges of a vertex set T gives
    // a non-separating set exactly when T meets every infinite component, so a
    // minimal such T has one vertex per infinite component.
    const auto &sphere = grower.layer(r);
    std::vector<char> keep(sphere.size(), 1);
    auto restored_without = [&](std::size_t skip) {
      std::vector<EdgeRef> restored;
      for (std::size_t i = 0; i < sphere.size(); ++i)
        if (keep[i] && i != skip) {
          auto p = parent_edges(grower, shell, sphere[i], r);
          restored.insert(restored.end(), p.begin(), p.end());
        }
      return minus(shell, restored);
    };
    for (std::size_t i = 0; i < sphere.size(); ++i)
      if (!sep_decider(restored_without(i))) keep[i] = 0;
    int count = static_cast<int>(std::count(keep.begin(), keep.end(), 1));
    if (count == k) return shell;
  }
  return Unknown{steps};
}

}  // namespace endgraph
