/* eulerian.cpp -- degree parity scans and the two-ended separation clause.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/eulerian.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace endgraph {

namespace {

constexpr const char *kEnds1 = "one end";
constexpr const char *kEnds12 = "one or two ends";
constexpr const char *kOneOdd = "exactly one odd vertex";
constexpr const char *kAllEven = "every degree even";
constexpr const char *kOneComp = "no even-inducing set leaves two infinite components";

EulerVerdict verdict(EulerVerdict::Value v, std::string clause, std::string reason) {
  EulerVerdict out;
  out.value = v;
  out.clause = std::move(clause);
  out.reason = std::move(reason);
  return out;
}

std::string ends_reason(int ends) { return "certificate declares " + std::to_string(ends) + " ends"; }

// Odd vertices from the certified ball, or from the fuel ball when uncertified.
std::vector<VertexId> parity_scan(const GraphOracle &g,
                                  const std::optional<ParityCertificate> &parity_cert,
                                  const Fuel &fuel, EulerVerdict &v) {
  if (parity_cert) {
    v.certified.push_back("odd vertices within radius " + std::to_string(parity_cert->radius));
    return odd_vertex_scan(g, parity_cert->radius);
  }
  v.searched.push_back("odd vertices within radius " + std::to_string(fuel.max_radius));
  return odd_vertex_scan(g, fuel.max_radius);
}

// Slots of `cover` that are not bridges of the finite multigraph they form.
std::vector<EdgeRef> cycle_edges(const EdgeSet &cover) {
  std::vector<EdgeRef> edges(cover.begin(), cover.end());
  std::unordered_map<VertexId, std::size_t> index;
  for (const auto &e : edges)
    for (VertexId x : {e.u, e.v}) index.emplace(x, index.size());
  std::vector<EdgeRef> out;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    if (edges[skip].is_loop()) {
      out.push_back(edges[skip]);
      continue;
    }
    DisjointSets ds(index.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) ds.unite(index[edges[i].u], index[edges[i].v]);
    if (ds.find(index[edges[skip].u]) == ds.find(index[edges[skip].v])) out.push_back(edges[skip]);
  }
  return out;
}

// Smallest even-inducing subset of `pool` with Comp >= 2 among sizes below
// `limit`, in (size, lexicographic) order; nullopt if none or out of budget.
std::optional<EdgeSet> smallest_even_separator(const std::vector<EdgeRef> &pool,
                                               const CertifiedSeparator &sep, std::size_t limit,
                                               std::int64_t budget) {
  std::unordered_map<VertexId, int> parity;
  int odd = 0;
  std::vector<EdgeRef> chosen;
  std::optional<EdgeSet> found;
  auto flip = [&](VertexId x) {
    int &p = parity[x];
    p ^= 1;
    odd += p == 1 ? 1 : -1;
  };
  auto toggle = [&](const EdgeRef &e) {
    if (e.is_loop()) return;
    flip(e.u);
    flip(e.v);
  };
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (--budget < 0) return true;
    if (left == 0) {
      if (odd != 0) return false;
      EdgeSet e(chosen.begin(), chosen.end());
      if (sep.comp(e) >= 2) {
        found = std::move(e);
        return true;
      }
      return false;
    }
    if (static_cast<std::size_t>(odd) > 2 * left) return false;
    for (std::size_t i = from; i + left <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      toggle(pool[i]);
      bool stop = rec(i + 1, left - 1);
      toggle(pool[i]);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size < limit && size <= pool.size(); ++size) {
    if (rec(0, size) && found) return found;
    if (budget < 0) return std::nullopt;
  }
  return std::nullopt;
}

// Shortest path from t to another vertex of `targets` in G minus `cut`.
std::optional<std::vector<VertexId>> path_to_partner(const GraphOracle &g, const RemovedEdges &cut,
                                                     VertexId t,
                                                     const std::set<VertexId> &targets,
                                                     const Fuel &fuel, std::int64_t &steps) {
  std::unordered_map<VertexId, VertexId> parent{{t, t}};
  std::vector<VertexId> layer{t};
  for (int d = 0; d < fuel.max_radius && !layer.empty(); ++d) {
    std::vector<VertexId> next;
    std::optional<VertexId> hit;
    for (VertexId v : layer) {
      if (++steps > fuel.max_steps) return std::nullopt;
      for (VertexId w : remaining_neighbors(g, cut, v)) {
        if (!parent.emplace(w, v).second) continue;
        next.push_back(w);
        if (targets.count(w) && (!hit || w < *hit)) hit = w;
      }
    }
    if (hit) {
      std::vector<VertexId> path{*hit};
      while (path.back() != t) path.push_back(parent.at(path.back()));
      return path;
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(const EulerVerdict &v) {
  std::string s;
  switch (v.value) {
    case EulerVerdict::Value::Holds: s = "Holds"; break;
    case EulerVerdict::Value::Fails: s = "Fails(" + v.clause + ")"; break;
    case EulerVerdict::Value::Unknown:
      s = "Unknown(" + std::to_string(v.fuel_spent) + ")";
      break;
  }
  return s;
}

bool induces_even_subgraph(const EdgeSet &e) {
  std::map<VertexId, int> deg;
  for (const auto &x : e) {
    if (x.is_loop()) continue;
    ++deg[x.u];
    ++deg[x.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](const auto &kv) { return kv.second % 2 == 0; });
}

std::vector<VertexId> odd_vertex_scan(const GraphOracle &g, int radius) {
  std::vector<VertexId> out;
  for (VertexId v : ball(g, g.basepoint(), radius).vertices)
    if (degree(g, v) % 2 != 0) out.push_back(v);
  return out;
}

EulerVerdict check_one_way(const GraphOracle &g, const EndsCertificate &ends_cert,
                           const std::optional<ParityCertificate> &parity_cert, const Fuel &fuel) {
  using V = EulerVerdict::Value;
  if (ends_cert.ends != 1) return verdict(V::Fails, kEnds1, ends_reason(ends_cert.ends));
  EulerVerdict v;
  v.certified.push_back(kEnds1);
  auto odd = parity_scan(g, parity_cert, fuel, v);
  if (odd.size() >= 2) {
    v.value = V::Fails;
    v.clause = kOneOdd;
    v.reason = "two odd vertices";
    v.odd_vertices = {odd[0], odd[1]};
    return v;
  }
  if (!parity_cert) {
    v.value = V::Unknown;
    v.clause = kOneOdd;
    v.reason = "no parity certificate; fewer than two odd vertices found";
    v.fuel_spent = fuel.max_radius;
    return v;
  }
  if (odd.empty()) {
    v.value = V::Fails;
    v.clause = kOneOdd;
    v.reason = "no odd vertex";
    return v;
  }
  v.value = V::Holds;
  v.odd_vertices = odd;
  return v;
}

EulerVerdict check_two_way(const GraphOracle &g, const EndsCertificate &ends_cert,
                           const std::optional<ParityCertificate> &parity_cert,
                           const std::optional<LocalizationCertificate> &loc_cert,
                           const Fuel &fuel) {
  using V = EulerVerdict::Value;
  if (ends_cert.ends != 1 && ends_cert.ends != 2)
    return verdict(V::Fails, kEnds12, ends_reason(ends_cert.ends));
  EulerVerdict v;
  v.certified.push_back(kEnds12);
  auto odd = parity_scan(g, parity_cert, fuel, v);
  if (!odd.empty()) {
    v.value = V::Fails;
    v.clause = kAllEven;
    v.reason = "odd vertex";
    v.odd_vertices = {odd.front()};
    return v;
  }
  auto unknown = [&](std::string clause, std::string reason, std::int64_t spent) {
    v.value = V::Unknown;
    v.clause = std::move(clause);
    v.reason = std::move(reason);
    v.fuel_spent = spent;
    return v;
  };
  if (ends_cert.ends == 1) {
    if (!parity_cert) return unknown(kAllEven, "no parity certificate", fuel.max_radius);
    v.value = V::Holds;
    return v;
  }

  // Two ends. Any finite cut between the ends has the same parity once every
  // degree is even, and an even-inducing separating set exists exactly when
  // that parity is even (a cut plus T-joins on both sides, or conversely the
  // boundary of an infinite component of G minus an even set).
  const int radius = loc_cert ? loc_cert->radius : fuel.max_radius;
  auto b = ball(g, g.basepoint(), radius);
  EdgeSet cover(b.edges.begin(), b.edges.end());
  CertifiedSeparator sep(g, cover, ends_cert, fuel);
  if (!sep.ready()) return unknown(kOneComp, "component search out of fuel", sep.fuel_spent());
  std::int64_t steps = sep.fuel_spent();

  // K1: the piece of G minus the end-0 component that holds end 1.
  DisjointSets nodes(sep.node_count());
  const EdgeSet all = sep.cover();
  for (const auto &e : all) {
    int a = sep.node_of(e.u), c = sep.node_of(e.v);
    if (a != 0 && c != 0) nodes.unite(a, c);
  }
  auto in_k1 = [&](int node) { return node != 0 && nodes.find(node) == nodes.find(1); };
  EdgeSet cut;
  for (const auto &e : all) {
    int a = sep.node_of(e.u), c = sep.node_of(e.v);
    if ((a == 0 && in_k1(c)) || (c == 0 && in_k1(a))) cut.insert(e);
  }
  if (cut.size() % 2 == 1) {
    v.searched.push_back("cut between the ends has odd size " + std::to_string(cut.size()));
    if (!parity_cert || !loc_cert)
      return unknown(kOneComp, "needs parity and localization certificates", steps);
    v.certified.push_back("separating sets localized within radius " +
                          std::to_string(loc_cert->radius));
    v.value = V::Holds;
    return v;
  }

  // Even cut: build a witness, then look for a smaller one inside the ball.
  std::set<VertexId> odd_ends;
  {
    std::map<VertexId, int> inc;
    for (const auto &e : cut) {
      ++inc[e.u];
      ++inc[e.v];
    }
    for (const auto &[x, c] : inc)
      if (c % 2 == 1) odd_ends.insert(x);
  }
  RemovedEdges cut_removed(cut);
  EdgeSet witness = cut;
  while (!odd_ends.empty()) {
    VertexId t = *odd_ends.begin();
    odd_ends.erase(odd_ends.begin());
    auto path = path_to_partner(g, cut_removed, t, odd_ends, fuel, steps);
    if (!path) return unknown(kOneComp, "no parity partner within fuel", steps);
    odd_ends.erase(path->front());
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      VertexId x = (*path)[i], y = (*path)[i + 1];
      int slot = 0;
      while (cut.count(make_edge(x, y, slot))) ++slot;
      auto e = make_edge(x, y, slot);
      if (!witness.erase(e)) witness.insert(e);
    }
  }
  auto pool = cycle_edges(cover);
  if (auto smaller = smallest_even_separator(pool, sep, witness.size(), 2'000'000))
    witness = *smaller;
  CertifiedSeparator check(g, witness, ends_cert, fuel);
  if (!check.ready() || check.comp(witness) < 2 || !induces_even_subgraph(witness))
    return unknown(kOneComp, "witness did not re-verify", steps);
  v.value = V::Fails;
  v.clause = kOneComp;
  v.reason = "even-inducing set leaves two infinite components";
  v.separating_set = witness;
  return v;
}

}  // namespace endgraph
