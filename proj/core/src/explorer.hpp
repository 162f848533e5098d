/* explorer.hpp -- multi-source search that splits a boundary into components.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "endgraph/separation.hpp"

namespace endgraph::detail {

enum class ExploreStatus { Done, OutOfFuel, Unsound };

struct ExploreResult {
  ExploreStatus status = ExploreStatus::OutOfFuel;
  int live = 0;
  // Sources grouped by infinite component, each group sorted, groups sorted.
  std::vector<std::vector<VertexId>> groups;
  // Every vertex of a finite component that contains a source.
  std::vector<VertexId> finite_vertices;
  // Source in a finite component -> an id shared by its component.
  std::map<VertexId, std::size_t> finite_root_of_source;
};

// Grows one search per source in G minus `removed`, merging searches that
// touch. A search with an empty frontier has swept a finite component. When
// G minus `removed` has exactly k infinite components, every one of them keeps
// at least one live search, so k live searches means the split is final.
class Explorer {
 public:
  Explorer(const GraphOracle &g, const RemovedEdges &removed, std::vector<VertexId> sources)
      : g_(g), removed_(removed), sources_(std::move(sources)) {}

  ExploreResult run(int k, const Fuel &fuel, std::int64_t &steps) {
    ExploreResult out;
    const std::size_t n = sources_.size();
    if (n == 0) {
      out.status = k == 1 ? ExploreStatus::Done : ExploreStatus::Unsound;
      return out;
    }
    DisjointSets ds(n);
    std::vector<std::vector<VertexId>> frontier(n);
    std::vector<int> layers(n, 0);
    std::unordered_map<VertexId, std::size_t> owner;
    for (std::size_t i = 0; i < n; ++i) {
      owner.emplace(sources_[i], i);
      frontier[i] = {sources_[i]};
    }
    auto live_roots = [&] {
      std::vector<std::size_t> roots;
      for (std::size_t i = 0; i < n; ++i)
        if (ds.find(i) == i && !frontier[i].empty()) roots.push_back(i);
      return roots;
    };
    for (;;) {
      auto roots = live_roots();
      out.live = static_cast<int>(roots.size());
      if (out.live < k) {
        out.status = ExploreStatus::Unsound;
        return out;
      }
      if (out.live == k) break;
      std::size_t pick = n;
      for (std::size_t r : roots) {
        if (layers[r] >= fuel.max_radius) continue;
        if (pick == n || frontier[r].size() < frontier[pick].size() ||
            (frontier[r].size() == frontier[pick].size() && layers[r] < layers[pick]))
          pick = r;
      }
      if (pick == n) return out;
      std::vector<VertexId> next;
      std::vector<std::size_t> contacts;
      for (VertexId v : frontier[pick]) {
        if (steps >= fuel.max_steps) return out;
        ++steps;
        for (const auto &nb : g_.neighbors(v)) {
          if (nb.id == v || nb.multiplicity <= removed_.removed(v, nb.id)) continue;
          auto [it, fresh] = owner.emplace(nb.id, pick);
          if (fresh)
            next.push_back(nb.id);
          else if (ds.find(it->second) != ds.find(pick))
            contacts.push_back(it->second);
        }
      }
      frontier[pick] = std::move(next);
      ++layers[pick];
      for (std::size_t other : contacts) {
        std::size_t a = ds.find(pick), b = ds.find(other);
        if (a == b) continue;
        ds.unite(a, b);
        std::size_t root = ds.find(a), gone = root == a ? b : a;
        auto &keep = frontier[root];
        keep.insert(keep.end(), frontier[gone].begin(), frontier[gone].end());
        frontier[gone].clear();
        layers[root] = std::min(layers[a], layers[b]);
      }
    }
    out.status = ExploreStatus::Done;
    std::map<std::size_t, std::vector<VertexId>> live_groups;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = ds.find(i);
      if (!frontier[r].empty())
        live_groups[r].push_back(sources_[i]);
      else
        out.finite_root_of_source[sources_[i]] = r;
    }
    for (auto &[r, members] : live_groups) {
      std::sort(members.begin(), members.end());
      out.groups.push_back(std::move(members));
    }
    std::sort(out.groups.begin(), out.groups.end());
    for (const auto &[v, i] : owner)
      if (frontier[ds.find(i)].empty()) out.finite_vertices.push_back(v);
    std::sort(out.finite_vertices.begin(), out.finite_vertices.end());
    return out;
  }

 private:
  const GraphOracle &g_;
  const RemovedEdges &removed_;
  std::vector<VertexId> sources_;
};

inline void raise_if_unsound(const ExploreResult &r, int k) {
  if (r.status == ExploreStatus::Unsound)
    throw UnsoundCertificateDetected("certificate claims " + std::to_string(k) +
                                     " ends but only " + std::to_string(r.live) +
                                     " infinite components remain");
}

}  // namespace endgraph::detail
