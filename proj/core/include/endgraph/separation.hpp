/* separation.hpp -- counting infinite components after finite edge removal.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "endgraph/graph_core.hpp"

namespace endgraph {

struct Fuel {
  int max_radius = 64;
  std::int64_t max_steps = 20'000'000;
};

struct Unknown {
  std::int64_t fuel_spent = 0;
};

template <class T>
using Outcome = std::variant<T, Unknown>;

template <class T>
bool is_unknown(const Outcome<T> &o) {
  return std::holds_alternative<Unknown>(o);
}

template <class T>
const T &value_of(const Outcome<T> &o) {
  if (const T *p = std::get_if<T>(&o)) return *p;
  throw std::logic_error("outcome is Unknown");
}

struct TriBool {
  enum class Value { Yes, No, Unknown };
  Value value = Value::Unknown;
  std::int64_t fuel_spent = 0;

  static TriBool yes() { return {Value::Yes, 0}; }
  static TriBool no() { return {Value::No, 0}; }
  static TriBool unknown(std::int64_t spent) { return {Value::Unknown, spent}; }
  bool is_yes() const { return value == Value::Yes; }
  bool is_no() const { return value == Value::No; }
  bool is_unknown() const { return value == Value::Unknown; }
};

std::string to_string(const TriBool &t);

// The number of ends of G and one edge set W with Comp(W) equal to it.
struct EndsCertificate {
  int ends = 1;
  EdgeSet witness;
};

struct BoundaryPartition {
  std::vector<std::vector<VertexId>> infinite_groups;  // one per infinite component
  std::vector<VertexId> finite_group;
};

class UnsoundCertificateDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAShell : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// How a certified query is reduced to a finite problem.
//   BallCover  grows basepoint balls U_r0, U_r1 and closes off finite pockets,
//              then reads connectivity inside the finite graph G[U].
//   Local      classifies the components of G minus (E u W) and glues them
//              back along the edges of W not in E. No basepoint ball needed.
enum class Route { BallCover, Local };

// Vertices incident to e that keep at least one edge after removing e.
std::vector<VertexId> boundary_vertices(const GraphOracle &g, const EdgeSet &e);

// Number of classes of intersecting E_{v,n} among the boundary vertices whose
// E_{v,n} still grows at n. The empty set gives 1 (G is infinite and connected).
int comp_approx(const GraphOracle &g, const EdgeSet &e, int n);
// comp_approx for n = 0..n_max from one search.
std::vector<int> comp_approx_sequence(const GraphOracle &g, const EdgeSet &e, int n_max);

Outcome<int> decide_comp(const GraphOracle &g, const EdgeSet &e, const EndsCertificate &cert,
                         const Fuel &fuel, Route route = Route::BallCover);

Outcome<BoundaryPartition> boundary_partition(const GraphOracle &g, const EdgeSet &e,
                                              const EndsCertificate &cert, const Fuel &fuel,
                                              Route route = Route::BallCover);

TriBool semidecide_not_separating(const GraphOracle &g, const EdgeSet &e, const Fuel &fuel);

using EdgeSetPredicate = std::function<bool(const EdgeSet &)>;

std::vector<EdgeSet> minimal_separating_subsets(const GraphOracle &g, const EdgeSet &shell,
                                                const EdgeSetPredicate &sep_decider);

Outcome<int> ends_from_sepmax(const GraphOracle &g, const EdgeSetPredicate &sepmax_oracle,
                              const Fuel &fuel);

Outcome<EdgeSet> sepmax_witness_from_ends(const GraphOracle &g, int k,
                                          const EdgeSetPredicate &sep_decider, const Fuel &fuel);

// Sep decider that trusts comp_approx at a fixed depth (an upper bound that is
// exact once n exceeds the size of every finite pocket and reconnection).
EdgeSetPredicate approx_sep_decider(const GraphOracle &g, int n);

// Comp for many edge sets inside one fixed finite cover, sharing a single run
// of the boundary classification. Every queried E must lie inside `cover`.
class CertifiedSeparator {
 public:
  CertifiedSeparator(const GraphOracle &g, const EdgeSet &cover, const EndsCertificate &cert,
                     const Fuel &fuel);
  bool ready() const { return ready_; }
  std::int64_t fuel_spent() const { return steps_; }
  int comp(const EdgeSet &e) const;
  BoundaryPartition partition(const EdgeSet &e) const;
  // Cover endpoints by component of G minus the cover: [0, infinite_nodes())
  // are the infinite components, larger ids are finite pieces; -1 if absent.
  int node_of(VertexId v) const;
  int infinite_nodes() const { return infinite_nodes_; }
  int node_count() const { return node_count_; }
  EdgeSet cover() const { return cover_.to_edge_set(); }

 private:
  const GraphOracle &g_;
  RemovedEdges cover_;
  bool ready_ = false;
  std::int64_t steps_ = 0;
  int infinite_nodes_ = 0;
  // Endpoint of a cover edge -> node id; nodes [0, infinite_nodes_) are the
  // infinite components of G minus the cover, the rest are finite.
  std::unordered_map<VertexId, int> node_of_;
  int node_count_ = 0;
};

}  // namespace endgraph
