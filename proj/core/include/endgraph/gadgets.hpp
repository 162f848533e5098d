/* gadgets.hpp -- schedule-driven graph families and basic fixtures.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endgraph/graph_core.hpp"
#include "endgraph/separation.hpp"

namespace endgraph {

class ScheduleSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KindScheduleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite stand-in for a machine trace. Stages are integers >= 0.
//
//   Halting        halted_by(s) iff s >= halt_step; `never` leaves it unset.
//   CeEnumeration  the listed stages, then every later stage when `forever`
//                  (with no listed stages, `forever` means every stage >= 1).
//   LimitApprox    f(0) = 0 and f flips exactly at the listed change stages.
struct Schedule {
  enum class Kind { Halting, CeEnumeration, LimitApprox };

  Kind kind = Kind::Halting;
  std::optional<int> halt_step;
  std::vector<int> stages;  // event stages or mind-change stages
  bool forever = false;

  static Schedule never();
  static Schedule halt_at(int s);
  static Schedule events(std::vector<int> stages, bool forever_after = false);
  static Schedule events_all();
  static Schedule changes(std::vector<int> stages);

  // Literals: never, halt@S, events@a,b,c, events@a,b+ (every stage after b),
  // events-all, events-none, changes@a,b, changes-none.
  static Schedule parse(std::string_view literal);
  std::string literal() const;

  bool halted_by(int s) const;
  bool halts_exactly_at(int s) const;
  bool event_at(int s) const;
  int value_at(int s) const;
  bool changes_at(int s) const;
  // Last finite event or change stage; 0 if none.
  int last_stage() const;
};

struct GadgetKind {
  enum class Tag {
    CycleChain,
    CycleChainWithRays,
    OneWayMulti,
    Doubled,
    Sigma21Line,
    Pi1Line,
    Delta2TwoEnded,
    LinesWithSticks,
    Comb,
    BinaryTree,
  };
  Tag tag = Tag::CycleChain;
  int rays = 1;  // total number of branches at vertex 0 for CycleChainWithRays
  // BinaryTree: a heap-indexed vertex (root 1) is kept iff it and all its
  // ancestors satisfy the predicate. Empty keeps the full tree.
  std::function<bool(VertexId, const Schedule &)> predicate;

  static Schedule::Kind required_schedule(Tag tag);
};

GraphPtr build_gadget(const GadgetKind &kind, const Schedule &schedule);

// Basic fixtures.
GraphPtr nline();                       // 0 - 1 - 2 - ...
GraphPtr zline();                       // ... -1 - 0 - 1 - ...
GraphPtr nline_with_pendant(VertexId at = 5, VertexId pendant = -1);
GraphPtr full_binary_tree();            // heap indices, root 1
GraphPtr grid2d();                      // Z^2, pairs packed

// Bijection Z^2 -> Z: zigzag both coordinates, Cantor-pair, unzigzag.
VertexId pack_pair(VertexId a, VertexId b);
std::pair<VertexId, VertexId> unpack_pair(VertexId id);

// Branch c (1..rays-1) of CycleChainWithRays, position t >= 1.
VertexId ray_vertex(int branch, std::int64_t position);

// Cartesian product; (a, b) is Cantor-paired on non-negative factor ids.
class ProductOracle : public GraphOracle {
 public:
  ProductOracle(GraphPtr first, GraphPtr second);
  bool contains(VertexId v) const override;
  std::vector<Neighbor> neighbors(VertexId v) const override;
  VertexId basepoint() const override;
  bool is_multigraph() const override;
  std::string name() const override;
  std::string label(VertexId v) const override;

  VertexId vertex(VertexId a, VertexId b) const;
  std::pair<VertexId, VertexId> coordinates(VertexId v) const;
  const GraphOracle &first() const { return *first_; }
  const GraphOracle &second() const { return *second_; }

 private:
  GraphPtr first_, second_;
};

std::shared_ptr<const ProductOracle> product_graph(GraphPtr t1, GraphPtr t2);

// d(u,u') + d(v,v') for a = (u,v), b = (u',v'), with the factor distances
// found by BFS. When `validate` is set the sum is checked against a BFS in
// the product; Unknown if either search exceeds fuel.
Outcome<int> lambda_distance(const ProductOracle &g, VertexId a, VertexId b, const Fuel &fuel,
                             bool validate = true);

struct GadgetInfo {
  std::string key;
  std::string description;
  std::string schedule_kind;
};
std::vector<GadgetInfo> gadget_registry();
// `key[:schedule-literal]`, e.g. "lines-with-sticks:halt@3", "cycle-chain-rays3:events-all".
GraphPtr graph_from_spec(std::string_view spec);

}  // namespace endgraph
