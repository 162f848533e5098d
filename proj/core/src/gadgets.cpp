/* gadgets.cpp -- schedules, staged line families, trees and products.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

namespace endgraph {

// ---------------------------------------------------------------- schedules

namespace {

void require_increasing(const std::vector<int> &stages, int min_stage) {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i] < min_stage)
      throw ScheduleSyntaxError("stage " + std::to_string(stages[i]) + " below " +
                                std::to_string(min_stage));
    if (i > 0 && stages[i] <= stages[i - 1])
      throw ScheduleSyntaxError("stages must be strictly increasing");
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ScheduleSyntaxError("bad stage number '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_list(std::string_view s, bool *plus) {
  if (plus != nullptr) {
    *plus = !s.empty() && s.back() == '+';
    if (*plus) s.remove_suffix(1);
  }
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
    if (s.empty()) throw ScheduleSyntaxError("trailing comma");
  }
  if (out.empty()) throw ScheduleSyntaxError("empty stage list");
  return out;
}

std::string join(const std::vector<int> &v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

Schedule Schedule::never() { return Schedule{}; }

Schedule Schedule::halt_at(int s) {
  if (s < 0) throw ScheduleSyntaxError("halting step must be >= 0");
  Schedule out;
  out.halt_step = s;
  return out;
}

Schedule Schedule::events(std::vector<int> stages, bool forever_after) {
  require_increasing(stages, 0);
  Schedule out;
  out.kind = Kind::CeEnumeration;
  out.stages = std::move(stages);
  out.forever = forever_after;
  return out;
}

Schedule Schedule::events_all() { return events({}, true); }

Schedule Schedule::changes(std::vector<int> stages) {
  require_increasing(stages, 1);
  Schedule out;
  out.kind = Kind::LimitApprox;
  out.stages = std::move(stages);
  return out;
}

Schedule Schedule::parse(std::string_view lit) {
  if (lit == "never") return never();
  if (lit == "events-all") return events_all();
  if (lit == "events-none") return events({});
  if (lit == "changes-none") return changes({});
  if (lit.starts_with("halt@")) return halt_at(parse_int(lit.substr(5)));
  if (lit.starts_with("events@")) {
    bool plus = false;
    auto stages = parse_list(lit.substr(7), &plus);
    return events(std::move(stages), plus);
  }
  if (lit.starts_with("changes@")) return changes(parse_list(lit.substr(8), nullptr));
  throw ScheduleSyntaxError("unknown schedule literal '" + std::string(lit) + "'");
}

std::string Schedule::literal() const {
  switch (kind) {
    case Kind::Halting:
      return halt_step ? "halt@" + std::to_string(*halt_step) : "never";
    case Kind::CeEnumeration:
      if (stages.empty()) return forever ? "events-all" : "events-none";
      return "events@" + join(stages) + (forever ? "+" : "");
    case Kind::LimitApprox:
      return stages.empty() ? "changes-none" : "changes@" + join(stages);
  }
  return "";
}

bool Schedule::halted_by(int s) const { return halt_step && s >= *halt_step; }

bool Schedule::halts_exactly_at(int s) const { return halt_step && s == *halt_step; }

bool Schedule::event_at(int s) const {
  if (std::binary_search(stages.begin(), stages.end(), s)) return true;
  if (!forever) return false;
  return stages.empty() ? s >= 1 : s > stages.back();
}

bool Schedule::changes_at(int s) const {
  return std::binary_search(stages.begin(), stages.end(), s);
}

int Schedule::value_at(int s) const {
  auto n = std::upper_bound(stages.begin(), stages.end(), s) - stages.begin();
  return static_cast<int>(n % 2);
}

int Schedule::last_stage() const {
  if (kind == Kind::Halting) return halt_step.value_or(0);
  return stages.empty() ? 0 : stages.back();
}

Schedule::Kind GadgetKind::required_schedule(Tag tag) {
  switch (tag) {
    case Tag::CycleChain:
    case Tag::CycleChainWithRays:
    case Tag::OneWayMulti:
    case Tag::Doubled:
    case Tag::Comb:
      return Schedule::Kind::CeEnumeration;
    case Tag::Sigma21Line:
    case Tag::Delta2TwoEnded:
      return Schedule::Kind::LimitApprox;
    case Tag::Pi1Line:
    case Tag::LinesWithSticks:
    case Tag::BinaryTree:
      return Schedule::Kind::Halting;
  }
  return Schedule::Kind::Halting;
}

// ---------------------------------------------------------------- packing

namespace {

__extension__ typedef __int128 i128;

i128 zigzag(i128 a) { return a >= 0 ? 2 * a : -2 * a - 1; }
i128 unzigzag(i128 n) { return n % 2 == 0 ? n / 2 : -(n + 1) / 2; }

VertexId to_vertex(i128 x) {
  if (x > std::numeric_limits<VertexId>::max() || x < std::numeric_limits<VertexId>::min())
    throw std::overflow_error("vertex packing overflow");
  return static_cast<VertexId>(x);
}

constexpr VertexId kChainLimit = VertexId{1} << 31;
constexpr VertexId kRayStride = VertexId{1} << 32;

}  // namespace

VertexId pack_pair(VertexId a, VertexId b) {
  i128 x = zigzag(a), y = zigzag(b);
  i128 w = x + y;
  i128 n = w * (w + 1) / 2 + y;
  if (n > std::numeric_limits<VertexId>::max()) throw std::overflow_error("pair too large");
  return to_vertex(unzigzag(n));
}

std::pair<VertexId, VertexId> unpack_pair(VertexId id) {
  i128 n = zigzag(id);
  // w = floor((sqrt(8n+1)-1)/2), corrected after the floating estimate.
  auto w = static_cast<i128>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (w > 0 && w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  i128 y = n - w * (w + 1) / 2;
  i128 x = w - y;
  return {to_vertex(unzigzag(x)), to_vertex(unzigzag(y))};
}

VertexId ray_vertex(int branch, std::int64_t position) {
  if (branch < 1 || position < 1) throw std::invalid_argument("bad ray coordinates");
  return to_vertex(i128{branch} * kRayStride + position);
}

// ---------------------------------------------------------------- oracles

namespace {

void add_neighbor(std::map<VertexId, int> &acc, VertexId id, int m) {
  if (m > 0) acc[id] += m;
}

std::vector<Neighbor> to_list(const std::map<VertexId, int> &acc) {
  std::vector<Neighbor> out;
  for (const auto &[id, m] : acc) out.push_back({id, m});
  return out;
}

struct StageEdge {
  VertexId a, b;
  int m;
};

// A line family on Z (or N) whose edges are produced stage by stage; stage s
// only touches vertices with |v| in {s, s+1}. Optional rays hang off 0.
class StagedLine : public GraphOracle {
 public:
  using StageFn = std::function<std::vector<StageEdge>(int)>;

  StagedLine(std::string name, bool signed_domain, bool multi, StageFn stage, int rays = 1)
      : name_(std::move(name)),
        signed_(signed_domain),
        multi_(multi),
        stage_(std::move(stage)),
        rays_(rays) {}

  bool contains(VertexId v) const override {
    if (v >= kRayStride) {
      VertexId c = v / kRayStride, t = v % kRayStride;
      return c >= 1 && c < rays_ && t >= 1;
    }
    if (v < 0) return signed_ && v > -kChainLimit;
    return v < kChainLimit;
  }

  std::vector<Neighbor> neighbors(VertexId v) const override {
    require_vertex(*this, v);
    std::map<VertexId, int> acc;
    if (v >= kRayStride) {
      VertexId t = v % kRayStride;
      add_neighbor(acc, t == 1 ? 0 : v - 1, 1);
      add_neighbor(acc, v + 1, 1);
      return to_list(acc);
    }
    const VertexId a = v < 0 ? -v : v;
    for (VertexId s = std::max<VertexId>(0, a - 1); s <= a; ++s)
      for (const auto &e : stage_(static_cast<int>(s))) {
        if (e.a == v) add_neighbor(acc, e.b, e.m);
        if (e.b == v && e.a != v) add_neighbor(acc, e.a, e.m);
      }
    if (v == 0)
      for (int c = 1; c < rays_; ++c) add_neighbor(acc, ray_vertex(c, 1), 1);
    return to_list(acc);
  }

  VertexId basepoint() const override { return 0; }
  bool is_multigraph() const override { return multi_; }
  std::string name() const override { return name_; }
  std::string label(VertexId v) const override {
    if (v >= kRayStride)
      return "r" + std::to_string(v / kRayStride) + "." + std::to_string(v % kRayStride);
    return std::to_string(v);
  }

 private:
  std::string name_;
  bool signed_, multi_;
  StageFn stage_;
  int rays_;
};

class Comb : public GraphOracle {
 public:
  explicit Comb(Schedule s) : s_(std::move(s)) {}

  bool present(VertexId c, VertexId t) const {
    if (c < 0 || t < 0 || c >= kChainLimit) return false;
    return t == 0 || t <= c || s_.event_at(static_cast<int>(c));
  }
  bool contains(VertexId v) const override {
    auto [c, t] = unpack_pair(v);
    return present(c, t);
  }
  std::vector<Neighbor> neighbors(VertexId v) const override {
    require_vertex(*this, v);
    auto [c, t] = unpack_pair(v);
    std::map<VertexId, int> acc;
    if (t == 0) {
      if (c > 0) add_neighbor(acc, pack_pair(c - 1, 0), 1);
      add_neighbor(acc, pack_pair(c + 1, 0), 1);
    } else {
      add_neighbor(acc, pack_pair(c, t - 1), 1);
    }
    if (present(c, t + 1)) add_neighbor(acc, pack_pair(c, t + 1), 1);
    return to_list(acc);
  }
  VertexId basepoint() const override { return pack_pair(0, 0); }
  bool is_multigraph() const override { return false; }
  std::string name() const override { return "comb:" + s_.literal(); }
  std::string label(VertexId v) const override {
    auto [c, t] = unpack_pair(v);
    return "(" + std::to_string(c) + "," + std::to_string(t) + ")";
  }

 private:
  Schedule s_;
};

class HeapTree : public GraphOracle {
 public:
  using Keep = std::function<bool(VertexId)>;
  HeapTree(std::string name, Keep keep) : name_(std::move(name)), keep_(std::move(keep)) {}

  bool contains(VertexId v) const override {
    if (v < 1) return false;
    for (VertexId x = v; x >= 1; x /= 2)
      if (keep_ && !keep_(x)) return false;
    return true;
  }
  std::vector<Neighbor> neighbors(VertexId v) const override {
    require_vertex(*this, v);
    if (v >= (VertexId{1} << 61)) throw std::overflow_error("tree vertex too deep");
    std::vector<Neighbor> out;
    if (v > 1) out.push_back({v / 2, 1});
    for (VertexId c : {2 * v, 2 * v + 1})
      if (!keep_ || keep_(c)) out.push_back({c, 1});
    return out;
  }
  VertexId basepoint() const override { return 1; }
  bool is_multigraph() const override { return false; }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Keep keep_;
};

class Line : public GraphOracle {
 public:
  Line(bool signed_domain, std::optional<std::pair<VertexId, VertexId>> pendant)
      : signed_(signed_domain), pendant_(pendant) {}
  bool contains(VertexId v) const override {
    if (pendant_ && v == pendant_->second) return true;
    return signed_ || v >= 0;
  }
  std::vector<Neighbor> neighbors(VertexId v) const override {
    require_vertex(*this, v);
    std::map<VertexId, int> acc;
    if (pendant_ && v == pendant_->second) {
      acc[pendant_->first] = 1;
      return to_list(acc);
    }
    if (signed_ || v > 0) acc[v - 1] = 1;
    acc[v + 1] = 1;
    if (pendant_ && v == pendant_->first) acc[pendant_->second] = 1;
    return to_list(acc);
  }
  VertexId basepoint() const override { return 0; }
  bool is_multigraph() const override { return false; }
  std::string name() const override {
    if (pendant_) return "nline-pendant";
    return signed_ ? "zline" : "nline";
  }

 private:
  bool signed_;
  std::optional<std::pair<VertexId, VertexId>> pendant_;
};

class Grid : public GraphOracle {
 public:
  bool contains(VertexId) const override { return true; }
  std::vector<Neighbor> neighbors(VertexId v) const override {
    auto [x, y] = unpack_pair(v);
    std::map<VertexId, int> acc;
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      acc[pack_pair(x + dx, y + dy)] = 1;
    return to_list(acc);
  }
  VertexId basepoint() const override { return pack_pair(0, 0); }
  bool is_multigraph() const override { return false; }
  std::string name() const override { return "grid"; }
  std::string label(VertexId v) const override {
    auto [x, y] = unpack_pair(v);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

void require_chain_events(const Schedule &s) {
  if (!s.stages.empty() && s.stages.front() < 1)
    throw KindScheduleMismatch("chain gadgets need event stages >= 1");
}

// The cycle-chain edge law with every copy multiplied by `mult(edge)`.
StagedLine::StageFn chain_stage(const Schedule &s, int positive_mult, int other_mult) {
  return [s, positive_mult, other_mult](int st) {
    std::vector<StageEdge> out{{st, st + 1, positive_mult}};
    if (s.event_at(st) && st >= 1) {
      out.push_back({-st, st, other_mult});
      out.push_back({-st - 1, st, other_mult});
    } else {
      out.push_back({-st - 1, -st, other_mult});
    }
    return out;
  };
}

}  // namespace

GraphPtr build_gadget(const GadgetKind &kind, const Schedule &schedule) {
  using Tag = GadgetKind::Tag;
  if (schedule.kind != GadgetKind::required_schedule(kind.tag))
    throw KindScheduleMismatch("schedule '" + schedule.literal() + "' has the wrong kind");
  const Schedule s = schedule;
  switch (kind.tag) {
    case Tag::CycleChain:
      require_chain_events(s);
      return std::make_shared<StagedLine>("cycle-chain:" + s.literal(), true, false,
                                          chain_stage(s, 1, 1));
    case Tag::CycleChainWithRays:
      require_chain_events(s);
      if (kind.rays < 1) throw std::invalid_argument("rays must be >= 1");
      return std::make_shared<StagedLine>(
          "cycle-chain-rays" + std::to_string(kind.rays) + ":" + s.literal(), true, false,
          chain_stage(s, 1, 1), kind.rays);
    case Tag::OneWayMulti:
      require_chain_events(s);
      return std::make_shared<StagedLine>("one-way-multi:" + s.literal(), true, true,
                                          chain_stage(s, 2, 1));
    case Tag::Doubled:
      require_chain_events(s);
      return std::make_shared<StagedLine>("doubled:" + s.literal(), true, true,
                                          chain_stage(s, 2, 2));
    case Tag::Sigma21Line:
      return std::make_shared<StagedLine>(
          "sigma21:" + s.literal(), false, true, [s](int st) {
            return std::vector<StageEdge>{{st, st + 1, s.value_at(st) == 0 ? 2 : 1}};
          });
    case Tag::Pi1Line:
      return std::make_shared<StagedLine>(
          "pi1:" + s.literal(), false, true, [s](int st) {
            return std::vector<StageEdge>{{st, st + 1, s.halts_exactly_at(st) ? 1 : 2}};
          });
    case Tag::Delta2TwoEnded:
      return std::make_shared<StagedLine>(
          "delta2:" + s.literal(), true, true, [s](int st) {
            auto m = [&](int t) { return s.value_at(t) == 0 ? 2 : 1; };
            if (st >= 1 && s.changes_at(st))
              return std::vector<StageEdge>{
                  {-st, st, m(st - 1)}, {st, st + 1, m(st)}, {-st - 1, st, m(st)}};
            return std::vector<StageEdge>{{st, st + 1, m(st)}, {-st - 1, -st, m(st)}};
          });
    case Tag::LinesWithSticks:
      return std::make_shared<StagedLine>(
          "lines-with-sticks:" + s.literal(), true, false, [s](int st) {
            std::vector<StageEdge> out{{st, st + 1, 1}};
            if (s.halts_exactly_at(st))
              out.push_back({-st - 1, st + 1, 1});
            else
              out.push_back({-st - 1, -st, 1});
            return out;
          });
    case Tag::Comb:
      return std::make_shared<Comb>(s);
    case Tag::BinaryTree: {
      auto pred = kind.predicate;
      HeapTree::Keep keep;
      if (pred) keep = [pred, s](VertexId v) { return pred(v, s); };
      return std::make_shared<HeapTree>("binary-tree:" + s.literal(), keep);
    }
  }
  throw std::invalid_argument("unknown gadget tag");
}

GraphPtr nline() { return std::make_shared<Line>(false, std::nullopt); }
GraphPtr zline() { return std::make_shared<Line>(true, std::nullopt); }

GraphPtr nline_with_pendant(VertexId at, VertexId pendant) {
  if (at < 0 || pendant >= 0) throw std::invalid_argument("pendant must be negative");
  return std::make_shared<Line>(false, std::pair{at, pendant});
}

GraphPtr full_binary_tree() { return std::make_shared<HeapTree>("binary-tree", nullptr); }

GraphPtr grid2d() { return std::make_shared<Grid>(); }

// ---------------------------------------------------------------- product

namespace {

// Cantor pairing on N^2, so ids grow with a + b and least-id choices stay
// near the corner. Factor ids must be non-negative.
VertexId pack_natural(VertexId a, VertexId b) {
  if (a < 0 || b < 0) throw std::invalid_argument("product factors need non-negative ids");
  i128 w = i128{a} + b;
  i128 n = w * (w + 1) / 2 + b;
  if (n > std::numeric_limits<VertexId>::max()) throw std::overflow_error("pair too large");
  return to_vertex(n);
}

std::pair<VertexId, VertexId> unpack_natural(VertexId id) {
  if (id < 0) return {-1, -1};
  i128 n = id;
  auto w = static_cast<i128>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (w > 0 && w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  i128 b = n - w * (w + 1) / 2;
  return {to_vertex(w - b), to_vertex(b)};
}

}  // namespace

ProductOracle::ProductOracle(GraphPtr first, GraphPtr second)
    : first_(std::move(first)), second_(std::move(second)) {}

VertexId ProductOracle::vertex(VertexId a, VertexId b) const { return pack_natural(a, b); }

std::pair<VertexId, VertexId> ProductOracle::coordinates(VertexId v) const {
  return unpack_natural(v);
}

bool ProductOracle::contains(VertexId v) const {
  auto [a, b] = unpack_natural(v);
  return first_->contains(a) && second_->contains(b);
}

std::vector<Neighbor> ProductOracle::neighbors(VertexId v) const {
  require_vertex(*this, v);
  auto [a, b] = unpack_natural(v);
  std::map<VertexId, int> acc;
  for (const auto &n : first_->neighbors(a)) add_neighbor(acc, pack_natural(n.id, b), n.multiplicity);
  for (const auto &n : second_->neighbors(b)) add_neighbor(acc, pack_natural(a, n.id), n.multiplicity);
  return to_list(acc);
}

VertexId ProductOracle::basepoint() const {
  return pack_natural(first_->basepoint(), second_->basepoint());
}

bool ProductOracle::is_multigraph() const {
  return first_->is_multigraph() || second_->is_multigraph();
}

std::string ProductOracle::name() const {
  return "product(" + first_->name() + "," + second_->name() + ")";
}

std::string ProductOracle::label(VertexId v) const {
  auto [a, b] = unpack_natural(v);
  return "(" + first_->label(a) + "," + second_->label(b) + ")";
}

std::shared_ptr<const ProductOracle> product_graph(GraphPtr t1, GraphPtr t2) {
  return std::make_shared<ProductOracle>(std::move(t1), std::move(t2));
}

Outcome<int> lambda_distance(const ProductOracle &g, VertexId a, VertexId b, const Fuel &fuel,
                             bool validate) {
  require_vertex(g, a);
  require_vertex(g, b);
  auto [a1, a2] = unpack_natural(a);
  auto [b1, b2] = unpack_natural(b);
  auto d1 = bfs_distance(g.first(), a1, b1, fuel.max_radius, fuel.max_steps);
  auto d2 = bfs_distance(g.second(), a2, b2, fuel.max_radius, fuel.max_steps);
  if (!d1 || !d2) return Unknown{fuel.max_steps};
  int sum = *d1 + *d2;
  if (validate) {
    auto d = bfs_distance(g, a, b, sum, fuel.max_steps);
    if (!d) return Unknown{fuel.max_steps};
    if (*d != sum)
      throw std::logic_error("product distance " + std::to_string(*d) +
                             " differs from factor sum " + std::to_string(sum));
  }
  return sum;
}

// ---------------------------------------------------------------- registry

namespace {

// Heap id v is a right child iff v is odd and v > 1.
bool no_two_right_steps(VertexId v) {
  return !(v > 1 && v % 2 == 1 && v / 2 > 1 && (v / 2) % 2 == 1);
}

}  // namespace

std::vector<GadgetInfo> gadget_registry() {
  return {
      {"nline", "the ray 0 - 1 - 2 - ...", "none"},
      {"zline", "the two-way line on Z", "none"},
      {"nline-pendant", "the ray with a pendant vertex -1 at 5", "none"},
      {"binary-tree", "full binary tree, heap indices, root 1", "none"},
      {"binary-tree-pruned", "binary tree without two consecutive right children", "none"},
      {"lambda", "product of two full binary trees", "none"},
      {"lambda-pruned", "product of two pruned binary trees", "none"},
      {"grid", "the square grid Z^2", "none"},
      {"cycle-chain", "cycles glued along a ray; one end iff events never stop", "events"},
      {"cycle-chain-raysK", "cycle chain with K-1 extra rays at 0 (K = 2..9)", "events"},
      {"one-way-multi", "cycle chain with doubled nonnegative edges", "events"},
      {"doubled", "cycle chain with every edge doubled", "events"},
      {"sigma21", "ray with one or two copies per edge; odd vertices at mind changes",
       "changes"},
      {"pi1", "doubled ray with a single edge at the halting step", "halt"},
      {"delta2", "two-ended line; Eulerian iff the number of mind changes is odd", "changes"},
      {"lines-with-sticks", "two-ended tree; {(0,1)} separates iff never halts", "halt"},
      {"comb", "spine with a tooth per column; column c infinite iff event at c", "events"},
  };
}

GraphPtr graph_from_spec(std::string_view spec) {
  using Tag = GadgetKind::Tag;
  auto colon = spec.find(':');
  std::string key(spec.substr(0, colon));
  std::optional<Schedule> sched;
  if (colon != std::string_view::npos) sched = Schedule::parse(spec.substr(colon + 1));
  auto plain = [&](GraphPtr g) {
    if (sched) throw std::invalid_argument("graph '" + key + "' takes no schedule");
    return g;
  };
  if (key == "nline") return plain(nline());
  if (key == "zline") return plain(zline());
  if (key == "nline-pendant") return plain(nline_with_pendant());
  if (key == "binary-tree") return plain(full_binary_tree());
  if (key == "grid") return plain(grid2d());
  if (key == "binary-tree-pruned" || key == "lambda-pruned") {
    GadgetKind k;
    k.tag = Tag::BinaryTree;
    k.predicate = [](VertexId v, const Schedule &) { return no_two_right_steps(v); };
    auto tree = [&] { return build_gadget(k, Schedule::never()); };
    if (key == "lambda-pruned") return plain(product_graph(tree(), tree()));
    return plain(tree());
  }
  if (key == "lambda") return plain(product_graph(full_binary_tree(), full_binary_tree()));
  static const std::map<std::string, Tag> tags{
      {"cycle-chain", Tag::CycleChain},   {"one-way-multi", Tag::OneWayMulti},
      {"doubled", Tag::Doubled},          {"sigma21", Tag::Sigma21Line},
      {"pi1", Tag::Pi1Line},              {"delta2", Tag::Delta2TwoEnded},
      {"lines-with-sticks", Tag::LinesWithSticks}, {"comb", Tag::Comb},
  };
  GadgetKind kind;
  if (key.starts_with("cycle-chain-rays")) {
    std::string_view digits = std::string_view(key).substr(16);
    int rays = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rays);
    if (ec != std::errc() || p != digits.data() + digits.size() || rays < 2 || rays > 9)
      throw std::invalid_argument("bad ray count in '" + key + "'");
    kind.tag = Tag::CycleChainWithRays;
    kind.rays = rays;
  } else {
    auto it = tags.find(key);
    if (it == tags.end()) throw std::invalid_argument("unknown graph '" + key + "'");
    kind.tag = it->second;
  }
  if (!sched) throw std::invalid_argument("graph '" + key + "' needs a schedule");
  return build_gadget(kind, *sched);
}

}  // namespace endgraph
