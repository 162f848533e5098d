/* automatic.cpp -- relation automata, counting projection and formula evaluation.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "endgraph/automatic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace endgraph::automatic {

// ---------------------------------------------------------------- DFAs

namespace {

// Breadth-first construction of a DFA whose states are keys.
template <class Key, class Succ, class Accept>
Dfa explore(int letters, const Key &start, Succ succ, Accept accept) {
  std::map<Key, int> ids{{start, 0}};
  std::vector<Key> keys{start};
  Dfa d;
  d.num_letters = letters;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Key key = keys[i];
    for (int a = 0; a < letters; ++a) {
      Key next = succ(key, a);
      auto [it, fresh] = ids.emplace(next, static_cast<int>(keys.size()));
      if (fresh) keys.push_back(std::move(next));
      d.delta.push_back(it->second);
    }
    d.accepting.push_back(accept(key) ? 1 : 0);
  }
  d.num_states = static_cast<int>(keys.size());
  return d;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int> &key) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : key) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// explore() for integer-vector keys, hashed.
template <class Succ, class Accept>
Dfa explore_hashed(int letters, const std::vector<int> &start, Succ succ, Accept accept) {
  std::unordered_map<std::vector<int>, int, KeyHash> ids{{start, 0}};
  std::vector<const std::vector<int> *> keys{&ids.begin()->first};
  Dfa d;
  d.num_letters = letters;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (int a = 0; a < letters; ++a) {
      auto [it, fresh] = ids.emplace(succ(*keys[i], a), static_cast<int>(keys.size()));
      if (fresh) keys.push_back(&it->first);
      d.delta.push_back(it->second);
    }
    d.accepting.push_back(accept(*keys[i]) ? 1 : 0);
  }
  d.num_states = static_cast<int>(keys.size());
  return d;
}

std::vector<char> coreachable(const Dfa &d) {
  std::vector<std::vector<int>> rev(d.num_states);
  for (int q = 0; q < d.num_states; ++q)
    for (int a = 0; a < d.num_letters; ++a) rev[d.next(q, a)].push_back(q);
  std::vector<char> good(d.accepting.begin(), d.accepting.end());
  std::vector<int> stack;
  for (int q = 0; q < d.num_states; ++q)
    if (good[q]) stack.push_back(q);
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int p : rev[q])
      if (!good[p]) {
        good[p] = 1;
        stack.push_back(p);
      }
  }
  return good;
}

}  // namespace

bool Dfa::accepts(const std::vector<int> &word) const {
  int q = start;
  for (int a : word) {
    if (a < 0 || a >= num_letters) return false;
    q = next(q, a);
  }
  return accepting[q] != 0;
}

Dfa Dfa::trivial(int num_letters, bool accept) {
  Dfa d;
  d.num_states = 1;
  d.num_letters = num_letters;
  d.delta.assign(num_letters, 0);
  d.accepting = {static_cast<char>(accept)};
  return d;
}

Dfa minimize(const Dfa &d) {
  // Reachable part, renumbered in BFS order.
  Dfa r = explore(d.num_letters, d.start, [&](int q, int a) { return d.next(q, a); },
                  [&](int q) { return d.accepting[q] != 0; });
  std::vector<int> cls(r.num_states);
  for (int q = 0; q < r.num_states; ++q) cls[q] = r.accepting[q];
  int count = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(r.num_states);
    for (int q = 0; q < r.num_states; ++q) {
      std::vector<int> sig{cls[q]};
      for (int a = 0; a < r.num_letters; ++a) sig.push_back(cls[r.next(q, a)]);
      next_cls[q] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first->second;
    }
    int n = static_cast<int>(sig_ids.size());
    cls = std::move(next_cls);
    if (n == count) break;
    count = n;
  }
  // Renumber classes so the result is canonical in BFS order from the start.
  Dfa q;
  q.num_letters = r.num_letters;
  std::vector<int> rep(count, -1);
  for (int s = 0; s < r.num_states; ++s)
    if (rep[cls[s]] < 0) rep[cls[s]] = s;
  return explore(r.num_letters, cls[r.start],
                 [&](int c, int a) { return cls[r.next(rep[c], a)]; },
                 [&](int c) { return r.accepting[rep[c]] != 0; });
}

Dfa complement(const Dfa &d) {
  Dfa out = d;
  for (auto &a : out.accepting) a = a ? 0 : 1;
  return out;
}

Dfa product(const Dfa &a, const Dfa &b, bool want_and) {
  if (a.num_letters != b.num_letters) throw ArityMismatch("alphabet sizes differ");
  return explore(
      a.num_letters, std::pair{a.start, b.start},
      [&](const std::pair<int, int> &k, int l) { return std::pair{a.next(k.first, l), b.next(k.second, l)}; },
      [&](const std::pair<int, int> &k) {
        bool x = a.accepting[k.first], y = b.accepting[k.second];
        return want_and ? (x && y) : (x || y);
      });
}

bool is_empty(const Dfa &d) {
  Dfa r = minimize(d);
  return std::none_of(r.accepting.begin(), r.accepting.end(), [](char c) { return c != 0; });
}

bool equivalent(const Dfa &a, const Dfa &b) {
  if (a.num_letters != b.num_letters) return false;
  Dfa x = explore(
      a.num_letters, std::pair{a.start, b.start},
      [&](const std::pair<int, int> &k, int l) { return std::pair{a.next(k.first, l), b.next(k.second, l)}; },
      [&](const std::pair<int, int> &k) {
        return (a.accepting[k.first] != 0) != (b.accepting[k.second] != 0);
      });
  return std::none_of(x.accepting.begin(), x.accepting.end(), [](char c) { return c != 0; });
}

// ---------------------------------------------------------------- relations

int RelationAutomaton::num_letters() const {
  int n = 1;
  for (int i = 0; i < arity; ++i) n *= sigma + 1;
  return n;
}

int RelationAutomaton::encode(const std::vector<int> &digits) const {
  if (static_cast<int>(digits.size()) != arity) throw ArityMismatch("letter arity");
  int letter = 0;
  for (int i = arity - 1; i >= 0; --i) letter = letter * (sigma + 1) + digits[i];
  return letter;
}

std::vector<int> RelationAutomaton::decode(int letter) const {
  std::vector<int> out(arity);
  for (int i = 0; i < arity; ++i) {
    out[i] = letter % (sigma + 1);
    letter /= sigma + 1;
  }
  return out;
}

bool RelationAutomaton::accepts(const std::vector<std::vector<int>> &words) const {
  if (static_cast<int>(words.size()) != arity) throw ArityMismatch("tuple arity");
  std::size_t len = 0;
  for (const auto &w : words) {
    for (int s : w)
      if (s < 0 || s >= sigma) return false;
    len = std::max(len, w.size());
  }
  int q = dfa.start;
  std::vector<int> digits(arity);
  for (std::size_t i = 0; i < len; ++i) {
    for (int t = 0; t < arity; ++t) digits[t] = i < words[t].size() ? words[t][i] : pad();
    q = dfa.next(q, encode(digits));
  }
  return dfa.accepting[q] != 0;
}

namespace {

RelationAutomaton make_relation(int arity, int sigma, Dfa d) {
  RelationAutomaton r;
  r.arity = arity;
  r.sigma = sigma;
  r.dfa = minimize(d);
  return r;
}

void require_compatible(const RelationAutomaton &a, const RelationAutomaton &b) {
  if (a.arity != b.arity) throw ArityMismatch("relation arities differ");
  if (a.sigma != b.sigma) throw ArityMismatch("relation alphabets differ");
}

// Letter with digit x inserted at `track` into the letter of the other tracks.
// wide[letter * (sigma + 1) + x]: the letter of the other tracks with digit x
// inserted at `track`.
std::vector<int> insert_digit_table(const RelationAutomaton &narrow, int track) {
  RelationAutomaton wide;
  wide.arity = narrow.arity + 1;
  wide.sigma = narrow.sigma;
  std::vector<int> out;
  for (int letter = 0; letter < narrow.num_letters(); ++letter)
    for (int x = 0; x <= narrow.sigma; ++x) {
      auto digits = narrow.decode(letter);
      digits.insert(digits.begin() + track, x);
      out.push_back(wide.encode(digits));
    }
  return out;
}

// Tail moves: the counted track reads a symbol while every other track is pad.
std::vector<std::vector<int>> tail_moves(const RelationAutomaton &a, int track) {
  std::vector<std::vector<int>> moves(a.dfa.num_states);
  std::vector<int> digits(a.arity, a.pad());
  for (int q = 0; q < a.dfa.num_states; ++q)
    for (int x = 0; x < a.sigma; ++x) {
      digits[track] = x;
      moves[q].push_back(a.dfa.next(q, a.encode(digits)));
    }
  return moves;
}

}  // namespace

RelationAutomaton padding_automaton(int arity, int sigma) {
  RelationAutomaton shape;
  shape.arity = arity;
  shape.sigma = sigma;
  const int all_pad = shape.all_pad_letter();
  Dfa d = explore(
      shape.num_letters(), 0,
      [&](int mask, int letter) {
        if (mask < 0 || letter == all_pad) return -1;
        auto digits = shape.decode(letter);
        int next = mask;
        for (int t = 0; t < arity; ++t) {
          bool ended = (mask >> t) & 1;
          if (ended && digits[t] != sigma) return -1;
          if (digits[t] == sigma) next |= 1 << t;
        }
        return next;
      },
      [](int mask) { return mask >= 0; });
  return make_relation(arity, sigma, d);
}

RelationAutomaton lift_track(const Dfa &d, int track, int arity) {
  if (track < 0 || track >= arity) throw ArityMismatch("track out of range");
  RelationAutomaton shape;
  shape.arity = arity;
  shape.sigma = d.num_letters;
  const int pad = shape.pad(), all_pad = shape.all_pad_letter();
  using Key = std::pair<int, int>;  // (state, ended); state -1 is the sink
  Dfa out = explore(
      shape.num_letters(), Key{d.start, 0},
      [&](const Key &k, int letter) -> Key {
        if (k.first < 0 || letter == all_pad) return {-1, 0};
        int x = shape.decode(letter)[track];
        if (k.second) return x == pad ? k : Key{-1, 0};
        if (x == pad) return {k.first, 1};
        return {d.next(k.first, x), 0};
      },
      [&](const Key &k) { return k.first >= 0 && d.accepting[k.first]; });
  return make_relation(arity, shape.sigma, out);
}

RelationAutomaton domain_power(const Dfa &d, int arity) {
  RelationAutomaton r = padding_automaton(arity, d.num_letters);
  for (int t = 0; t < arity; ++t) r = relation_and(r, lift_track(d, t, arity));
  return r;
}

RelationAutomaton relation_and(const RelationAutomaton &a, const RelationAutomaton &b) {
  require_compatible(a, b);
  return make_relation(a.arity, a.sigma, product(a.dfa, b.dfa, true));
}

RelationAutomaton relation_or(const RelationAutomaton &a, const RelationAutomaton &b) {
  require_compatible(a, b);
  return make_relation(a.arity, a.sigma, product(a.dfa, b.dfa, false));
}

RelationAutomaton relation_not(const RelationAutomaton &a, const Dfa &domain) {
  if (domain.num_letters != a.sigma) throw ArityMismatch("domain alphabet differs");
  RelationAutomaton c = a;
  c.dfa = complement(a.dfa);
  return relation_and(c, domain_power(domain, a.arity));
}

RelationAutomaton cylindrify(const RelationAutomaton &a, int new_arity,
                             const std::vector<int> &positions) {
  if (static_cast<int>(positions.size()) != a.arity) throw ArityMismatch("position count");
  std::vector<char> used(new_arity, 0);
  for (int p : positions) {
    if (p < 0 || p >= new_arity || used[p]) throw ArityMismatch("bad track position");
    used[p] = 1;
  }
  RelationAutomaton wide;
  wide.arity = new_arity;
  wide.sigma = a.sigma;
  const int all_pad = wide.all_pad_letter(), old_all_pad = a.all_pad_letter();
  Dfa d = explore(
      wide.num_letters(), a.dfa.start,
      [&](int q, int letter) {
        if (q < 0 || letter == all_pad) return -1;
        auto digits = wide.decode(letter);
        std::vector<int> old(a.arity);
        for (int i = 0; i < a.arity; ++i) old[i] = digits[positions[i]];
        int ol = a.encode(old);
        return ol == old_all_pad ? q : a.dfa.next(q, ol);
      },
      [&](int q) { return q >= 0 && a.dfa.accepting[q]; });
  return relation_and(make_relation(new_arity, a.sigma, d),
                      padding_automaton(new_arity, a.sigma));
}

RelationAutomaton project_exists(const RelationAutomaton &a, int track) {
  if (a.arity < 1 || track < 0 || track >= a.arity) throw ArityMismatch("no such track");
  RelationAutomaton narrow;
  narrow.arity = a.arity - 1;
  narrow.sigma = a.sigma;
  const auto useful = coreachable(a.dfa);
  const auto tails = tail_moves(a, track);
  // tail_ok[q]: an accepting state is reachable from q by tail moves.
  std::vector<char> tail_ok(a.dfa.accepting.begin(), a.dfa.accepting.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (int q = 0; q < a.dfa.num_states; ++q)
      if (!tail_ok[q])
        for (int p : tails[q])
          if (tail_ok[p]) {
            tail_ok[q] = 1;
            changed = true;
            break;
          }
  }
  const int all_pad = narrow.all_pad_letter();
  const auto wide = insert_digit_table(narrow, track);
  using Key = std::vector<int>;
  Dfa d = explore_hashed(
      narrow.num_letters(), Key{a.dfa.start},
      [&](const Key &set, int letter) {
        Key out;
        if (letter == all_pad) return out;
        for (int q : set)
          for (int x = 0; x <= a.sigma; ++x) {
            int p = a.dfa.next(q, wide[letter * (a.sigma + 1) + x]);
            if (useful[p]) out.push_back(p);
          }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      },
      [&](const Key &set) {
        return std::any_of(set.begin(), set.end(), [&](int q) { return tail_ok[q] != 0; });
      });
  return make_relation(narrow.arity, narrow.sigma, d);
}

RelationAutomaton permute_tracks(const RelationAutomaton &a, const std::vector<int> &perm) {
  if (static_cast<int>(perm.size()) != a.arity) throw ArityMismatch("permutation size");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < a.arity; ++i)
    if (check[i] != i) throw ArityMismatch("not a permutation");
  RelationAutomaton out = a;
  for (int q = 0; q < a.dfa.num_states; ++q)
    for (int l = 0; l < a.num_letters(); ++l) {
      auto digits = a.decode(l);
      std::vector<int> old(a.arity);
      for (int i = 0; i < a.arity; ++i) old[perm[i]] = digits[i];
      out.dfa.delta[static_cast<std::size_t>(q) * a.num_letters() + l] = a.dfa.next(q, a.encode(old));
    }
  out.dfa = minimize(out.dfa);
  return out;
}

RelationAutomaton minimize(const RelationAutomaton &a) { return make_relation(a.arity, a.sigma, a.dfa); }

bool equivalent(const RelationAutomaton &a, const RelationAutomaton &b) {
  return a.arity == b.arity && a.sigma == b.sigma && equivalent(a.dfa, b.dfa);
}

bool is_empty(const RelationAutomaton &a) { return is_empty(a.dfa); }

RelationAutomaton identity_relation(int sigma) {
  RelationAutomaton shape;
  shape.arity = 2;
  shape.sigma = sigma;
  Dfa d = explore(
      shape.num_letters(), 0,
      [&](int q, int letter) {
        auto dg = shape.decode(letter);
        return q == 0 && dg[0] == dg[1] && dg[0] != sigma ? 0 : 1;
      },
      [](int q) { return q == 0; });
  return make_relation(2, sigma, d);
}

RelationAutomaton llex_less(int sigma) {
  enum { Eq, Lt, Gt, Short, Long, Dead };
  RelationAutomaton shape;
  shape.arity = 2;
  shape.sigma = sigma;
  Dfa d = explore(
      shape.num_letters(), static_cast<int>(Eq),
      [&](int q, int letter) -> int {
        auto dg = shape.decode(letter);
        bool p0 = dg[0] == sigma, p1 = dg[1] == sigma;
        if (q == Dead || (p0 && p1)) return Dead;
        switch (q) {
          case Eq:
          case Lt:
          case Gt:
            if (p0) return Short;
            if (p1) return Long;
            if (q != Eq) return q;
            return dg[0] < dg[1] ? Lt : dg[0] > dg[1] ? Gt : Eq;
          case Short: return p0 ? Short : Dead;
          case Long: return p1 ? Long : Dead;
        }
        return Dead;
      },
      [](int q) { return q == Lt || q == Short; });
  return make_relation(2, sigma, d);
}

RelationAutomaton unary_from_dfa(const Dfa &d, int sigma) {
  if (d.num_letters != sigma) throw ArityMismatch("alphabet size");
  return relation_and(lift_track(d, 0, 1), padding_automaton(1, sigma));
}

Dfa dfa_from_unary(const RelationAutomaton &a) {
  if (a.arity != 1) throw ArityMismatch("expected a unary relation");
  Dfa d;
  d.num_states = a.dfa.num_states;
  d.num_letters = a.sigma;
  d.start = a.dfa.start;
  d.accepting = a.dfa.accepting;
  for (int q = 0; q < d.num_states; ++q)
    for (int x = 0; x < a.sigma; ++x) d.delta.push_back(a.dfa.next(q, x));
  return minimize(d);
}

// ---------------------------------------------------------------- counting

std::string Count::to_string() const {
  switch (kind) {
    case Kind::Exact: return std::to_string(value);
    case Kind::BigEven: return "big-even";
    case Kind::BigOdd: return "big-odd";
    case Kind::Infinite: return "infinite";
  }
  return "";
}

CountSemiring::CountSemiring(int threshold) : threshold_(threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
}

Count CountSemiring::from(std::uint64_t n) const {
  if (n <= static_cast<std::uint64_t>(threshold_)) return {Count::Kind::Exact, static_cast<int>(n)};
  return {n % 2 == 0 ? Count::Kind::BigEven : Count::Kind::BigOdd, 0};
}

std::uint64_t CountSemiring::representative(const Count &c) const {
  auto t = static_cast<std::uint64_t>(threshold_);
  switch (c.kind) {
    case Count::Kind::Exact: return static_cast<std::uint64_t>(c.value);
    case Count::Kind::BigEven: return (t + 1) % 2 == 0 ? t + 1 : t + 2;
    case Count::Kind::BigOdd: return (t + 1) % 2 == 1 ? t + 1 : t + 2;
    case Count::Kind::Infinite: break;
  }
  throw std::logic_error("infinite has no representative");
}

Count CountSemiring::add(const Count &a, const Count &b) const {
  if (a.kind == Count::Kind::Infinite || b.kind == Count::Kind::Infinite) return infinite();
  return from(representative(a) + representative(b));
}

Count CountSemiring::mul(const Count &a, const Count &b) const {
  if (a == zero() || b == zero()) return zero();
  if (a.kind == Count::Kind::Infinite || b.kind == Count::Kind::Infinite) return infinite();
  return from(representative(a) * representative(b));
}

std::vector<Count> CountSemiring::elements() const {
  std::vector<Count> out;
  for (int i = 0; i < threshold_ + 4; ++i) out.push_back(element(i));
  return out;
}

int CountSemiring::index(const Count &c) const {
  switch (c.kind) {
    case Count::Kind::Exact: return c.value;
    case Count::Kind::BigEven: return threshold_ + 1;
    case Count::Kind::BigOdd: return threshold_ + 2;
    case Count::Kind::Infinite: return threshold_ + 3;
  }
  return 0;
}

Count CountSemiring::element(int index) const {
  if (index <= threshold_) return {Count::Kind::Exact, index};
  if (index == threshold_ + 1) return {Count::Kind::BigEven, 0};
  if (index == threshold_ + 2) return {Count::Kind::BigOdd, 0};
  return infinite();
}

bool matches(const Count &c, CountMode mode) {
  switch (mode) {
    case CountMode::Even:
      return (c.kind == Count::Kind::Exact && c.value % 2 == 0) || c.kind == Count::Kind::BigEven;
    case CountMode::Odd:
      return (c.kind == Count::Kind::Exact && c.value % 2 == 1) || c.kind == Count::Kind::BigOdd;
    case CountMode::Infinite: return c.kind == Count::Kind::Infinite;
    case CountMode::ExactlyOne: return c.kind == Count::Kind::Exact && c.value == 1;
  }
  return false;
}

RelationAutomaton counting_project(const RelationAutomaton &a, int track, CountMode mode,
                                   const CountSemiring &sr) {
  if (a.arity < 1 || track < 0 || track >= a.arity) throw ArityMismatch("no such track");
  const int n = a.dfa.num_states;
  const auto useful = coreachable(a.dfa);
  const auto tails = tail_moves(a, track);

  // Productive states reach acceptance by tail moves; a productive state on a
  // tail cycle has infinitely many completions.
  std::vector<char> productive(a.dfa.accepting.begin(), a.dfa.accepting.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (int q = 0; q < n; ++q)
      if (!productive[q])
        for (int p : tails[q])
          if (productive[p]) {
            productive[q] = 1;
            changed = true;
            break;
          }
  }
  // Tarjan-free cycle test: q is cyclic if it reaches itself within productive states.
  std::vector<char> cyclic(n, 0);
  for (int q = 0; q < n; ++q) {
    if (!productive[q]) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> stack(tails[q].begin(), tails[q].end());
    while (!stack.empty() && !cyclic[q]) {
      int p = stack.back();
      stack.pop_back();
      if (!productive[p] || seen[p]) continue;
      if (p == q) cyclic[q] = 1;
      seen[p] = 1;
      stack.insert(stack.end(), tails[p].begin(), tails[p].end());
    }
  }
  std::vector<int> memo(n, -1);  // semiring index of tail(q)
  std::function<Count(int)> tail = [&](int q) -> Count {
    if (memo[q] >= 0) return sr.element(memo[q]);
    Count c = sr.zero();
    if (productive[q]) {
      // Infinite if a cyclic productive state is reachable.
      std::vector<char> seen(n, 0);
      std::vector<int> stack{q};
      bool inf = false;
      while (!stack.empty() && !inf) {
        int p = stack.back();
        stack.pop_back();
        if (!productive[p] || seen[p]) continue;
        seen[p] = 1;
        if (cyclic[p]) inf = true;
        stack.insert(stack.end(), tails[p].begin(), tails[p].end());
      }
      if (inf) {
        c = sr.infinite();
      } else {
        c = a.dfa.accepting[q] ? sr.one() : sr.zero();
        for (int p : tails[q]) c = sr.add(c, tail(p));
      }
    }
    memo[q] = sr.index(c);
    return c;
  };
  std::vector<Count> tail_of(n);
  for (int q = 0; q < n; ++q) tail_of[q] = tail(q);

  // Prefix counts only matter up to what `mode` can observe, so they are
  // collapsed to a representative before being stored.
  const Count two = sr.from(2);
  auto canon = [&](const Count &c) {
    if (c == sr.zero()) return c;
    switch (mode) {
      case CountMode::Infinite: return sr.one();
      case CountMode::ExactlyOne: return c == sr.one() ? c : two;
      case CountMode::Even:
      case CountMode::Odd: return matches(c, CountMode::Odd) ? sr.one() : two;
    }
    return c;
  };

  RelationAutomaton narrow;
  narrow.arity = a.arity - 1;
  narrow.sigma = a.sigma;
  const int all_pad = narrow.all_pad_letter();
  const auto wide = insert_digit_table(narrow, track);
  const int width = static_cast<int>(sr.elements().size());
  // Sparse vector: state * width + semiring index for each nonzero state,
  // ascending. The sink is {-1}.
  using Key = std::vector<int>;
  const Key sink{-1};
  Key start{a.dfa.start * width + sr.index(sr.one())};
  std::vector<Count> acc(n, sr.zero());
  std::vector<int> touched;
  Dfa d = explore_hashed(
      narrow.num_letters(), start,
      [&](const Key &v, int letter) {
        if (v == sink || letter == all_pad) return sink;
        touched.clear();
        for (int e : v) {
          int q = e / width;
          Count w = sr.element(e % width);
          for (int x = 0; x <= a.sigma; ++x) {
            int p = a.dfa.next(q, wide[letter * (a.sigma + 1) + x]);
            if (!useful[p]) continue;
            if (acc[p] == sr.zero()) touched.push_back(p);
            acc[p] = sr.add(acc[p], w);
          }
        }
        std::sort(touched.begin(), touched.end());
        Key out;
        for (int p : touched) {
          out.push_back(p * width + sr.index(canon(acc[p])));
          acc[p] = sr.zero();
        }
        return out;
      },
      [&](const Key &v) {
        if (v == sink) return false;
        Count total = sr.zero();
        for (int e : v) total = sr.add(total, sr.mul(sr.element(e % width), tail_of[e / width]));
        return matches(total, mode);
      });
  // Only tuples of the other tracks that are well padded count.
  return relation_and(make_relation(narrow.arity, narrow.sigma, d),
                      padding_automaton(narrow.arity, narrow.sigma));
}

// ---------------------------------------------------------------- presentations

Presentation normalize(const Presentation &p) {
  if (p.identity_equality()) return p;
  const int sigma = p.sigma();
  auto y_before_x = permute_tracks(llex_less(sigma), {1, 0});
  auto r = relation_and(relation_and(*p.equality, y_before_x), domain_power(p.domain, 2));
  auto has_smaller = project_exists(r, 1);
  Presentation out;
  out.symbols = p.symbols;
  out.domain = dfa_from_unary(relation_not(has_smaller, p.domain));
  out.adjacency = relation_and(p.adjacency, domain_power(out.domain, 2));
  return out;
}

namespace {

std::vector<std::string> tokens_of(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct SectionText {
  std::vector<std::string> states;
  std::string start;
  std::vector<std::string> accept;
  std::vector<std::array<std::string, 3>> moves;
  bool seen_states = false;
};

// Builds a DFA with an extra sink; `letter_of` maps a symbol token to a letter.
Dfa build_section(const SectionText &s, int letters, const std::string &name,
                  const std::function<int(const std::string &)> &letter_of) {
  if (!s.seen_states || s.states.empty())
    throw PresentationSyntaxError(name + ": missing states line");
  std::map<std::string, int> id;
  for (const auto &st : s.states)
    if (!id.emplace(st, static_cast<int>(id.size())).second)
      throw PresentationSyntaxError(name + ": duplicate state " + st);
  auto state = [&](const std::string &st) {
    auto it = id.find(st);
    if (it == id.end()) throw PresentationSyntaxError(name + ": unknown state " + st);
    return it->second;
  };
  const int sink = static_cast<int>(s.states.size());
  Dfa d;
  d.num_states = sink + 1;
  d.num_letters = letters;
  d.delta.assign(static_cast<std::size_t>(d.num_states) * letters, sink);
  d.accepting.assign(d.num_states, 0);
  if (s.start.empty()) throw PresentationSyntaxError(name + ": missing start line");
  d.start = state(s.start);
  for (const auto &a : s.accept) d.accepting[state(a)] = 1;
  std::set<std::pair<int, int>> defined;
  for (const auto &[from, sym, to] : s.moves) {
    int q = state(from), l = letter_of(sym);
    if (!defined.emplace(q, l).second)
      throw PresentationSyntaxError(name + ": nondeterministic move from " + from + " on " + sym);
    d.delta[static_cast<std::size_t>(q) * letters + l] = state(to);
  }
  return d;
}

std::string symbol_pair(const Presentation &p, int digit) {
  return digit == p.sigma() ? "#" : p.symbols[digit];
}

void write_section(std::ostringstream &out, const std::string &header, const Dfa &d,
                   const std::function<std::string(int)> &letter_name,
                   const std::function<bool(int)> &skip_letter) {
  Dfa m = minimize(d);
  auto is_sink = [&](int q) {
    if (m.accepting[q]) return false;
    for (int a = 0; a < m.num_letters; ++a)
      if (m.next(q, a) != q) return false;
    return true;
  };
  out << header << "\n  states";
  for (int q = 0; q < m.num_states; ++q)
    if (!is_sink(q)) out << " q" << q;
  out << "\n  start q" << m.start << "\n  accept";
  for (int q = 0; q < m.num_states; ++q)
    if (m.accepting[q]) out << " q" << q;
  out << "\n";
  for (int q = 0; q < m.num_states; ++q) {
    if (is_sink(q)) continue;
    for (int a = 0; a < m.num_letters; ++a) {
      int r = m.next(q, a);
      if (is_sink(r) || skip_letter(a)) continue;
      out << "  q" << q << " " << letter_name(a) << " q" << r << "\n";
    }
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::map<std::string, SectionText> sections;
  std::string current;
  bool identity = false, have_alphabet = false;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string &msg) {
      throw PresentationSyntaxError("line " + std::to_string(line_no) + ": " + msg);
    };
    const std::string &head = tok[0];
    if (head == "alphabet") {
      if (tok.size() < 2) fail("empty alphabet");
      p.symbols.assign(tok.begin() + 1, tok.end());
      std::set<std::string> uniq(p.symbols.begin(), p.symbols.end());
      if (uniq.size() != p.symbols.size()) fail("duplicate symbol");
      for (const auto &s : p.symbols)
        if (s == "#" || s.find('|') != std::string::npos) fail("reserved symbol " + s);
      have_alphabet = true;
      current.clear();
    } else if (head == "domain" || head == "adjacency" || head == "equality") {
      if (tok.size() == 2 && head == "equality" && tok[1] == "identity") {
        identity = true;
        current.clear();
        continue;
      }
      if (tok.size() != 1) fail("unexpected tokens after " + head);
      if (sections.count(head)) fail("repeated section " + head);
      current = head;
      sections[current];
    } else {
      if (current.empty()) fail("line outside a section");
      auto &s = sections[current];
      if (head == "states") {
        s.states.assign(tok.begin() + 1, tok.end());
        s.seen_states = true;
      } else if (head == "start") {
        if (tok.size() != 2) fail("start takes one state");
        s.start = tok[1];
      } else if (head == "accept") {
        s.accept.assign(tok.begin() + 1, tok.end());
      } else if (tok.size() == 3) {
        s.moves.push_back({tok[0], tok[1], tok[2]});
      } else {
        fail("expected 'state symbol state'");
      }
    }
  }
  if (!have_alphabet) throw PresentationSyntaxError("missing alphabet");
  if (!sections.count("domain")) throw PresentationSyntaxError("missing domain section");
  if (!sections.count("adjacency")) throw PresentationSyntaxError("missing adjacency section");
  const int sigma = p.sigma();
  std::map<std::string, int> sym;
  for (int i = 0; i < sigma; ++i) sym[p.symbols[i]] = i;
  auto digit = [&](const std::string &s) {
    if (s == "#") return sigma;
    auto it = sym.find(s);
    if (it == sym.end()) throw PresentationSyntaxError("unknown symbol " + s);
    return it->second;
  };
  p.domain = minimize(build_section(sections["domain"], sigma, "domain", [&](const std::string &s) {
    int d = digit(s);
    if (d == sigma) throw PresentationSyntaxError("domain: pad symbol not allowed");
    return d;
  }));
  auto pair_letter = [&](const std::string &s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw PresentationSyntaxError("expected a|b, got " + s);
    int a = digit(s.substr(0, bar)), b = digit(s.substr(bar + 1));
    if (a == sigma && b == sigma) throw PresentationSyntaxError("#|# is not a letter");
    return a + b * (sigma + 1);
  };
  const int letters = (sigma + 1) * (sigma + 1);
  auto relation = [&](const std::string &name) {
    RelationAutomaton r;
    r.arity = 2;
    r.sigma = sigma;
    r.dfa = build_section(sections[name], letters, name, pair_letter);
    return relation_and(r, padding_automaton(2, sigma));
  };
  p.adjacency = relation("adjacency");
  if (sections.count("equality")) {
    if (identity) throw PresentationSyntaxError("equality given twice");
    p.equality = relation("equality");
  }
  if (is_empty(p.domain)) throw PresentationSyntaxError("empty domain");
  return p;
}

std::string to_text(const Presentation &p) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto &s : p.symbols) out << " " << s;
  out << "\n";
  write_section(out, "domain", p.domain, [&](int a) { return p.symbols[a]; },
                [](int) { return false; });
  const int sigma = p.sigma();
  auto pair_name = [&](int l) {
    return symbol_pair(p, l % (sigma + 1)) + "|" + symbol_pair(p, l / (sigma + 1));
  };
  auto all_pad = [&](int l) { return l == (sigma + 1) * (sigma + 1) - 1; };
  write_section(out, "adjacency", p.adjacency.dfa, pair_name, all_pad);
  if (p.equality)
    write_section(out, "equality", p.equality->dfa, pair_name, all_pad);
  else
    out << "equality identity\n";
  return out.str();
}

Presentation nline_presentation() {
  return parse_presentation(R"(alphabet 1
domain
  states s
  start s
  accept s
  s 1 s
adjacency
  states both end
  start both
  accept end
  both 1|1 both
  both 1|# end
  both #|1 end
equality identity
)");
}

Presentation zline_presentation() {
  // p1^k encodes k, n1^k encodes -k (k >= 1).
  return parse_presentation(R"(alphabet p n 1
domain
  states s pos neg negk
  start s
  accept pos negk
  s p pos
  s n neg
  pos 1 pos
  neg 1 negk
  negk 1 negk
adjacency
  states s pp nn pn np end
  start s
  accept end
  s p|p pp
  s n|n nn
  s p|n pn
  s n|p np
  pp 1|1 pp
  pp 1|# end
  pp #|1 end
  nn 1|1 nn
  nn 1|# end
  nn #|1 end
  pn #|1 end
  np 1|# end
equality identity
)");
}

Presentation grid_presentation() {
  // A grid vertex is the convolution of two integer codes; a grid symbol is a
  // letter of the two-track integer alphabet, so the four-track adjacency
  // over integer codes is read unchanged as a two-track grid relation.
  Presentation z = zline_presentation();
  const int zs = z.sigma();
  auto az = z.adjacency;
  auto id = relation_and(identity_relation(zs), domain_power(z.domain, 2));
  auto horizontal = relation_and(cylindrify(az, 4, {0, 2}), cylindrify(id, 4, {1, 3}));
  auto vertical = relation_and(cylindrify(id, 4, {0, 2}), cylindrify(az, 4, {1, 3}));
  auto adj4 = relation_and(relation_or(horizontal, vertical), domain_power(z.domain, 4));
  auto dom2 = domain_power(z.domain, 2);

  Presentation g;
  const int gs = (zs + 1) * (zs + 1) - 1;
  const char *names = "pn1_";
  for (int l = 0; l < gs; ++l) {
    g.symbols.push_back(std::string{names[l % (zs + 1)], names[l / (zs + 1)]});
  }
  g.domain.num_states = dom2.dfa.num_states;
  g.domain.num_letters = gs;
  g.domain.start = dom2.dfa.start;
  g.domain.accepting = dom2.dfa.accepting;
  for (int q = 0; q < dom2.dfa.num_states; ++q)
    for (int l = 0; l < gs; ++l) g.domain.delta.push_back(dom2.dfa.next(q, l));
  g.domain = minimize(g.domain);
  g.adjacency.arity = 2;
  g.adjacency.sigma = gs;
  g.adjacency.dfa = adj4.dfa;
  g.adjacency = minimize(g.adjacency);
  return g;
}

// ---------------------------------------------------------------- formulas

namespace {

struct Parser {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  static std::vector<std::string> lex(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
        if (c == '(' || c == ')') out.emplace_back(1, c);
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw FormulaSyntaxError(msg + " at token " + std::to_string(pos));
  }
  const std::string &peek() const {
    if (pos >= toks.size()) fail("unexpected end of formula");
    return toks[pos];
  }
  std::string take() {
    std::string t = peek();
    ++pos;
    return t;
  }
  void expect(const std::string &t) {
    if (take() != t) fail("expected '" + t + "'");
  }
  static bool is_keyword(const std::string &t) {
    static const std::set<std::string> k{"adj", "eq", "in", "inl", "not", "and", "or",
                                         "implies", "exists", "forall", "exists-even",
                                         "exists-odd", "exists-inf", "exists-one", "true",
                                         "false"};
    return k.count(t) != 0;
  }
  std::string variable() {
    std::string t = take();
    if (t == "(" || t == ")" || is_keyword(t)) fail("expected a variable, got '" + t + "'");
    for (char c : t)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
        fail("bad variable name '" + t + "'");
    if (std::isdigit(static_cast<unsigned char>(t[0]))) fail("bad variable name '" + t + "'");
    return t;
  }

  Formula formula() {
    using K = Formula::Kind;
    std::string t = take();
    if (t == "true") return {K::True, {}, {}};
    if (t == "false") return {K::False, {}, {}};
    if (t != "(") fail("expected '(' or a constant, got '" + t + "'");
    std::string op = take();
    Formula f;
    static const std::map<std::string, K> quant{
        {"exists", K::Exists},          {"forall", K::Forall},
        {"exists-even", K::ExistsEven}, {"exists-odd", K::ExistsOdd},
        {"exists-inf", K::ExistsInf},   {"exists-one", K::ExistsOne}};
    if (op == "true" || op == "false") {
      f.kind = op == "true" ? K::True : K::False;
    } else if (op == "adj" || op == "eq") {
      f.kind = op == "adj" ? K::Adj : K::Eq;
      f.vars = {variable(), variable()};
    } else if (op == "in" || op == "inl") {
      f.kind = K::InL;
      f.vars = {variable()};
    } else if (op == "not") {
      f.kind = K::Not;
      f.children.push_back(formula());
    } else if (op == "and" || op == "or") {
      f.kind = op == "and" ? K::And : K::Or;
      while (peek() != ")") f.children.push_back(formula());
      if (f.children.empty()) fail(op + " needs an argument");
    } else if (op == "implies") {
      f.kind = K::Implies;
      f.children.push_back(formula());
      f.children.push_back(formula());
    } else if (auto it = quant.find(op); it != quant.end()) {
      f.kind = it->second;
      f.vars = {variable()};
      f.children.push_back(formula());
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(")");
    return f;
  }
};

const char *op_name(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Adj: return "adj";
    case K::Eq: return "eq";
    case K::InL: return "in";
    case K::Not: return "not";
    case K::And: return "and";
    case K::Or: return "or";
    case K::Implies: return "implies";
    case K::Exists: return "exists";
    case K::Forall: return "forall";
    case K::ExistsEven: return "exists-even";
    case K::ExistsOdd: return "exists-odd";
    case K::ExistsInf: return "exists-inf";
    case K::ExistsOne: return "exists-one";
  }
  return "";
}

class Evaluator {
 public:
  explicit Evaluator(const Presentation &p) : p_(normalize(p)), sigma_(p_.sigma()) {
    adj_ = relation_and(p_.adjacency, domain_power(p_.domain, 2));
  }

  Relation eval(const Formula &f) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::True: return {{}, domain_power(p_.domain, 0)};
      case K::False: {
        RelationAutomaton r = domain_power(p_.domain, 0);
        r.dfa = Dfa::trivial(1, false);
        return {{}, r};
      }
      case K::InL: return {{f.vars[0]}, domain(1)};
      case K::Adj: {
        const auto &x = f.vars[0], &y = f.vars[1];
        if (x == y) return {{x}, adjacency_diagonal()};
        if (x < y) return {{x, y}, adj_};
        return {{y, x}, permute_tracks(adj_, {1, 0})};
      }
      case K::Eq: {
        const auto &x = f.vars[0], &y = f.vars[1];
        if (x == y) return {{x}, domain(1)};
        return {{std::min(x, y), std::max(x, y)},
                relation_and(identity_relation(sigma_), domain(2))};
      }
      case K::Not: {
        Relation r = eval(f.children[0]);
        return {r.vars, relation_not(r.automaton, p_.domain)};
      }
      case K::And:
      case K::Or: {
        Relation acc = eval(f.children[0]);
        for (std::size_t i = 1; i < f.children.size(); ++i)
          acc = combine(acc, eval(f.children[i]), f.kind == K::And);
        return acc;
      }
      case K::Implies: {
        Relation a = eval(f.children[0]);
        a.automaton = relation_not(a.automaton, p_.domain);
        return combine(a, eval(f.children[1]), false);
      }
      case K::Exists: return exists(f.vars[0], eval(f.children[0]));
      case K::Forall: {
        Relation r = eval(f.children[0]);
        r.automaton = relation_not(r.automaton, p_.domain);
        Relation e = exists(f.vars[0], r);
        e.automaton = relation_not(e.automaton, p_.domain);
        return e;
      }
      case K::ExistsEven: return count(f.vars[0], eval(f.children[0]), CountMode::Even);
      case K::ExistsOdd: return count(f.vars[0], eval(f.children[0]), CountMode::Odd);
      case K::ExistsInf: return count(f.vars[0], eval(f.children[0]), CountMode::Infinite);
      case K::ExistsOne: return count(f.vars[0], eval(f.children[0]), CountMode::ExactlyOne);
    }
    throw std::logic_error("unknown formula kind");
  }

 private:
  RelationAutomaton domain(int arity) {
    auto it = powers_.find(arity);
    if (it == powers_.end()) it = powers_.emplace(arity, domain_power(p_.domain, arity)).first;
    return it->second;
  }

  RelationAutomaton adjacency_diagonal() {
    RelationAutomaton shape;
    shape.arity = 1;
    shape.sigma = sigma_;
    const int pad = sigma_;
    Dfa d = explore(
        shape.num_letters(), adj_.dfa.start,
        [&](int q, int x) {
          if (q < 0 || x == pad) return -1;
          return adj_.dfa.next(q, adj_.encode({x, x}));
        },
        [&](int q) { return q >= 0 && adj_.dfa.accepting[q]; });
    RelationAutomaton r;
    r.arity = 1;
    r.sigma = sigma_;
    r.dfa = d;
    return relation_and(r, domain(1));
  }

  Relation widen(const Relation &r, const std::vector<std::string> &vars) {
    if (r.vars == vars) return r;
    std::vector<int> pos;
    for (const auto &v : r.vars)
      pos.push_back(static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
    int n = static_cast<int>(vars.size());
    return {vars, relation_and(cylindrify(r.automaton, n, pos), domain(n))};
  }

  Relation combine(const Relation &a, const Relation &b, bool want_and) {
    std::vector<std::string> vars;
    std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                   std::back_inserter(vars));
    Relation x = widen(a, vars), y = widen(b, vars);
    return {vars, want_and ? relation_and(x.automaton, y.automaton)
                           : relation_or(x.automaton, y.automaton)};
  }

  Relation with_var(const std::string &v, const Relation &r, int &track) {
    std::vector<std::string> vars = r.vars;
    if (!std::binary_search(vars.begin(), vars.end(), v)) {
      vars.insert(std::upper_bound(vars.begin(), vars.end(), v), v);
    }
    track = static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin());
    return widen(r, vars);
  }

  Relation exists(const std::string &v, const Relation &r) {
    int track = 0;
    Relation w = with_var(v, r, track);
    std::vector<std::string> rest = w.vars;
    rest.erase(rest.begin() + track);
    return {rest, project_exists(w.automaton, track)};
  }

  Relation count(const std::string &v, const Relation &r, CountMode mode) {
    int track = 0;
    Relation w = with_var(v, r, track);
    std::vector<std::string> rest = w.vars;
    rest.erase(rest.begin() + track);
    auto projected = counting_project(w.automaton, track, mode);
    return {rest, relation_and(projected, domain(static_cast<int>(rest.size())))};
  }

  Presentation p_;
  int sigma_;
  RelationAutomaton adj_;
  std::map<int, RelationAutomaton> powers_;
};

void collect_free(const Formula &f, std::set<std::string> &bound, std::set<std::string> &out) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Adj:
    case K::Eq:
    case K::InL:
      for (const auto &v : f.vars)
        if (!bound.count(v)) out.insert(v);
      return;
    case K::Exists:
    case K::Forall:
    case K::ExistsEven:
    case K::ExistsOdd:
    case K::ExistsInf:
    case K::ExistsOne: {
      bool fresh = bound.insert(f.vars[0]).second;
      collect_free(f.children[0], bound, out);
      if (fresh) bound.erase(f.vars[0]);
      return;
    }
    default:
      for (const auto &c : f.children) collect_free(c, bound, out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p;
  p.toks = Parser::lex(text);
  if (p.toks.empty()) throw FormulaSyntaxError("empty formula");
  Formula f = p.formula();
  if (p.pos != p.toks.size()) p.fail("trailing input");
  return f;
}

std::string to_string(const Formula &f) {
  using K = Formula::Kind;
  if (f.kind == K::True || f.kind == K::False) return op_name(f.kind);
  std::string s = std::string("(") + op_name(f.kind);
  for (const auto &v : f.vars) s += " " + v;
  for (const auto &c : f.children) s += " " + to_string(c);
  return s + ")";
}

std::set<std::string> free_variables(const Formula &f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

Relation evaluate(const Presentation &p, const Formula &f) {
  Evaluator ev(p);
  return ev.eval(f);
}

bool eval_sentence(const Presentation &p, const Formula &f) {
  auto free = free_variables(f);
  if (!free.empty()) throw UnboundVariable("free variable '" + *free.begin() + "'");
  Relation r = evaluate(p, f);
  return r.automaton.dfa.accepting[r.automaton.dfa.start] != 0;
}

const char *const kOneWayFormula = "(exists-one u (exists-odd v (adj u v)))";
const char *const kTwoWayFormula = "(forall u (exists-even v (adj u v)))";

bool decide_eulerian_automatic(const Presentation &p, EulerKind which) {
  return eval_sentence(p, parse_formula(which == EulerKind::OneWay ? kOneWayFormula
                                                                   : kTwoWayFormula));
}

}  // namespace endgraph::automatic
