/* automatic.hpp -- automatic presentations and counting-quantifier model checking.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace endgraph::automatic {

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FormulaSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnboundVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PresentationSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Complete DFA over letters 0..num_letters-1.
struct Dfa {
  int num_states = 0;
  int num_letters = 0;
  int start = 0;
  std::vector<int> delta;  // delta[q * num_letters + a]
  std::vector<char> accepting;

  int next(int q, int a) const { return delta[static_cast<std::size_t>(q) * num_letters + a]; }
  bool accepts(const std::vector<int> &word) const;
  // One state; accepts everything or nothing.
  static Dfa trivial(int num_letters, bool accept);
};

Dfa minimize(const Dfa &d);
Dfa complement(const Dfa &d);
Dfa product(const Dfa &a, const Dfa &b, bool want_and);
bool is_empty(const Dfa &d);
bool equivalent(const Dfa &a, const Dfa &b);

// Synchronous n-tape relation over symbols 0..sigma-1 with pad digit sigma.
// A letter packs one digit per track: sum of digit_i * (sigma+1)^i. The
// all-pad letter always leads to a rejecting sink.
struct RelationAutomaton {
  int arity = 0;
  int sigma = 1;
  Dfa dfa;

  int num_letters() const;
  int pad() const { return sigma; }
  int all_pad_letter() const { return num_letters() - 1; }
  int encode(const std::vector<int> &digits) const;
  std::vector<int> decode(int letter) const;
  // Convolution of the words (left aligned, padded on the right).
  bool accepts(const std::vector<std::vector<int>> &words) const;
};

// Tuples of words obeying the padding discipline.
RelationAutomaton padding_automaton(int arity, int sigma);
// Tuples whose `track` word is in L(d), other tracks unconstrained.
RelationAutomaton lift_track(const Dfa &d, int track, int arity);
// L(d)^arity with the padding discipline.
RelationAutomaton domain_power(const Dfa &d, int arity);
RelationAutomaton relation_and(const RelationAutomaton &a, const RelationAutomaton &b);
RelationAutomaton relation_or(const RelationAutomaton &a, const RelationAutomaton &b);
// Complement inside L(domain)^arity.
RelationAutomaton relation_not(const RelationAutomaton &a, const Dfa &domain);
// Inserts tracks: old track i becomes track positions[i] of a new_arity relation.
RelationAutomaton cylindrify(const RelationAutomaton &a, int new_arity,
                             const std::vector<int> &positions);
RelationAutomaton project_exists(const RelationAutomaton &a, int track);
// New track i reads old track perm[i].
RelationAutomaton permute_tracks(const RelationAutomaton &a, const std::vector<int> &perm);
RelationAutomaton minimize(const RelationAutomaton &a);
bool equivalent(const RelationAutomaton &a, const RelationAutomaton &b);
bool is_empty(const RelationAutomaton &a);
// {(x, x)} over all words.
RelationAutomaton identity_relation(int sigma);
// {(x, y) : x < y} in length-lexicographic order.
RelationAutomaton llex_less(int sigma);
RelationAutomaton unary_from_dfa(const Dfa &d, int sigma);
Dfa dfa_from_unary(const RelationAutomaton &a);

// Cardinalities of N u {inf} up to the classes 0..T, big even, big odd, infinite.
struct Count {
  enum class Kind { Exact, BigEven, BigOdd, Infinite };
  Kind kind = Kind::Exact;
  int value = 0;  // Exact only

  bool operator==(const Count &) const = default;
  std::string to_string() const;
};

class CountSemiring {
 public:
  explicit CountSemiring(int threshold = 2);
  int threshold() const { return threshold_; }
  Count zero() const { return {}; }
  Count one() const { return from(1); }
  Count infinite() const { return {Count::Kind::Infinite, 0}; }
  Count from(std::uint64_t n) const;
  Count add(const Count &a, const Count &b) const;
  Count mul(const Count &a, const Count &b) const;
  std::vector<Count> elements() const;
  int index(const Count &c) const;
  Count element(int index) const;

 private:
  std::uint64_t representative(const Count &c) const;
  int threshold_;
};

enum class CountMode { Even, Odd, Infinite, ExactlyOne };
bool matches(const Count &c, CountMode mode);

// Accepts the other tracks iff the number of completions on `track` is in `mode`.
RelationAutomaton counting_project(const RelationAutomaton &a, int track, CountMode mode,
                                   const CountSemiring &semiring = CountSemiring());

struct Presentation {
  std::vector<std::string> symbols;  // sigma = symbols.size()
  Dfa domain;
  RelationAutomaton adjacency;
  std::optional<RelationAutomaton> equality;  // nullopt: identity

  int sigma() const { return static_cast<int>(symbols.size()); }
  bool identity_equality() const { return !equality.has_value(); }
};

// Keeps the length-lexicographically least word of each equality class.
Presentation normalize(const Presentation &p);

Presentation parse_presentation(std::string_view text);
std::string to_text(const Presentation &p);

Presentation nline_presentation();
Presentation zline_presentation();
Presentation grid_presentation();

struct Formula {
  enum class Kind {
    True,
    False,
    Adj,
    Eq,
    InL,
    Not,
    And,
    Or,
    Implies,
    Exists,
    Forall,
    ExistsEven,
    ExistsOdd,
    ExistsInf,
    ExistsOne,
  };
  Kind kind = Kind::True;
  std::vector<std::string> vars;  // atom arguments or the bound variable
  std::vector<Formula> children;
};

Formula parse_formula(std::string_view text);
std::string to_string(const Formula &f);
std::set<std::string> free_variables(const Formula &f);

// A definable relation; track i carries vars[i], vars sorted.
struct Relation {
  std::vector<std::string> vars;
  RelationAutomaton automaton;
};

Relation evaluate(const Presentation &p, const Formula &f);
bool eval_sentence(const Presentation &p, const Formula &f);

enum class EulerKind { OneWay, TwoWay };
extern const char *const kOneWayFormula;
extern const char *const kTwoWayFormula;
bool decide_eulerian_automatic(const Presentation &p, EulerKind which);

}  // namespace endgraph::automatic
