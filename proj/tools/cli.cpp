/* cli.cpp -- command dispatch for the endgraph tool.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "endgraph/automatic.hpp"
#include "endgraph/eulerian.hpp"
#include "endgraph/gadgets.hpp"
#include "endgraph/paths.hpp"
#include "endgraph/separation.hpp"

namespace endgraph::cli {

EdgeSet parse_edges(const std::string &text) {
  EdgeSet out;
  std::string rest;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) rest += c;
  if (rest.empty() || rest == "{}") return out;
  static const std::regex item(R"(\((-?\d+),(-?\d+)(?:,(\d+))?\))");
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::smatch m;
    std::string tail = rest.substr(pos);
    if (!std::regex_search(tail, m, item, std::regex_constants::match_continuous))
      throw std::invalid_argument("malformed edge list near '" + tail + "'");
    int slot = m[3].matched ? std::stoi(m[3].str()) : 0;
    out.insert(make_edge(std::stoll(m[1].str()), std::stoll(m[2].str()), slot));
    pos += m.length(0);
    if (pos < rest.size()) {
      if (rest[pos] != ',') throw std::invalid_argument("expected ',' between edges");
      ++pos;
      if (pos == rest.size()) throw std::invalid_argument("trailing ',' in edge list");
    }
  }
  return out;
}

std::vector<VertexId> parse_vertices(const std::string &text) {
  std::vector<VertexId> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t used = 0;
    VertexId v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception &) {
      throw std::invalid_argument("malformed vertex '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("malformed vertex '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

namespace {

struct Options {
  std::string graph;
  std::string edges;
  std::optional<int> ends;
  std::string witness;
  int max_radius = Fuel{}.max_radius;
  std::int64_t max_steps = Fuel{}.max_steps;
  int auto_depth = 32;
  std::string route = "ball-cover";
  std::optional<VertexId> center;
  int radius = 3;
  std::optional<int> n;
  int n_max = 16;
  std::optional<int> shell_radius;
  int k = 1;
  std::string path;
  std::optional<VertexId> start;
  int length = 10;
  std::string mode = "one-way";
  std::optional<int> parity_radius;
  std::optional<int> loc_radius;
  std::string presentation;
  std::string preset;
  std::string formula;
  std::string formula_file;
  std::string which = "both";
  std::string out_file;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Session {
 public:
  Session(const std::string &command, const Options &o, std::ostream &out)
      : cmd_(command), o_(o), out_(out) {
    out_ << "# endgraph " << cmd_ << "\n";
  }

  Fuel fuel() const { return {o_.max_radius, o_.max_steps}; }

  void echo(const std::string &key, const std::string &value) {
    out_ << "# " << key << ": " << value << "\n";
  }

  GraphPtr graph() {
    if (o_.graph.empty()) throw UsageError("--graph is required");
    auto g = graph_from_spec(o_.graph);
    echo("graph", o_.graph);
    return g;
  }

  void echo_fuel() {
    echo("fuel", "radius=" + std::to_string(o_.max_radius) + " steps=" + std::to_string(o_.max_steps));
  }

  EdgeSet edges(const GraphOracle &g) {
    EdgeSet e = parse_edges(o_.edges);
    validate_edges(g, e);
    echo("edges", to_string(e));
    return e;
  }

  // The ends certificate; nullopt means `--witness auto` ran out of fuel.
  std::optional<EndsCertificate> certificate(const GraphOracle &g) {
    if (!o_.ends) throw UsageError("--ends is required");
    if (*o_.ends < 1) throw UsageError("--ends must be at least 1");
    EndsCertificate cert;
    cert.ends = *o_.ends;
    echo("ends", std::to_string(cert.ends));
    if (o_.witness == "auto") {
      auto w = sepmax_witness_from_ends(g, cert.ends, approx_sep_decider(g, o_.auto_depth), fuel());
      if (is_unknown(w)) {
        echo("witness", "auto (not found within fuel)");
        unknown_spent_ = std::get<Unknown>(w).fuel_spent;
        return std::nullopt;
      }
      cert.witness = value_of(w);
      echo("witness", to_string(cert.witness) + " (auto, depth " + std::to_string(o_.auto_depth) + ")");
    } else {
      cert.witness = parse_edges(o_.witness);
      validate_edges(g, cert.witness);
      echo("witness", to_string(cert.witness));
    }
    return cert;
  }

  Route route() {
    echo("route", o_.route);
    if (o_.route == "ball-cover") return Route::BallCover;
    if (o_.route == "local") return Route::Local;
    throw UsageError("--route must be ball-cover or local");
  }

  int unknown(std::int64_t spent) {
    out_ << "Unknown(" << spent << ")\n";
    return kExitUnknown;
  }
  int unknown_certificate() { return unknown(unknown_spent_); }

  automatic::Presentation presentation() {
    using namespace automatic;
    if (!o_.presentation.empty() == !o_.preset.empty())
      throw UsageError("give exactly one of --presentation and --preset");
    if (!o_.preset.empty()) {
      echo("preset", o_.preset);
      if (o_.preset == "nline") return nline_presentation();
      if (o_.preset == "zline") return zline_presentation();
      if (o_.preset == "grid") return grid_presentation();
      throw UsageError("unknown preset '" + o_.preset + "' (nline, zline, grid)");
    }
    std::ifstream in(o_.presentation);
    if (!in) throw UsageError("cannot read " + o_.presentation);
    std::stringstream text;
    text << in.rdbuf();
    echo("presentation", o_.presentation);
    return parse_presentation(text.str());
  }

  std::ostream &out() { return out_; }

 private:
  std::string cmd_;
  const Options &o_;
  std::ostream &out_;
  std::int64_t unknown_spent_ = 0;
};

int cmd_ball(Session &s, const Options &o) {
  auto g = s.graph();
  VertexId c = o.center.value_or(g->basepoint());
  s.echo("center", std::to_string(c));
  s.echo("radius", std::to_string(o.radius));
  if (o.radius < 0) throw UsageError("--radius must be nonnegative");
  auto b = ball(*g, c, o.radius);
  s.out() << "vertices: " << b.vertices.size() << "\nedges: " << b.edges.size() << "\n";
  for (VertexId v : b.vertices) s.out() << v << " d=" << b.distance(v) << " deg=" << degree(*g, v) << "\n";
  return kExitDefinite;
}

int cmd_comp_approx(Session &s, const Options &o) {
  auto g = s.graph();
  auto e = s.edges(*g);
  if (o.n) {
    s.echo("n", std::to_string(*o.n));
    s.out() << comp_approx(*g, e, *o.n) << "\n";
    return kExitDefinite;
  }
  s.echo("n-max", std::to_string(o.n_max));
  auto seq = comp_approx_sequence(*g, e, o.n_max);
  for (std::size_t n = 0; n < seq.size(); ++n) s.out() << n << " " << seq[n] << "\n";
  return kExitDefinite;
}

int cmd_decide_comp(Session &s, const Options &o) {
  (void)o;
  auto g = s.graph();
  auto e = s.edges(*g);
  auto route = s.route();
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  auto r = decide_comp(*g, e, *cert, s.fuel(), route);
  if (is_unknown(r)) return s.unknown(std::get<Unknown>(r).fuel_spent);
  s.out() << value_of(r) << "\n";
  return kExitDefinite;
}

int cmd_boundary(Session &s, const Options &o) {
  (void)o;
  auto g = s.graph();
  auto e = s.edges(*g);
  auto route = s.route();
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  auto r = boundary_partition(*g, e, *cert, s.fuel(), route);
  if (is_unknown(r)) return s.unknown(std::get<Unknown>(r).fuel_spent);
  const auto &p = value_of(r);
  auto list = [](const std::vector<VertexId> &vs) {
    std::string t;
    for (VertexId v : vs) t += (t.empty() ? "" : " ") + std::to_string(v);
    return t.empty() ? "-" : t;
  };
  s.out() << "infinite components: " << p.infinite_groups.size() << "\n";
  for (std::size_t i = 0; i < p.infinite_groups.size(); ++i)
    s.out() << "infinite " << i << ": " << list(p.infinite_groups[i]) << "\n";
  s.out() << "finite: " << list(p.finite_group) << "\n";
  return kExitDefinite;
}

int cmd_sep_semidecide(Session &s, const Options &o) {
  (void)o;
  auto g = s.graph();
  auto e = s.edges(*g);
  s.echo_fuel();
  auto t = semidecide_not_separating(*g, e, s.fuel());
  if (t.is_unknown()) return s.unknown(t.fuel_spent);
  s.out() << (t.is_yes() ? "not separating" : "separating") << "\n";
  return kExitDefinite;
}

EdgeSetPredicate sep_decider(Session &s, const GraphOracle &g, const Options &o,
                             std::optional<EndsCertificate> &cert, bool &unknown_seen) {
  if (o.ends) {
    cert = s.certificate(g);
    if (!cert) return nullptr;
    Fuel f = s.fuel();
    return [&g, &cert, f, &unknown_seen](const EdgeSet &e) {
      auto r = decide_comp(g, e, *cert, f);
      if (is_unknown(r)) {
        unknown_seen = true;
        return false;
      }
      return value_of(r) >= 2;
    };
  }
  s.echo("sep", "comp_approx at depth " + std::to_string(o.auto_depth));
  return approx_sep_decider(g, o.auto_depth);
}

int cmd_minimal_sep(Session &s, const Options &o) {
  auto g = s.graph();
  EdgeSet shell;
  if (o.shell_radius) {
    s.echo("shell-radius", std::to_string(*o.shell_radius));
    shell = sphere_shell(*g, *o.shell_radius);
    s.echo("edges", to_string(shell));
  } else {
    shell = s.edges(*g);
  }
  s.echo_fuel();
  std::optional<EndsCertificate> cert;
  bool unknown_seen = false;
  auto sep = sep_decider(s, *g, o, cert, unknown_seen);
  if (!sep) return s.unknown_certificate();
  auto sets = minimal_separating_subsets(*g, shell, sep);
  if (unknown_seen) return s.unknown(s.fuel().max_steps);
  s.out() << "minimal separating subsets: " << sets.size() << "\n";
  for (const auto &x : sets) s.out() << to_string(x) << "\n";
  return kExitDefinite;
}

int cmd_ends_from_sepmax(Session &s, const Options &o) {
  (void)o;
  auto g = s.graph();
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  bool unknown_seen = false;
  Fuel f = s.fuel();
  const auto &c = *cert;
  EdgeSetPredicate sepmax = [&](const EdgeSet &e) {
    auto r = decide_comp(*g, e, c, f);
    if (is_unknown(r)) {
      unknown_seen = true;
      return false;
    }
    return value_of(r) == c.ends;
  };
  auto r = ends_from_sepmax(*g, sepmax, f);
  if (is_unknown(r) || unknown_seen) return s.unknown(f.max_steps);
  s.out() << value_of(r) << "\n";
  return kExitDefinite;
}

int cmd_sepmax_witness(Session &s, const Options &o) {
  auto g = s.graph();
  s.echo("k", std::to_string(o.k));
  s.echo_fuel();
  std::optional<EndsCertificate> cert;
  bool unknown_seen = false;
  auto sep = sep_decider(s, *g, o, cert, unknown_seen);
  if (!sep) return s.unknown_certificate();
  auto r = sepmax_witness_from_ends(*g, o.k, sep, s.fuel());
  if (is_unknown(r)) return s.unknown(std::get<Unknown>(r).fuel_spent);
  if (unknown_seen) return s.unknown(s.fuel().max_steps);
  s.out() << to_string(value_of(r)) << "\n";
  return kExitDefinite;
}

int cmd_path_extend(Session &s, const Options &o) {
  auto g = s.graph();
  auto p = parse_vertices(o.path);
  std::string shown;
  for (VertexId v : p) shown += (shown.empty() ? "" : ",") + std::to_string(v);
  s.echo("path", shown);
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  auto t = decide_extendable(*g, p, *cert, s.fuel());
  if (t.is_unknown()) return s.unknown(t.fuel_spent);
  s.out() << (t.is_yes() ? "Yes" : "No") << "\n";
  return kExitDefinite;
}

int cmd_greedy_path(Session &s, const Options &o) {
  auto g = s.graph();
  VertexId start = o.start.value_or(g->basepoint());
  s.echo("start", std::to_string(start));
  s.echo("length", std::to_string(o.length));
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  auto r = greedy_infinite_path(*g, start, *cert, o.length, s.fuel());
  if (is_unknown(r)) return s.unknown(std::get<Unknown>(r).fuel_spent);
  std::string shown;
  for (VertexId v : value_of(r)) shown += (shown.empty() ? "" : ",") + std::to_string(v);
  s.out() << shown << "\n";
  return kExitDefinite;
}

int cmd_euler_check(Session &s, const Options &o) {
  auto g = s.graph();
  s.echo("mode", o.mode);
  if (o.mode != "one-way" && o.mode != "two-way")
    throw UsageError("--mode must be one-way or two-way");
  std::optional<ParityCertificate> parity;
  std::optional<LocalizationCertificate> loc;
  if (o.parity_radius) {
    parity = ParityCertificate{*o.parity_radius};
    s.echo("parity-radius", std::to_string(*o.parity_radius));
  }
  if (o.loc_radius) {
    loc = LocalizationCertificate{*o.loc_radius};
    s.echo("loc-radius", std::to_string(*o.loc_radius));
  }
  s.echo_fuel();
  auto cert = s.certificate(*g);
  if (!cert) return s.unknown_certificate();
  EulerVerdict v = o.mode == "one-way" ? check_one_way(*g, *cert, parity, s.fuel())
                                       : check_two_way(*g, *cert, parity, loc, s.fuel());
  s.out() << to_string(v) << "\n";
  if (!v.clause.empty()) s.out() << "clause: " << v.clause << "\n";
  if (!v.reason.empty()) s.out() << "reason: " << v.reason << "\n";
  if (!v.odd_vertices.empty()) {
    std::string t;
    for (VertexId x : v.odd_vertices) t += (t.empty() ? "" : ",") + std::to_string(x);
    s.out() << "odd vertices: " << t << "\n";
  }
  if (!v.separating_set.empty()) s.out() << "separating set: " << to_string(v.separating_set) << "\n";
  for (const auto &c : v.certified) s.out() << "certified: " << c << "\n";
  for (const auto &c : v.searched) s.out() << "searched: " << c << "\n";
  return v.unknown() ? kExitUnknown : kExitDefinite;
}

int cmd_gadget_list(Session &s, const Options &) {
  for (const auto &info : gadget_registry())
    s.out() << info.key << "\t" << info.schedule_kind << "\t" << info.description << "\n";
  s.out() << "schedules: never, halt@S, events@a,b,c, events@a,b+, events-all, events-none, "
             "changes@a,b, changes-none\n";
  return kExitDefinite;
}

int cmd_automatic_eval(Session &s, const Options &o) {
  auto p = s.presentation();
  std::string text = o.formula;
  if (!o.formula_file.empty()) {
    if (!text.empty()) throw UsageError("give only one of --formula and --formula-file");
    std::ifstream in(o.formula_file);
    if (!in) throw UsageError("cannot read " + o.formula_file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw UsageError("--formula is required");
  auto f = automatic::parse_formula(text);
  s.echo("formula", automatic::to_string(f));
  auto free = automatic::free_variables(f);
  if (free.empty()) {
    s.out() << (automatic::eval_sentence(p, f) ? "true" : "false") << "\n";
    return kExitDefinite;
  }
  auto r = automatic::evaluate(p, f);
  std::string vars;
  for (const auto &v : r.vars) vars += (vars.empty() ? "" : ",") + v;
  s.out() << "relation over (" << vars << "), " << r.automaton.dfa.num_states << " states, "
          << (automatic::is_empty(r.automaton) ? "empty" : "nonempty") << "\n";
  return kExitDefinite;
}

int cmd_automatic_euler(Session &s, const Options &o) {
  using automatic::EulerKind;
  auto p = s.presentation();
  s.echo("which", o.which);
  if (o.which != "one-way" && o.which != "two-way" && o.which != "both")
    throw UsageError("--which must be one-way, two-way or both");
  if (o.which != "two-way")
    s.out() << "one-way: " << (decide_eulerian_automatic(p, EulerKind::OneWay) ? "true" : "false") << "\n";
  if (o.which != "one-way")
    s.out() << "two-way: " << (decide_eulerian_automatic(p, EulerKind::TwoWay) ? "true" : "false") << "\n";
  return kExitDefinite;
}

int cmd_dot_export(Session &s, const Options &o) {
  auto g = s.graph();
  VertexId c = o.center.value_or(g->basepoint());
  s.echo("center", std::to_string(c));
  s.echo("radius", std::to_string(o.radius));
  EdgeSet removed = o.edges.empty() ? EdgeSet{} : s.edges(*g);
  std::string dot = to_dot(*g, ball(*g, c, o.radius), removed);
  if (o.out_file.empty()) {
    s.out() << dot;
  } else {
    std::ofstream f(o.out_file);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << dot;
    s.echo("written", o.out_file);
  }
  return kExitDefinite;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Ends, separation and Eulerian conditions on infinite graphs", "endgraph"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App *c) {
    c->add_option("--graph", o.graph, "registry gadget, key[:schedule]")->required();
  };
  auto add_fuel = [&](CLI::App *c) {
    c->add_option("--max-radius", o.max_radius, "search radius bound");
    c->add_option("--max-steps", o.max_steps, "search step bound");
  };
  auto add_cert = [&](CLI::App *c, bool required) {
    auto *e = c->add_option("--ends", o.ends, "number of ends");
    if (required) e->required();
    c->add_option("--witness", o.witness, "SepMax witness edges, or auto");
    c->add_option("--auto-depth", o.auto_depth, "comp_approx depth for --witness auto");
  };
  auto add_edges = [&](CLI::App *c, bool required) {
    auto *e = c->add_option("--edges", o.edges, "edge set, e.g. \"(0,1),(5,6,1)\"");
    if (required) e->required();
  };
  auto add_presentation = [&](CLI::App *c) {
    c->add_option("--presentation", o.presentation, "presentation file");
    c->add_option("--preset", o.preset, "nline, zline or grid");
  };

  std::map<CLI::App *, int (*)(Session &, const Options &)> handlers;
  auto sub = [&](const char *name, const char *help, int (*fn)(Session &, const Options &)) {
    auto *c = app.add_subcommand(name, help);
    handlers[c] = fn;
    return c;
  };

  auto *c = sub("ball", "print a ball of the graph", cmd_ball);
  add_graph(c);
  c->add_option("--center", o.center, "center vertex (default basepoint)");
  c->add_option("--radius", o.radius, "radius");

  c = sub("comp-approx", "the upper approximation of Comp", cmd_comp_approx);
  add_graph(c);
  add_edges(c, true);
  c->add_option("--n", o.n, "single depth");
  c->add_option("--n-max", o.n_max, "sequence for depths 0..n-max");

  c = sub("decide-comp", "certified number of infinite components", cmd_decide_comp);
  add_graph(c);
  add_edges(c, true);
  add_cert(c, true);
  add_fuel(c);
  c->add_option("--route", o.route, "ball-cover or local");

  c = sub("boundary", "partition boundary vertices by component", cmd_boundary);
  add_graph(c);
  add_edges(c, true);
  add_cert(c, true);
  add_fuel(c);
  c->add_option("--route", o.route, "ball-cover or local");

  c = sub("sep-semidecide", "confirm that an edge set does not separate", cmd_sep_semidecide);
  add_graph(c);
  add_edges(c, true);
  add_fuel(c);

  c = sub("minimal-sep", "inclusion-minimal separating subsets of a shell", cmd_minimal_sep);
  add_graph(c);
  add_edges(c, false);
  c->add_option("--shell-radius", o.shell_radius, "use the sphere shell of this radius");
  add_cert(c, false);
  add_fuel(c);

  c = sub("ends-from-sepmax", "number of ends from a SepMax oracle", cmd_ends_from_sepmax);
  add_graph(c);
  add_cert(c, true);
  add_fuel(c);

  c = sub("sepmax-witness", "a set with Comp = k from a Sep oracle", cmd_sepmax_witness);
  add_graph(c);
  c->add_option("--k", o.k, "number of ends")->required();
  add_cert(c, false);
  add_fuel(c);

  c = sub("path-extend", "does a finite simple path extend to an infinite one", cmd_path_extend);
  add_graph(c);
  c->add_option("--path", o.path, "vertices, e.g. 0,1,2")->required();
  add_cert(c, true);
  add_fuel(c);

  c = sub("greedy-path", "an infinite simple path prefix without backtracking", cmd_greedy_path);
  add_graph(c);
  c->add_option("--start", o.start, "first vertex (default basepoint)");
  c->add_option("--length", o.length, "number of edges");
  add_cert(c, true);
  add_fuel(c);

  c = sub("euler-check", "conditions for one-way or two-way Eulerian paths", cmd_euler_check);
  add_graph(c);
  c->add_option("--mode", o.mode, "one-way or two-way");
  c->add_option("--parity-radius", o.parity_radius, "parity certificate radius");
  c->add_option("--loc-radius", o.loc_radius, "localization certificate radius");
  add_cert(c, true);
  add_fuel(c);

  sub("gadget-list", "list registry graphs and schedule literals", cmd_gadget_list);

  c = sub("automatic-eval", "evaluate a formula on an automatic presentation", cmd_automatic_eval);
  add_presentation(c);
  c->add_option("--formula", o.formula, "s-expression");
  c->add_option("--formula-file", o.formula_file, "file holding the formula");

  c = sub("automatic-euler", "Eulerian conditions on a one-ended automatic graph",
          cmd_automatic_euler);
  add_presentation(c);
  c->add_option("--which", o.which, "one-way, two-way or both");

  c = sub("dot-export", "write a ball in DOT format", cmd_dot_export);
  add_graph(c);
  c->add_option("--center", o.center, "center vertex (default basepoint)");
  c->add_option("--radius", o.radius, "radius");
  add_edges(c, false);
  c->add_option("--out", o.out_file, "output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      auto chosen = app.get_subcommands();
      out << (chosen.empty() ? app.help() : chosen.front()->help());
      return kExitDefinite;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto &[cmd, fn] : handlers) {
    if (!cmd->parsed()) continue;
    try {
      Session s(cmd->get_name(), o, out);
      return fn(s, o);
    } catch (const std::invalid_argument &e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const UnsoundCertificateDetected &e) {
      err << "error: unsound certificate: " << e.what() << "\n";
      return kExitUsage;
    } catch (const NoExtension &e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::out_of_range &e) {
      err << "error: value out of range: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace endgraph::cli
