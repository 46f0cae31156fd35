#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sesqui/algebra.hpp"
#include "sesqui/diagram.hpp"
#include "sesqui/io.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/monad.hpp"
#include "sesqui/notation.hpp"
#include "sesqui/parse.hpp"
#include "sesqui/render.hpp"
#include "sesqui/rules.hpp"
#include "sesqui/term.hpp"
#include "sesqui/term_notation.hpp"
#include "sesqui/tree_enum.hpp"

namespace sesqui::cli {

using io::json;

// Missing or contradictory inputs; exit code 2 like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int max_dim = 4;
  std::optional<int> bound;
  std::string format = "ascii";
  std::string out;
  bool exact = false;
  bool pasting = false;
  bool lift = false;
  std::string globular, labels, algebra;
  std::vector<std::string> args;
};

// Owns whatever the cells of a labelling or term point into.
struct Inputs {
  std::unique_ptr<GlobularSet> cells;
  std::unique_ptr<SesquiAlgebra> algebra;
  const GlobularSet& set() const { return algebra ? algebra->cells : *cells; }
};

inline std::string labelling_text(const Labelling& l) {
  std::string s = print_notation(l.diagram) + " [";
  for (std::size_t m = 0; m < l.labels.size(); ++m) {
    s += m ? " | " : "";
    for (std::size_t i = 0; i < l.labels[m].size(); ++i) s += (i ? "," : "") + l.labels[m][i].name();
  }
  return s + "]";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  SimpleDiagram diagram(const std::string& text) const {
    SimpleDiagram d = parse_notation(text);
    if (d.dim() > o_.max_dim)
      throw Error(ErrorKind::ExceedsMaxDim, "dimension " + std::to_string(d.dim()) + " exceeds --max-dim " + std::to_string(o_.max_dim));
    return d;
  }

  void load(Inputs& in, const json* embedded = nullptr) const {
    if (!o_.algebra.empty()) {
      in.algebra = std::make_unique<SesquiAlgebra>(io::algebra_from_json(io::read_file(o_.algebra)));
    } else if (!o_.globular.empty()) {
      in.cells = std::make_unique<GlobularSet>(io::globular_from_json(io::read_file(o_.globular)));
    } else if (embedded && embedded->contains("globular")) {
      in.cells = std::make_unique<GlobularSet>(io::globular_from_json(embedded->at("globular")));
    } else {
      throw UsageError("this command needs --globular FILE (or --algebra FILE)");
    }
  }

  Labelling labelling(Inputs& in) const {
    if (o_.labels.empty()) throw UsageError("this command needs --labels FILE");
    json j = io::read_file(o_.labels);
    load(in, &j);
    Labelling l = io::labelling_from_json(j, in.set());
    if (l.dim() > o_.max_dim) throw Error(ErrorKind::ExceedsMaxDim, "labelling exceeds --max-dim");
    return l;
  }

  Term<Cell> term(Inputs& in, const std::string& text) const {
    if (!in.cells && !in.algebra) load(in);
    Term<Cell> t = parse_term(text, in.set());
    if (t.dim() > o_.max_dim) throw Error(ErrorKind::ExceedsMaxDim, "term exceeds --max-dim");
    return tree_validate(t);
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int validate() {
    SimpleDiagram d = diagram(arg(0));
    if (!o_.labels.empty()) {
      Inputs in;
      Labelling l = labelling(in);
      if (l.diagram != d) throw Error(ErrorKind::InvalidLabelling, "the labelling is of a different diagram");
      if (o_.json)
        emit({{"valid", true}, {"labelling", io::to_json(l)}});
      else
        out_ << "valid labelling " << labelling_text(l) << "\n";
      return 0;
    }
    auto st = stats(d);
    if (o_.json) {
      json j = io::to_json(d);
      j["valid"] = true;
      j["pasting"] = st.crossing_free;
      j["nondegenerate"] = st.nondegenerate;
      j["block"] = st.block;
      j["H"] = st.H;
      emit(j);
    } else {
      out_ << "valid " << print_notation(d) << " dim " << d.dim() << (st.crossing_free ? " pasting" : " with crossings")
           << (st.nondegenerate ? "" : " degenerate") << (st.block ? " block" : "") << "\n";
    }
    return 0;
  }

  int boundary() {
    if (!o_.labels.empty()) {
      Inputs in;
      Labelling l = labelling(in);
      Labelling s = labelling_source(l), t = labelling_target(l);
      if (o_.json)
        emit({{"source", io::to_json(s)}, {"target", io::to_json(t)}});
      else
        out_ << "source " << labelling_text(s) << "\ntarget " << labelling_text(t) << "\n";
      return 0;
    }
    SimpleDiagram d = diagram(arg(0));
    if (d.dim() == 0) throw Error(ErrorKind::DimZero, "a 0-diagram has no boundary");
    SimpleDiagram s = sesqui::source_target(d);
    if (o_.json)
      emit({{"source", print_notation(s)}, {"target", print_notation(s)}});
    else
      out_ << "source " << print_notation(s) << "\ntarget " << print_notation(s) << "\n";
    return 0;
  }

  int pi_cmd() {
    SimpleDiagram p = pi(diagram(arg(0)));
    if (o_.json)
      emit(io::to_json(p));
    else
      out_ << print_notation(p) << "\n";
    return 0;
  }

  int fiber_cmd() {
    auto f = fiber(diagram(arg(0)));
    if (o_.json) {
      json a = json::array();
      for (const auto& d : f) a.push_back(print_notation(d));
      emit({{"size", f.size()}, {"fiber", a}});
    } else {
      for (const auto& d : f) out_ << print_notation(d) << "\n";
    }
    return 0;
  }

  int compose() {
    DiagramOfDiagrams dd = io::nest_from_json(io::read_file(arg(0)));
    SimpleDiagram d = mu(dd);
    if (o_.json)
      emit(io::to_json(d));
    else
      out_ << print_notation(d) << "\n";
    return 0;
  }

  int decompose_cmd() {
    auto b = block_decompose(diagram(arg(0)));
    if (o_.json) {
      json parts = json::array();
      for (const auto& p : b.parts) parts.push_back(print_notation(p));
      emit({{"block", print_notation(b.block)}, {"parts", parts}});
    } else {
      out_ << "block " << print_notation(b.block) << "\n";
      for (const auto& p : b.parts) out_ << "part " << print_notation(p) << "\n";
    }
    return 0;
  }

  int parse_term_cmd() {
    Inputs in;
    Labelling l = labelling(in);
    Term<Cell> t = parse(l);
    if (o_.json)
      emit({{"term", print_term(t)}, {"size", t.size()}});
    else
      out_ << print_term(t) << "\n";
    return 0;
  }

  int eval() {
    Inputs in;
    if (!o_.algebra.empty()) {
      std::optional<Cell> c;
      if (args_.empty()) {
        Labelling l = labelling(in);
        c = eval_in_algebra(*in.algebra, l);
      } else {
        load(in);
        Term<Cell> t = term(in, arg(0));
        c = Cell{&in.algebra->cells, t.dim(), fold_term(*in.algebra, t)};
      }
      if (o_.json)
        emit({{"cell", c->name()}, {"dim", c->dim}});
      else
        out_ << c->name() << "\n";
      return 0;
    }
    Term<Cell> t = term(in, arg(0));
    const Labelling& l = eval_phi(t);
    if (o_.json)
      emit(io::to_json(l));
    else
      out_ << labelling_text(l) << "\n";
    return 0;
  }

  int normalize_cmd() {
    Inputs in;
    Term<Cell> t = normalize(term(in, arg(0)));
    if (o_.json)
      emit({{"term", print_term(t)}});
    else
      out_ << print_term(t) << "\n";
    return 0;
  }

  int equiv() {
    Inputs in;
    Term<Cell> a = term(in, arg(0)), b = term(in, arg(1));
    bool same = equivalent(a, b);
    if (o_.json)
      emit({{"equivalent", same}});
    else
      out_ << (same ? "equivalent" : "not equivalent") << "\n";
    return same ? 0 : 1;
  }

  int closure() {
    Inputs in;
    Term<Cell> t = term(in, arg(0));
    auto c = rewrite_closure(t, o_.bound.value_or(static_cast<int>(t.size()) + 4));
    if (o_.json) {
      json a = json::array();
      for (const auto& s : c.trees) a.push_back(print_term(s));
      emit({{"size", c.trees.size()}, {"escaped", c.escaped}, {"trees", a}});
    } else {
      for (const auto& s : c.trees) out_ << print_term(s) << "\n";
      out_ << c.trees.size() << " trees, " << c.escaped << " rewrites beyond the bound\n";
    }
    return 0;
  }

  int enumerate_cmd() {
    int k = std::stoi(arg(0));
    if (k > o_.max_dim) throw Error(ErrorKind::ExceedsMaxDim, "dimension exceeds --max-dim");
    json a = json::array();
    long n = 0;
    for_each_diagram(k, o_.bound.value_or(4), [&](const SimpleDiagram& d) {
      if (o_.pasting && !d.is_pasting()) return;
      ++n;
      if (o_.json)
        a.push_back(print_notation(d));
      else
        out_ << print_notation(d) << "\n";
    });
    if (o_.json) emit({{"count", n}, {"diagrams", a}});
    return 0;
  }

  int count() {
    std::vector<int> lengths;
    std::stringstream ss(arg(0));
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        lengths.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "lengths are comma-separated integers");
      }
    }
    int total = 1;
    for (int l : lengths) total += l;
    long simple = 0, pasting = 0;
    int k = static_cast<int>(lengths.size());
    if (k > o_.max_dim) throw Error(ErrorKind::ExceedsMaxDim, "dimension exceeds --max-dim");
    std::vector<int> want{1};
    want.insert(want.end(), lengths.begin(), lengths.end());
    for_each_diagram(k, total, [&](const SimpleDiagram& d) {
      if (d.lengths() != want) return;
      ++simple;
      if (d.is_pasting()) ++pasting;
    });
    if (o_.json)
      emit({{"lengths", lengths}, {"simple", simple}, {"pasting", pasting}});
    else
      out_ << "simple " << simple << "\npasting " << pasting << "\n";
    return 0;
  }

  int render_cmd() {
    RenderSpec spec;
    if (o_.format == "svg")
      spec.format = RenderFormat::Svg;
    else if (o_.format != "ascii")
      throw UsageError("--format is ascii or svg");
    spec.exact = o_.exact;
    if (!o_.labels.empty()) {
      Inputs in;
      out_ << render(labelling(in), spec);
    } else {
      out_ << render(diagram(arg(0)), spec);
    }
    return 0;
  }

  int check_relations_cmd() {
    SesquiAlgebra a = io::algebra_from_json(io::read_file(arg(0)));
    auto r = check_relations(a);
    auto p = interchange_probe(a);
    if (o_.json) {
      json j = io::to_json(r);
      j["interchange"] = io::to_json(p);
      emit(j);
    } else {
      for (const auto& f : r.families) {
        out_ << (f.passed() ? "pass " : "FAIL ") << f.name << " (" << f.instances << " instances)";
        if (f.witness) out_ << ": " << *f.witness;
        out_ << "\n";
      }
      out_ << (r.passed() ? "all families pass" : "some families fail") << "\n";
      out_ << "interchange (advisory): " << (p.holds() ? "holds" : "fails");
      if (p.witness) out_ << " at " << *p.witness;
      out_ << "\n";
    }
    return r.passed() ? 0 : 1;
  }

  int hom() {
    SesquiAlgebra a = io::algebra_from_json(io::read_file(arg(0)));
    check_tables(a);
    if (o_.lift) {
      emit(io::to_json(decompose(a)));
      return 0;
    }
    if (args_.size() < 3) throw UsageError("hom needs ALGEBRA X Y, or --lift");
    emit(io::to_json(hom_algebra(a, a.cell_index(0, arg(1)), a.cell_index(0, arg(2)))));
    return 0;
  }

  int plus() {
    HomLift h = io::lift_from_json(io::read_file(arg(0)));
    emit(io::to_json(plus_construction(h)));
    return 0;
  }

  // Unit laws of the monad, parse/eval roundtrip and rewrite soundness over a
  // globular set, within the bounds.
  int laws() {
    Inputs in;
    if (o_.globular.empty() && o_.algebra.empty())
      in.cells = std::make_unique<GlobularSet>(hat(parse_notation("(2,(2,1))")));
    else
      load(in);
    const GlobularSet& x = in.set();
    int bound = o_.bound.value_or(5);
    int top = std::min(o_.max_dim, x.n());
    long units = 0, roundtrips = 0, rewrites_seen = 0;
    std::optional<std::string> unit_fail, parse_fail, rewrite_fail;
    for (int k = 0; k <= top; ++k)
      for_each_diagram(k, bound, [&](const SimpleDiagram& d) {
        for_each_labelling(d, x, [&](const Labelling& l) {
          ++units;
          ++roundtrips;
          if (!unit_fail && (mu(eta(l)) != l || mu(fmap(l, [](const Cell& c) { return eta(c); })) != l))
            unit_fail = labelling_text(l);
          if (!parse_fail && eval_phi(parse(l)) != l) parse_fail = labelling_text(l);
        });
      });
    auto trees = enumerate_trees(x, top, bound);
    for (auto& by_dim : trees)
      for (auto& v : by_dim)
        for (const auto& t : v)
          for (const auto& r : rewrites(t)) {
            ++rewrites_seen;
            if (!rewrite_fail && (!is_valid(r.result) || eval_phi(r.result) != eval_phi(t)))
              rewrite_fail = print_term(t) + " by " + std::string(rule_name(r.rule));
          }
    auto line = [&](const char* name, long n, const std::optional<std::string>& w) {
      out_ << (w ? "FAIL " : "pass ") << name << " (" << n << " instances)" << (w ? ": " + *w : "") << "\n";
    };
    if (o_.json) {
      auto entry = [](long n, const std::optional<std::string>& w) {
        json e{{"instances", n}, {"passed", !w}};
        if (w) e["witness"] = *w;
        return e;
      };
      emit({{"unit laws", entry(units, unit_fail)}, {"parse roundtrip", entry(roundtrips, parse_fail)},
            {"rewrite soundness", entry(rewrites_seen, rewrite_fail)}});
    } else {
      line("unit laws", units, unit_fail);
      line("parse roundtrip", roundtrips, parse_fail);
      line("rewrite soundness", rewrites_seen, rewrite_fail);
    }
    return unit_fail || parse_fail || rewrite_fail ? 1 : 0;
  }

  void set_args(std::vector<std::string> a) { args_ = std::move(a); }

 private:
  const std::string& arg(std::size_t i) const {
    if (i >= args_.size()) throw UsageError("missing argument");
    return args_[i];
  }

  const Options& o_;
  std::ostream& out_;
  std::vector<std::string> args_;
};

// Exit codes: 0 success, 1 validation failure or failed check, 2 usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple string diagrams, their trees, and finite sesquicategories"};
  app.name("sesqui");
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-dim", o.max_dim, "Largest dimension accepted")->check(CLI::Range(0, 32));
  app.add_option("--bound", o.bound, "Size bound for enumeration, closure and laws")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  app.add_option("--out", o.out, "Write output to a file");
  app.add_option("--globular", o.globular, "Globular set JSON");
  app.add_option("--labels", o.labels, "Labelling JSON");
  app.add_option("--algebra", o.algebra, "Sesquialgebra JSON");

  struct Cmd {
    const char* name;
    const char* help;
    std::vector<const char*> positional;
    int required;
    int (Runner::*run)();
  };
  const std::vector<Cmd> cmds{
      {"validate", "Check diagram notation (and a labelling with --labels)", {"diagram"}, 1, &Runner::validate},
      {"st", "Source and target", {"diagram"}, 0, &Runner::boundary},
      {"pi", "The pasting diagram of a simple diagram", {"diagram"}, 1, &Runner::pi_cmd},
      {"fiber", "All simple diagrams over a pasting diagram", {"pasting"}, 1, &Runner::fiber_cmd},
      {"compose", "Multiplication of a diagram of diagrams (nest JSON)", {"nest"}, 1, &Runner::compose},
      {"decompose", "Block decomposition", {"diagram"}, 1, &Runner::decompose_cmd},
      {"parse-term", "The canonical tree of a labelling (--labels)", {}, 0, &Runner::parse_term_cmd},
      {"eval", "Evaluate a tree to a labelling, or in an algebra with --algebra", {"term"}, 0, &Runner::eval},
      {"normalize", "Canonical form of a tree", {"term"}, 1, &Runner::normalize_cmd},
      {"equiv", "Decide whether two trees are equivalent", {"left", "right"}, 2, &Runner::equiv},
      {"closure", "All trees reachable by rewriting within --bound vertices", {"term"}, 1, &Runner::closure},
      {"enum", "Enumerate diagrams of a dimension with at most --bound cells", {"dim"}, 1, &Runner::enumerate_cmd},
      {"count", "Count simple and pasting diagrams with given level lengths", {"lengths"}, 1, &Runner::count},
      {"render", "ASCII or SVG picture", {"diagram"}, 0, &Runner::render_cmd},
      {"check-relations", "Check the equations of a sesquialgebra", {"algebra"}, 1, &Runner::check_relations_cmd},
      {"hom", "Hom algebra between two 0-cells, or the whole lift with --lift", {"algebra", "x", "y"}, 1, &Runner::hom},
      {"plus", "The algebra of a Hom lift", {"lift"}, 1, &Runner::plus},
      {"laws", "Check unit laws, parse roundtrip and rewrite soundness", {}, 0, &Runner::laws},
  };
  std::vector<std::vector<std::string>> pos(cmds.size());
  std::vector<CLI::App*> subs;
  for (std::size_t c = 0; c < cmds.size(); ++c) {
    auto* s = app.add_subcommand(cmds[c].name, cmds[c].help);
    s->add_option("args", pos[c], "positional arguments")->expected(cmds[c].required, static_cast<int>(cmds[c].positional.size()));
    if (cmds[c].required > 0) s->get_option("args")->required();
    subs.push_back(s);
  }
  subs[13]->add_flag("--exact", o.exact, "Refuse the box projection above dimension 2");
  subs[11]->add_flag("--pasting", o.pasting, "Only pasting diagrams");
  subs[15]->add_flag("--lift", o.lift, "Print the category with all hom algebras and actions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  std::ostringstream buf;
  Runner r(o, buf);
  int code = 0;
  try {
    for (std::size_t c = 0; c < cmds.size(); ++c)
      if (subs[c]->parsed()) {
        r.set_args(pos[c]);
        code = (r.*cmds[c].run)();
      }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    out << buf.str();
    return 1;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 1;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return code;
}

}  // namespace sesqui::cli
