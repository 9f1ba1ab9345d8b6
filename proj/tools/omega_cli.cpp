// omega: relative commutators of finite Omega-groups from the command line.

#include <fstream>
#include <functional>
#include <sstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "omega/commutator.hpp"
#include "omega/constructions.hpp"
#include "omega/demos.hpp"
#include "omega/error.hpp"
#include "omega/io.hpp"
#include "omega/pxmod.hpp"

namespace omega {
namespace {

struct Options {
  std::string   report  = "text";
  unsigned      threads = 0;
  std::string   backend = "linear";
  Guards        guards;
  std::string   file;
  std::string   left    = "whole";
  std::string   right   = "whole";
  std::string   ideal   = "whole";
  std::string   basis;
  bool          higgins = false;
  bool          direct  = false;
  std::string   output;
  std::string   spec;
  std::string   demo;
  std::uint32_t p          = 2;
  std::string   generators = "a";
  bool          nil_squares = false;
  std::size_t   max_degree  = 3;
  bool          tables      = false;
};

class Reporter {
 public:
  Reporter(Options const& o, std::string command) : _json(o.report == "json") {
    _doc["command"] = std::move(command);
    _doc["inputs"]  = Json::object();
  }

  bool json() const { return _json; }
  Json& doc() { return _doc; }
  void  input(std::string const& key, Json value) { _doc["inputs"][key] = std::move(value); }
  void  line(std::string const& text) { _lines.push_back(text); }

  void emit() const {
    if (_json) {
      std::cout << _doc.dump(2) << "\n";
    } else {
      for (auto const& l : _lines) {
        std::cout << l << "\n";
      }
    }
  }

 private:
  bool                     _json;
  Json                     _doc;
  std::vector<std::string> _lines;
};

EngineConfig config_of(Options const& o) {
  EngineConfig cfg;
  cfg.guards  = o.guards;
  cfg.threads = o.threads != 0
                    ? o.threads
                    : threads_from_env(std::max(1u, std::thread::hardware_concurrency()));
  return cfg;
}

std::string braces(ElementSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(s[i]);
  }
  return out + "}";
}

std::string braces(std::vector<std::string> const& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? ", " : "") + items[i];
  }
  return out + "}";
}

Json witnesses_json(std::vector<Witness> const& ws) {
  Json out = Json::array();
  for (auto const& w : ws) {
    Json j = {{"kind", w.kind}, {"identity", w.identity}, {"inputs", w.inputs},
              {"element", w.element}};
    if (w.index) {
      j["index"] = *w.index;
    }
    out.push_back(j);
  }
  return out;
}

Json stats_json(CommutatorStats const& s) {
  return {{"backend", s.linear ? "linear" : "tables"},
          {"host", s.host},
          {"triple", s.triple},
          {"triple_values", s.triple_values},
          {"meet", s.meet},
          {"generators", s.generators},
          {"evaluations", s.evaluations}};
}

void write_document(Json const& j, std::string const& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::parse, "cannot write '" + path + "'");
  }
  out << j.dump(2) << "\n";
}

// The loaded algebra in the form a command works on.
struct Loaded {
  Document doc;
  bool     ring = false;   // linear backend over doc.ring
  bool     table = false;  // tables over `algebra`
  TableAlgebra algebra;

  ElementSet subset(std::string const& name, EngineConfig const& cfg) const {
    if (name == "whole") {
      return ElementSet::range(algebra.size());
    }
    if (doc.kind == Document::Kind::ring) {
      return codes_of(ring_subset(name), cfg);
    }
    if (doc.kind == Document::Kind::precrossed) {
      auto it = doc.submodules.find(name);
      if (it == doc.submodules.end()) {
        fail(ErrorKind::validation, "no submodule named '" + name + "'");
      }
      return submodule_ideal(doc.module, it->second);
    }
    auto it = doc.subsets.find(name);
    if (it == doc.subsets.end()) {
      fail(ErrorKind::validation, "no subset named '" + name + "'");
    }
    return it->second;
  }

  Subspace ring_subset(std::string const& name) const {
    if (name == "whole") {
      return Subspace::full(doc.ring.p(), doc.ring.dimension());
    }
    auto it = doc.ring_subsets.find(name);
    if (it == doc.ring_subsets.end()) {
      fail(ErrorKind::validation, "no subset named '" + name + "'");
    }
    return it->second;
  }

  ElementSet codes_of(Subspace const& s, EngineConfig const& cfg) const {
    std::vector<Code> out;
    for (auto const& v : s.elements(cfg)) {
      out.push_back(doc.ring.index(v));
    }
    return ElementSet(std::move(out));
  }

  Signature const& signature() const {
    return ring ? doc.ring.signature() : algebra.signature();
  }
};

Loaded load(Options const& o, EngineConfig const& cfg, bool need_tables = false) {
  Loaded l;
  l.doc = load_document(o.file, cfg);
  if (o.backend != "tables" && o.backend != "linear") {
    fail(ErrorKind::validation, "unknown backend '" + o.backend + "'");
  }
  switch (l.doc.kind) {
    case Document::Kind::table:
      l.table   = true;
      l.algebra = l.doc.table;
      break;
    case Document::Kind::ring:
      if (o.backend == "tables" || need_tables) {
        l.table   = true;
        l.algebra = to_table_algebra(l.doc.ring, cfg);
      } else {
        l.ring = true;
      }
      break;
    case Document::Kind::precrossed:
      l.table   = true;
      l.algebra = to_pxm(l.doc.module, cfg);
      break;
  }
  return l;
}

IdentityBasis basis_for(Options const& o, Loaded const& l) {
  if (o.basis.empty()) {
    fail(ErrorKind::validation, "--basis is required");
  }
  return resolve_basis(o.basis, l.signature());
}

void put_set(Reporter& rep, Loaded const& l, std::string const& label,
             ElementSet const& s) {
  rep.doc()["result"] = s.codes();
  if (l.doc.kind == Document::Kind::ring) {
    std::vector<std::string> names;
    for (Code x : s) {
      names.push_back(l.doc.ring.format(l.doc.ring.element(x)));
    }
    rep.doc()["result_elements"] = names;
    rep.line(label + " = " + braces(names));
  } else {
    rep.line(label + " = " + braces(s));
  }
  rep.line("size " + std::to_string(s.size()));
}

void put_subspace(Reporter& rep, Loaded const& l, std::string const& label,
                  Subspace const& s, EngineConfig const& cfg) {
  ZpRing const&            r = l.doc.ring;
  std::vector<std::string> basis;
  for (auto const& v : s.basis()) {
    basis.push_back(r.format(v));
  }
  if (s.size() <= cfg.guards.carrier) {
    rep.doc()["result"] = l.codes_of(s, cfg).codes();
  } else {
    rep.doc()["result"] = nullptr;
  }
  rep.doc()["result_basis"] = basis;
  rep.doc()["result_dimension"] = s.dimension();
  rep.line(label + " = span" + braces(basis));
  rep.line("dimension " + std::to_string(s.dimension()));
}

void common_inputs(Reporter& rep, Options const& o, Loaded const& l) {
  rep.input("file", o.file);
  rep.input("backend", l.ring ? "linear" : "tables");
}

int cmd_validate(Options const& o) {
  EngineConfig const cfg = config_of(o);
  Reporter           rep(o, "validate");
  Document const     doc = load_document(o.file, cfg);
  rep.input("file", o.file);
  Json result;
  switch (doc.kind) {
    case Document::Kind::table: {
      Json ops = Json::array();
      for (auto const& op : doc.table.signature().extra_ops()) {
        ops.push_back({{"name", op.name}, {"arity", op.arity}});
      }
      result = {{"kind", "table"}, {"size", doc.table.size()}, {"extra_ops", ops},
                {"subsets", Json::object()}};
      for (auto const& [name, s] : doc.subsets) {
        result["subsets"][name] = s.codes();
      }
      rep.line("valid table algebra '" + doc.name + "' of size "
               + std::to_string(doc.table.size()));
      break;
    }
    case Document::Kind::ring: {
      result = {{"kind", "zp_ring"}, {"p", doc.ring.p()},
                {"dimension", doc.ring.dimension()}, {"basis", doc.ring.labels()}};
      rep.line("valid ring over Z/" + std::to_string(doc.ring.p()) + " of dimension "
               + std::to_string(doc.ring.dimension()));
      break;
    }
    case Document::Kind::precrossed: {
      bool crossed = is_crossed(doc.module);
      result = {{"kind", "precrossed"}, {"C", doc.module.c.size()},
                {"G", doc.module.g.size()}, {"crossed", crossed}};
      rep.line("valid precrossed module with |C| = " + std::to_string(doc.module.c.size())
               + ", |G| = " + std::to_string(doc.module.g.size())
               + (crossed ? " (crossed)" : " (not crossed)"));
      break;
    }
  }
  rep.doc()["result"] = result;
  rep.emit();
  return 0;
}

int cmd_satisfies(Options const& o) {
  EngineConfig const  cfg   = config_of(o);
  Loaded const        l     = load(o, cfg);
  IdentityBasis const basis = basis_for(o, l);
  Reporter            rep(o, "satisfies");
  common_inputs(rep, o, l);
  rep.input("basis", o.basis);
  bool ok = false;
  if (l.ring) {
    ok = satisfies(l.doc.ring, basis, cfg);
  } else {
    auto v = find_violation(l.algebra, ElementSet::range(l.algebra.size()), basis, cfg);
    ok     = !v;
    if (v) {
      rep.doc()["witnesses"] = Json::array(
          {{{"identity", v->identity}, {"args", v->args}, {"value", v->value}}});
      std::string args;
      for (Code x : v->args) {
        args += (args.empty() ? "" : ", ") + std::to_string(x);
      }
      rep.line("violated: identity " + std::to_string(v->identity) + " at (" + args
               + ") gives " + std::to_string(v->value));
    }
  }
  rep.doc()["result"] = ok;
  rep.line(std::string("satisfies ") + basis.name + ": " + (ok ? "true" : "false"));
  rep.emit();
  return 0;
}

int cmd_reflect(Options const& o) {
  EngineConfig const  cfg   = config_of(o);
  Loaded const        l     = load(o, cfg);
  IdentityBasis const basis = basis_for(o, l);
  Reporter            rep(o, "reflect");
  common_inputs(rep, o, l);
  rep.input("basis", o.basis);
  if (l.ring) {
    RingQuotient q = reflection(l.doc.ring, basis, cfg);
    put_subspace(rep, l, "kernel", q.ideal, cfg);
    rep.doc()["quotient_dimension"] = q.ring.dimension();
    rep.line("quotient dimension " + std::to_string(q.ring.dimension()));
    if (!o.output.empty()) {
      write_document(table_to_json(to_table_algebra(q.ring, cfg)), o.output);
    }
  } else {
    Quotient q = reflection(l.algebra, basis, cfg);
    put_set(rep, l, "kernel", q.projection.kernel());
    rep.doc()["quotient_size"] = q.algebra.size();
    rep.line("quotient size " + std::to_string(q.algebra.size()));
    if (!o.output.empty()) {
      write_document(table_to_json(q.algebra), o.output);
    }
  }
  rep.emit();
  return 0;
}

int cmd_commutator(Options const& o, bool values_only) {
  EngineConfig const cfg = config_of(o);
  Loaded const       l   = load(o, cfg);
  if (o.higgins && !o.basis.empty()) {
    fail(ErrorKind::validation, "--basis and --higgins are exclusive");
  }
  IdentityBasis const basis =
      o.higgins ? abelianization_basis(l.signature()) : basis_for(o, l);
  Reporter rep(o, values_only ? "cvalues" : "commutator");
  common_inputs(rep, o, l);
  rep.input("left", o.left);
  rep.input("right", o.right);
  rep.input("basis", o.higgins ? std::string("abelian") : o.basis);
  std::string const label = (values_only ? "C_B(" : "[") + o.left + "," + o.right
                            + (values_only ? ")" : "]_B");
  if (l.ring) {
    Subspace const m = l.ring_subset(o.left);
    Subspace const n = l.ring_subset(o.right);
    auto const report = values_only ? c_values(l.doc.ring, m, n, basis, cfg)
                                    : relative_commutator(l.doc.ring, m, n, basis, cfg);
    put_subspace(rep, l, label, report.result, cfg);
    rep.doc()["witnesses"] = witnesses_json(report.witnesses);
    rep.doc()["stats"]     = stats_json(report.stats);
  } else {
    ElementSet const m = l.subset(o.left, cfg);
    ElementSet const n = l.subset(o.right, cfg);
    auto const report = values_only ? c_values(l.algebra, m, n, basis, cfg)
                                    : relative_commutator(l.algebra, m, n, basis, cfg);
    put_set(rep, l, label, report.result);
    if (l.doc.kind == Document::Kind::precrossed) {
      Submodule sub = ideal_submodule(l.doc.module, report.result);
      rep.doc()["submodule"] = {{"K", sub.k.codes()}, {"S", sub.s.codes()}};
      rep.line("as a submodule: K = " + braces(sub.k) + ", S = " + braces(sub.s));
    }
    rep.doc()["witnesses"] = witnesses_json(report.witnesses);
    rep.doc()["stats"]     = stats_json(report.stats);
  }
  for (auto const& w : rep.doc()["witnesses"]) {
    rep.line("witness " + w["kind"].get<std::string>() + " identity "
             + std::to_string(w["identity"].get<std::size_t>()) + ": "
             + w["element"].get<std::string>());
  }
  rep.emit();
  return 0;
}

int cmd_central(Options const& o) {
  EngineConfig const  cfg   = config_of(o);
  Loaded const        l     = load(o, cfg);
  IdentityBasis const basis = basis_for(o, l);
  Reporter            rep(o, "central");
  common_inputs(rep, o, l);
  rep.input("ideal", o.ideal);
  rep.input("basis", o.basis);
  rep.input("direct", o.direct);
  bool central = false;
  if (l.ring) {
    Subspace const n = l.ring_subset(o.ideal);
    central = o.direct ? is_central_direct(l.doc.ring, n, basis, cfg)
                       : is_central(l.doc.ring, n, basis, cfg);
  } else {
    ElementSet const n = l.subset(o.ideal, cfg);
    central = o.direct ? is_central_direct(l.algebra, n, basis, cfg)
                       : is_central(l.algebra, n, basis, cfg);
  }
  rep.doc()["result"] = central;
  rep.line(o.ideal + (central ? " is " : " is not ") + "central relative to "
           + basis.name);
  rep.emit();
  return 0;
}

int cmd_oracle(Options const& o) {
  EngineConfig const  cfg   = config_of(o);
  Loaded const        l     = load(o, cfg, true);
  IdentityBasis const basis = basis_for(o, l);
  Reporter            rep(o, "oracle");
  common_inputs(rep, o, l);
  rep.input("left", o.left);
  rep.input("right", o.right);
  rep.input("basis", o.basis);
  ElementSet const m      = l.subset(o.left, cfg);
  ElementSet const n      = l.subset(o.right, cfg);
  ElementSet const least  = universal_oracle(l.algebra, m, n, basis, cfg);
  ElementSet const engine = relative_commutator(l.algebra, m, n, basis, cfg).result;
  put_set(rep, l, "least ideal", least);
  rep.doc()["agrees_with_engine"] = least == engine;
  rep.line(std::string("agrees with the engine: ") + (least == engine ? "true" : "false"));
  rep.emit();
  if (least != engine) {
    fail(ErrorKind::invariant, "oracle and engine disagree");
  }
  return 0;
}

int cmd_peiffer(Options const& o) {
  EngineConfig const cfg = config_of(o);
  Document const     doc = load_document(o.file, cfg);
  if (doc.kind != Document::Kind::precrossed) {
    fail(ErrorKind::validation, "peiffer needs a precrossed module document");
  }
  auto submodule = [&](std::string const& name) {
    if (name == "whole") {
      return whole(doc.module);
    }
    auto it = doc.submodules.find(name);
    if (it == doc.submodules.end()) {
      fail(ErrorKind::validation, "no submodule named '" + name + "'");
    }
    return it->second;
  };
  Reporter rep(o, "peiffer");
  rep.input("file", o.file);
  rep.input("left", o.left);
  rep.input("right", o.right);
  auto const check = peiffer_crosscheck(doc.module, submodule(o.left), submodule(o.right), cfg);
  rep.doc()["result"]     = check.peiffer.codes();
  rep.doc()["commutator"] = check.commutator.codes();
  rep.doc()["agrees"]     = check.agrees;
  rep.line("Peiffer commutator = " + braces(check.peiffer) + " (group part {0})");
  rep.line("relative commutator with xm = " + braces(check.commutator));
  rep.line(std::string("agree: ") + (check.agrees ? "true" : "false"));
  rep.emit();
  if (!check.agrees) {
    fail(ErrorKind::invariant, "Peiffer commutator and relative commutator disagree");
  }
  return 0;
}

int cmd_pxm_convert(Options const& o) {
  EngineConfig const cfg = config_of(o);
  Document const     doc = load_document(o.file, cfg);
  Reporter           rep(o, "pxm-convert");
  rep.input("file", o.file);
  Json out;
  if (doc.kind == Document::Kind::precrossed) {
    TableAlgebra a = to_pxm(doc.module, cfg);
    a.set_name(doc.name);
    std::map<std::string, ElementSet> subsets;
    for (auto const& [name, sub] : doc.submodules) {
      subsets[name] = submodule_ideal(doc.module, sub);
    }
    out = table_to_json(a, subsets);
    rep.line("Omega-group of size " + std::to_string(a.size()));
  } else if (doc.kind == Document::Kind::table) {
    PrecrossedModule const x = to_precrossed(doc.table);
    std::map<std::string, Submodule> subs;
    for (auto const& [name, s] : doc.subsets) {
      if (!is_ideal(doc.table, ElementSet::range(doc.table.size()), s)) {
        continue;
      }
      subs[name] = pxm_ideal_submodule(doc.table, s);
    }
    out = module_to_json(x, subs);
    rep.line("precrossed module with |C| = " + std::to_string(x.c.size())
             + ", |G| = " + std::to_string(x.g.size()));
  } else {
    fail(ErrorKind::validation, "pxm-convert needs a table or precrossed document");
  }
  if (!o.output.empty()) {
    write_document(out, o.output);
    rep.line("written to " + o.output);
  } else if (!rep.json()) {
    rep.line(out.dump(2));
  }
  rep.doc()["result"] = out;
  rep.emit();
  return 0;
}

int cmd_make_ring(Options const& o) {
  EngineConfig const cfg = config_of(o);
  TruncatedRingSpec  spec;
  spec.p           = o.p;
  spec.nil_squares = o.nil_squares;
  spec.max_degree  = o.max_degree;
  std::stringstream in(o.generators);
  for (std::string g; std::getline(in, g, ',');) {
    spec.generators.push_back(g);
  }
  ZpRing const r = build_ring(spec, cfg);
  Json const   out = o.tables ? table_to_json(to_table_algebra(r, cfg)) : ring_to_json(spec);
  Reporter     rep(o, "make-ring");
  rep.input("p", spec.p);
  rep.input("generators", spec.generators);
  rep.input("nil_squares", spec.nil_squares);
  rep.input("max_degree", spec.max_degree);
  rep.doc()["result"] = out;
  rep.line("basis " + braces(r.labels()));
  if (!o.output.empty()) {
    write_document(out, o.output);
  } else if (!rep.json()) {
    rep.line(out.dump(2));
  }
  rep.emit();
  return 0;
}

int cmd_make_group(Options const& o) {
  EngineConfig const cfg = config_of(o);
  TableAlgebra       g   = build_group(o.spec, cfg);
  g.set_name(o.spec);
  Json const out = table_to_json(g);
  Reporter   rep(o, "make-group");
  rep.input("spec", o.spec);
  rep.doc()["result"] = out;
  if (!o.output.empty()) {
    write_document(out, o.output);
    rep.line("group of order " + std::to_string(g.size()) + " written to " + o.output);
  } else if (!rep.json()) {
    rep.line(out.dump(2));
  }
  rep.emit();
  return 0;
}

int cmd_demo(Options const& o) {
  EngineConfig const cfg    = config_of(o);
  DemoReport const   report = run_demo(o.demo, cfg);
  Reporter           rep(o, "demo");
  rep.input("demo", o.demo);
  rep.doc()["result"] = report.data;
  for (auto const& l : report.lines) {
    rep.line(l);
  }
  rep.emit();
  return 0;
}

int run(int argc, char** argv) {
  Options  o;
  CLI::App app{"Relative commutators of finite Omega-groups"};
  app.require_subcommand(1);
  app.add_option("--report", o.report, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads (default: OMEGA_THREADS or all cores)");
  app.add_option("--max-carrier", o.guards.carrier, "Largest materialized carrier");
  app.add_option("--max-dimension", o.guards.dimension, "Largest ring dimension");
  app.add_option("--max-oracle", o.guards.oracle, "Largest host for ideal enumeration");
  app.add_option("--max-tuples", o.guards.tuples, "Largest tuple enumeration");
  app.add_option("--max-closure", o.guards.closure, "Largest closure inside a product");

  auto file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Algebra document")->required();
    sub->add_option("--backend", o.backend, "Ring backend")
        ->check(CLI::IsMember({"tables", "linear"}));
  };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--left", o.left, "Subset name (default: whole)");
    sub->add_option("--right", o.right, "Subset name (default: whole)");
  };
  auto basis = [&](CLI::App* sub) {
    sub->add_option("--basis", o.basis, "Basis preset or basis document");
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](char const* name, char const* help, std::function<int()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(body));
    return sub;
  };

  auto* validate_cmd = add("validate", "Validate a document", [&] { return cmd_validate(o); });
  validate_cmd->add_option("file", o.file, "Document")->required();

  auto* satisfies_cmd = add("satisfies", "Check the identities of a basis",
                            [&] { return cmd_satisfies(o); });
  file(satisfies_cmd);
  basis(satisfies_cmd);

  auto* reflect_cmd = add("reflect", "Quotient by the verbal ideal", [&] { return cmd_reflect(o); });
  file(reflect_cmd);
  basis(reflect_cmd);
  reflect_cmd->add_option("--output", o.output, "Write the quotient as a table document");

  auto* commutator_cmd = add("commutator", "Relative commutator [M,N]_B",
                             [&] { return cmd_commutator(o, false); });
  file(commutator_cmd);
  pair(commutator_cmd);
  basis(commutator_cmd);
  commutator_cmd->add_flag("--higgins", o.higgins, "Use the abelianization basis");

  auto* cvalues_cmd = add("cvalues", "The c-value ideal C_B(M,N)",
                          [&] { return cmd_commutator(o, true); });
  file(cvalues_cmd);
  pair(cvalues_cmd);
  basis(cvalues_cmd);

  auto* central_cmd = add("central", "Centrality of an ideal", [&] { return cmd_central(o); });
  file(central_cmd);
  basis(central_cmd);
  central_cmd->add_option("--ideal", o.ideal, "Subset name (default: whole)");
  central_cmd->add_flag("--direct", o.direct, "Check v(na)v(a)^-1 directly");

  auto* oracle_cmd = add("oracle", "Least ideal with trivial commutator in the quotient",
                         [&] { return cmd_oracle(o); });
  file(oracle_cmd);
  pair(oracle_cmd);
  basis(oracle_cmd);

  auto* peiffer_cmd = add("peiffer", "Peiffer commutator of two submodules",
                          [&] { return cmd_peiffer(o); });
  peiffer_cmd->add_option("file", o.file, "Precrossed module document")->required();
  pair(peiffer_cmd);

  auto* convert_cmd = add("pxm-convert", "Convert between precrossed modules and Omega-groups",
                          [&] { return cmd_pxm_convert(o); });
  convert_cmd->add_option("file", o.file, "Document")->required();
  convert_cmd->add_option("--output", o.output, "Output document");

  auto* ring_cmd = add("make-ring", "Truncated polynomial ring over Z/p",
                       [&] { return cmd_make_ring(o); });
  ring_cmd->add_option("--p", o.p, "Prime")->required();
  ring_cmd->add_option("--generators", o.generators, "Comma-separated generator names");
  ring_cmd->add_flag("--nil-squares", o.nil_squares, "Generators square to zero");
  ring_cmd->add_option("--max-degree", o.max_degree, "Largest surviving degree");
  ring_cmd->add_flag("--tables", o.tables, "Emit a table document");
  ring_cmd->add_option("--output", o.output, "Output document");

  auto* group_cmd = add("make-group", "Standard group tables", [&] { return cmd_make_group(o); });
  group_cmd->add_option("spec", o.spec, "e.g. \"symmetric 3\", \"cyclic 2 x cyclic 3\"")
      ->required();
  group_cmd->add_option("--output", o.output, "Output document");

  auto* demo_cmd = add("demo", "Run a self-checking demonstration", [&] { return cmd_demo(o); });
  demo_cmd->add_option("name", o.demo, "Demo name")
      ->required()
      ->check(CLI::IsMember(demo_names()));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  }

  try {
    for (auto const& [sub, body] : commands) {
      if (sub->parsed()) {
        return body();
      }
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (std::bad_alloc const&) {
    std::cerr << "error: size_guard: out of memory\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: invariant: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace
}  // namespace omega

int main(int argc, char** argv) { return omega::run(argc, argv); }
