#include "omega/io.hpp"

#include <fstream>

#include "omega/error.hpp"

namespace omega {

namespace {
  [[noreturn]] void schema(std::string const& what) {
    fail(ErrorKind::schema, what);
  }

  Json const& member(Json const& j, char const* key, char const* where) {
    if (!j.is_object() || !j.contains(key)) {
      schema(std::string(where) + ": missing \"" + key + "\"");
    }
    return j.at(key);
  }

  std::uint64_t as_index(Json const& j, char const* where) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
      schema(std::string(where) + ": expected a nonnegative integer");
    }
    return j.get<std::uint64_t>();
  }

  std::vector<std::string> as_strings(Json const& j, char const* where) {
    if (!j.is_array()) {
      schema(std::string(where) + ": expected an array of strings");
    }
    std::vector<std::string> out;
    for (auto const& e : j) {
      if (!e.is_string()) {
        schema(std::string(where) + ": expected an array of strings");
      }
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::vector<Code> as_codes(Json const& j, std::uint64_t bound, char const* where) {
    if (!j.is_array()) {
      schema(std::string(where) + ": expected an array of element indices");
    }
    std::vector<Code> out;
    for (auto const& e : j) {
      Code x = as_index(e, where);
      if (x >= bound) {
        schema(std::string(where) + ": element " + std::to_string(x)
               + " outside the carrier");
      }
      out.push_back(x);
    }
    return out;
  }

  void flatten(Json const& j, std::size_t depth, std::uint64_t size,
               std::vector<std::uint32_t>& out, std::string const& op) {
    if (depth == 0) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        schema("table of '" + op + "': expected nonnegative integer entries");
      }
      auto v = j.get<std::uint64_t>();
      if (v >= size) {
        schema("table of '" + op + "': entry " + std::to_string(v)
               + " outside the carrier");
      }
      out.push_back(static_cast<std::uint32_t>(v));
      return;
    }
    if (!j.is_array() || j.size() != size) {
      schema("table of '" + op + "': every level must have " + std::to_string(size)
             + " entries");
    }
    for (auto const& e : j) {
      flatten(e, depth - 1, size, out, op);
    }
  }

  Json unflatten(std::vector<std::uint32_t> const& t, std::size_t arity,
                 std::uint64_t size, std::size_t& at) {
    if (arity == 0) {
      return t[at++];
    }
    Json arr = Json::array();
    for (std::uint64_t i = 0; i < size; ++i) {
      arr.push_back(unflatten(t, arity - 1, size, at));
    }
    return arr;
  }

  TableAlgebra parse_group(Json const& j, char const* where, EngineConfig const& cfg) {
    if (j.is_string()) {
      return build_group(j.get<std::string>(), cfg);
    }
    TableAlgebra g = parse_table(j, cfg);
    if (g.signature().number_of_ops() != 2) {
      schema(std::string(where) + " must be a group without extra operations");
    }
    return g;
  }

  Document parse_any(Json const& j, EngineConfig const& cfg) {
    if (!j.is_object()) {
      schema("document must be a JSON object");
    }
    std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
    if (kind.empty()) {
      kind = j.contains("boundary") ? "precrossed" : "table";
    }
    Document doc;
    doc.name = j.contains("name") ? j.at("name").get<std::string>() : kind;
    if (kind == "table") {
      doc.kind  = Document::Kind::table;
      doc.table = parse_table(j, cfg);
      validate(doc.table);
      if (j.contains("subsets")) {
        std::uint64_t const n = doc.table.size();
        for (auto const& [name, spec] : member(j, "subsets", "table").items()) {
          if (spec.is_array()) {
            ElementSet s(as_codes(spec, n, "subset"));
            if (!is_subalgebra(doc.table, s)) {
              fail(ErrorKind::validation,
                   "subset '" + name + "' is not a subalgebra");
            }
            doc.subsets[name] = s;
          } else if (spec.contains("ideal_of")) {
            doc.subsets[name] = named_ideal(
                doc.table, as_strings(spec.at("ideal_of"), "ideal_of"), cfg);
          } else if (spec.contains("subalgebra_of")) {
            auto codes = as_codes(spec.at("subalgebra_of"), n, "subalgebra_of");
            doc.subsets[name] =
                generate_subalgebra(doc.table, std::span<Code const>(codes), cfg)
                    .elements;
          } else {
            schema("subset '" + name + "' must be a list or an ideal_of object");
          }
        }
      }
    } else if (kind == "zp_ring") {
      doc.kind = Document::Kind::ring;
      auto& s  = doc.ring_spec;
      s.p      = static_cast<std::uint32_t>(as_index(member(j, "p", "zp_ring"), "p"));
      s.generators  = as_strings(member(j, "generators", "zp_ring"), "generators");
      s.nil_squares = j.contains("nil_squares") && j.at("nil_squares").get<bool>();
      s.max_degree  = as_index(member(j, "max_degree", "zp_ring"), "max_degree");
      doc.ring      = build_ring(s, cfg);
      if (j.contains("subsets")) {
        for (auto const& [name, spec] : j.at("subsets").items()) {
          doc.ring_subsets[name] = named_ideal(
              doc.ring, as_strings(member(spec, "ideal_of", "ring subset"), "ideal_of"),
              cfg);
        }
      }
    } else if (kind == "precrossed") {
      doc.kind     = Document::Kind::precrossed;
      auto& x      = doc.module;
      x.c          = parse_group(member(j, "C", "precrossed"), "C", cfg);
      x.g          = parse_group(member(j, "G", "precrossed"), "G", cfg);
      check_guard(x.c.size() * x.g.size() <= cfg.guards.carrier,
                  "|G|*|C| exceeds the carrier cap");
      x.boundary   = as_codes(member(j, "boundary", "precrossed"), x.g.size(), "boundary");
      auto const& action = member(j, "action", "precrossed");
      if (!action.is_array()) {
        schema("action must be an array of rows");
      }
      for (auto const& row : action) {
        x.action.push_back(as_codes(row, x.c.size(), "action"));
      }
      validate(x);
      if (j.contains("submodules")) {
        for (auto const& [name, spec] : j.at("submodules").items()) {
          auto k = as_codes(member(spec, "K", "submodule"), x.c.size(), "K");
          auto s = as_codes(member(spec, "S", "submodule"), x.g.size(), "S");
          doc.submodules[name] = close_submodule(x, k, s);
        }
      }
    } else {
      schema("unknown document kind '" + kind + "'");
    }
    return doc;
  }
}  // namespace

Json read_json(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::parse, "cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    fail(ErrorKind::parse, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Document parse_document(Json const& j, EngineConfig const& cfg) {
  try {
    return parse_any(j, cfg);
  } catch (nlohmann::json::exception const& e) {
    fail(ErrorKind::schema, std::string("malformed document: ") + e.what());
  }
}

Document load_document(std::filesystem::path const& path, EngineConfig const& cfg) {
  return parse_document(read_json(path), cfg);
}

TableAlgebra parse_table(Json const& j, EngineConfig const& cfg) {
  std::uint64_t size = as_index(member(j, "size", "table"), "size");
  if (size == 0) {
    schema("size must be positive");
  }
  check_guard(size <= cfg.guards.carrier, "table algebra of size " + std::to_string(size)
                                              + " exceeds the carrier cap "
                                              + std::to_string(cfg.guards.carrier));
  auto const& ops = member(j, "ops", "table");
  if (!ops.is_object()) {
    schema("ops must be an object");
  }
  for (char const* required : {"mul", "inv"}) {
    if (!ops.contains(required)) {
      schema(std::string("missing mandatory operation '") + required + "'");
    }
  }
  // Extras keep document order so operation ids survive a round trip.
  std::vector<std::pair<std::string, Json>> extras;
  for (auto const& [name, spec] : ops.items()) {
    if (name != "mul" && name != "inv") {
      extras.emplace_back(name, spec);
    }
  }
  std::vector<Operation> extra_ops;
  for (auto const& [name, spec] : extras) {
    extra_ops.push_back({name, as_index(member(spec, "arity", "operation"), "arity")});
  }
  Signature                               sig(extra_ops);
  std::vector<std::vector<std::uint32_t>> tables;
  auto read = [&](std::string const& name, Json const& spec, std::size_t arity) {
    if (spec.contains("arity") && as_index(spec.at("arity"), "arity") != arity) {
      fail(ErrorKind::arity_mismatch, "operation '" + name + "' must have arity "
                                          + std::to_string(arity));
    }
    std::vector<std::uint32_t> t;
    flatten(member(spec, "table", "operation"), arity, size, t, name);
    tables.push_back(std::move(t));
  };
  read("mul", ops.at("mul"), 2);
  read("inv", ops.at("inv"), 1);
  for (std::size_t i = 0; i < extra_ops.size(); ++i) {
    read(extra_ops[i].name, extras[i].second, extra_ops[i].arity);
  }
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "algebra";
  return TableAlgebra(name, sig, size, std::move(tables));
}

Json table_to_json(TableAlgebra const& a,
                   std::map<std::string, ElementSet> const& subsets) {
  Json j;
  j["kind"] = "table";
  j["name"] = a.name();
  j["size"] = a.size();
  Json ops  = Json::object();
  auto const& sig = a.signature();
  for (OpId op = 0; op < sig.number_of_ops(); ++op) {
    std::size_t at = 0;
    ops[sig.name(op)] = {{"arity", sig.arity(op)},
                         {"table", unflatten(a.table(op), sig.arity(op), a.size(), at)}};
  }
  j["ops"] = ops;
  if (!subsets.empty()) {
    Json s = Json::object();
    for (auto const& [name, set] : subsets) {
      s[name] = set.codes();
    }
    j["subsets"] = s;
  }
  return j;
}

Json ring_to_json(TruncatedRingSpec const& spec) {
  return {{"kind", "zp_ring"},
          {"p", spec.p},
          {"generators", spec.generators},
          {"nil_squares", spec.nil_squares},
          {"max_degree", spec.max_degree}};
}

Json module_to_json(PrecrossedModule const& x,
                    std::map<std::string, Submodule> const& submodules) {
  Json j;
  j["kind"]     = "precrossed";
  j["C"]        = table_to_json(x.c);
  j["G"]        = table_to_json(x.g);
  j["boundary"] = x.boundary;
  j["action"]   = x.action;
  if (!submodules.empty()) {
    Json s = Json::object();
    for (auto const& [name, sub] : submodules) {
      s[name] = {{"K", sub.k.codes()}, {"S", sub.s.codes()}};
    }
    j["submodules"] = s;
  }
  return j;
}

IdentityBasis parse_basis(Json const& j) {
  try {
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "basis";
    return make_basis(name, as_strings(member(j, "identities", "basis"), "identities"));
  } catch (nlohmann::json::exception const& e) {
    fail(ErrorKind::schema, std::string("malformed basis: ") + e.what());
  }
}

Json basis_to_json(IdentityBasis const& b) {
  Json ids = Json::array();
  for (auto const& t : b.identities) {
    ids.push_back(to_string(t));
  }
  return {{"name", b.name}, {"identities", ids}};
}

IdentityBasis resolve_basis(std::string const& name_or_path, Signature const& sig) {
  auto presets = preset_names();
  if (std::find(presets.begin(), presets.end(), name_or_path) != presets.end()) {
    return preset_basis(name_or_path, sig);
  }
  if (!std::filesystem::exists(name_or_path)) {
    fail(ErrorKind::validation, "'" + name_or_path
                                    + "' is neither a basis preset nor a file");
  }
  IdentityBasis b = parse_basis(read_json(name_or_path));
  check_basis(b, sig);
  return b;
}

}  // namespace omega
