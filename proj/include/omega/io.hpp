// JSON documents: table algebras, truncated rings, precrossed modules and
// identity bases.
//
//   {"kind":"table","name":..,"size":n,
//    "ops":{"mul":{"arity":2,"table":[[..]..]},"inv":{..},..},
//    "subsets":{name:[codes] | {"ideal_of":[words]} | {"subalgebra_of":[codes]}}}
//   {"kind":"zp_ring","p":..,"generators":[..],"nil_squares":..,"max_degree":..,
//    "subsets":{name:{"ideal_of":[polynomials]}}}
//   {"kind":"precrossed","C":group,"G":group,"boundary":[..],"action":[[..]..],
//    "submodules":{name:{"K":[..],"S":[..]}}}
// A group is a table document or a spec string such as "cyclic 4". Extra
// operations take ids in name order.

#ifndef OMEGA_IO_HPP_
#define OMEGA_IO_HPP_

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "omega/constructions.hpp"
#include "omega/pxmod.hpp"
#include "omega/variety.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

struct Document {
  enum class Kind { table, ring, precrossed };
  Kind        kind = Kind::table;
  std::string name;

  TableAlgebra                      table;
  std::map<std::string, ElementSet> subsets;

  TruncatedRingSpec                 ring_spec;
  ZpRing                            ring;
  std::map<std::string, Subspace>   ring_subsets;

  PrecrossedModule                  module;
  std::map<std::string, Submodule>  submodules;
};

Json     read_json(std::filesystem::path const& path);
Document parse_document(Json const& j, EngineConfig const& cfg = {});
Document load_document(std::filesystem::path const& path,
                       EngineConfig const& cfg = {});

TableAlgebra parse_table(Json const& j, EngineConfig const& cfg = {});
Json         table_to_json(TableAlgebra const& a,
                           std::map<std::string, ElementSet> const& subsets = {});
Json         ring_to_json(TruncatedRingSpec const& spec);
Json         module_to_json(PrecrossedModule const& x,
                            std::map<std::string, Submodule> const& submodules = {});

// {"name":..,"identities":[..]}
IdentityBasis parse_basis(Json const& j);
Json          basis_to_json(IdentityBasis const& b);
// A preset name or the path of a basis document.
IdentityBasis resolve_basis(std::string const& name_or_path, Signature const& sig);

}  // namespace omega

#endif  // OMEGA_IO_HPP_
