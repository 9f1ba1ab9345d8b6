// Identity bases of subvarieties, membership, verbal values and reflections.
//
// An identity w is read as w(x) = e. The values of every term that vanishes
// on the subvariety, taken at tuples of a subalgebra S, form the ideal of S
// generated by the basis instances w(u), u a tuple over S. Both backends
// compute that ideal.

#ifndef OMEGA_VARIETY_HPP_
#define OMEGA_VARIETY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "omega/closure.hpp"
#include "omega/config.hpp"
#include "omega/term.hpp"
#include "omega/zp.hpp"

namespace omega {

struct IdentityBasis {
  std::string       name;
  std::vector<Term> identities;
};

// Parses identities; "s = t" becomes (mul s (inv t)).
Term          parse_identity(std::string_view text);
IdentityBasis make_basis(std::string name, std::vector<std::string> const& texts);

void check_basis(IdentityBasis const& basis, Signature const& sig);

// [x0,x1] and, per extra operation w of arity k,
// w(x0*xk, .., x(k-1)*x(2k-1)) * w(xk..x(2k-1))^-1 * w(x0..x(k-1))^-1.
IdentityBasis abelianization_basis(Signature const& sig);
// x^k, using r* as the product when the signature has it.
IdentityBasis power_basis(Signature const& sig, std::size_t k);
// x^-1 d(x) y^-1 c(y) d(x)^-1 x c(y)^-1 y over the signature {d, c}.
IdentityBasis crossed_basis();

// "abelian", "exp2", "cube", "xm".
IdentityBasis preset_basis(std::string_view name, Signature const& sig);
std::vector<std::string> preset_names();

// One basis instance: identity number, arguments and value.
template <typename Value>
struct Instance {
  std::size_t        identity = 0;
  std::vector<Value> args;
  Value              value{};
};

// First violated instance in lexicographic tuple order, if any.
std::optional<Instance<Code>> find_violation(Structure const& s,
                                             ElementSet const& host,
                                             IdentityBasis const& basis,
                                             EngineConfig const& cfg = {});
bool satisfies(Structure const& s, IdentityBasis const& basis,
               EngineConfig const& cfg = {});
bool satisfies(ZpRing const& r, IdentityBasis const& basis,
               EngineConfig const& cfg = {});

enum class VerbalMode {
  // Tables: representatives. Rings: sampling, verified by representatives
  // when p does not exceed the degree.
  automatic,
  // Instances on tuples supported on at most `degree` basis vectors. Rings
  // only; throws PolarizationUnsupported unless p > degree.
  sampling,
  // Instances on tuples of class representatives, after seeding with tuples
  // of generators.
  representatives,
  // Every tuple of the host.
  exhaustive,
};

struct VerbalStats {
  std::uint64_t evaluations = 0;
  std::uint64_t passes      = 0;
};

// Witnesses list the instances that enlarged the ideal, in discovery order.
struct VerbalValues {
  ElementSet                  values;
  std::vector<Instance<Code>> witnesses;
  VerbalStats                 stats;
};

struct LinearVerbalValues {
  Subspace                   values;
  std::vector<Instance<Vec>> witnesses;
  VerbalStats                stats;
};

VerbalValues verbal_values(Structure const& s, Subalgebra const& host,
                           IdentityBasis const& basis,
                           EngineConfig const& cfg = {},
                           VerbalMode mode = VerbalMode::automatic);
VerbalValues verbal_values(Structure const& s, ElementSet const& host,
                           IdentityBasis const& basis,
                           EngineConfig const& cfg = {},
                           VerbalMode mode = VerbalMode::automatic);
LinearVerbalValues verbal_values(ZpRing const& r, Subspace const& host,
                                 IdentityBasis const& basis,
                                 EngineConfig const& cfg = {},
                                 VerbalMode mode = VerbalMode::automatic);

Quotient     reflection(TableAlgebra const& a, IdentityBasis const& basis,
                        EngineConfig const& cfg = {});
RingQuotient reflection(ZpRing const& r, IdentityBasis const& basis,
                        EngineConfig const& cfg = {});

}  // namespace omega

#endif  // OMEGA_VARIETY_HPP_
