// Closure algorithms over table-backed Omega-groups: subalgebras, ideals (as
// unit classes of congruences), quotients, products, and ideal lattices.

#ifndef OMEGA_CLOSURE_HPP_
#define OMEGA_CLOSURE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "omega/config.hpp"
#include "omega/element_set.hpp"
#include "omega/structure.hpp"
#include "omega/term.hpp"

namespace omega {

struct Subalgebra {
  ElementSet elements;
  // Group generators: every element is a product of these.
  std::vector<Code> generators;
};

Code eval_term(Structure const& s, Term const& t, std::span<Code const> args);

// Smallest subset containing seed and the unit closed under every operation.
Subalgebra generate_subalgebra(Structure const& s, std::span<Code const> seed,
                               EngineConfig const& cfg = {});
inline Subalgebra generate_subalgebra(Structure const& s, ElementSet const& seed,
                                      EngineConfig const& cfg = {}) {
  return generate_subalgebra(s, std::span<Code const>(seed.codes()), cfg);
}

// A small list of elements generating `group` as a group (greedy).
std::vector<Code> group_generators(Structure const& s, ElementSet const& group);

// Congruence of a subalgebra, grown by merging pairs. Every merged pair is
// pushed through the basic translations of the host (multiplication by a host
// generator on either side, inversion, and each extra operation with all
// other arguments fixed in the host) until a fixpoint is reached.
class Congruence {
 public:
  Congruence(Structure const& s, ElementSet host, EngineConfig const& cfg = {});
  Congruence(Structure const& s, ElementSet host,
             std::vector<Code> host_generators, EngineConfig const& cfg = {});

  // Returns true when the relation grew.
  bool add_pair(Code a, Code b);
  bool add_to_unit_class(Code g) { return add_pair(g, 0); }

  bool related(Code a, Code b) const;
  bool in_unit_class(Code x) const { return related(x, 0); }
  // Least member of the class of x.
  Code representative(Code x) const;

  ElementSet unit_class() const;
  std::size_t number_of_classes() const noexcept { return _classes; }
  // Class number per host position: the unit class is 0, the others are
  // numbered by their least member.
  std::vector<std::uint32_t> class_ids() const;
  // Least member of each class, in class order.
  std::vector<Code> representatives() const;

  ElementSet const& host() const noexcept { return _host; }
  Structure const&  structure() const noexcept { return *_s; }

 private:
  std::uint32_t local(Code x) const;
  std::uint32_t find(std::uint32_t x) const;
  bool          unite(std::uint32_t a, std::uint32_t b);
  void          propagate();

  Structure const*                   _s;
  ElementSet                         _host;
  CodeIndex                          _index;
  std::vector<Code>                  _gens;
  mutable std::vector<std::uint32_t> _parent;
  std::vector<std::uint32_t>         _weight;
  std::vector<std::uint32_t>         _least;  // per root, a host position
  std::vector<std::pair<std::uint32_t, std::uint32_t>> _pending;
  std::size_t                        _classes;
  std::vector<bool>                  _on_generators;
};

// Ideal of `host` generated by `gens`: the unit class of the congruence
// generated by {(g, e)}.
ElementSet generate_ideal(Structure const& s, ElementSet const& host,
                          std::span<Code const> gens,
                          EngineConfig const& cfg = {});
inline ElementSet generate_ideal(Structure const& s, ElementSet const& host,
                                 ElementSet const& gens,
                                 EngineConfig const& cfg = {}) {
  return generate_ideal(s, host, std::span<Code const>(gens.codes()), cfg);
}

bool is_subalgebra(Structure const& s, ElementSet const& set);
bool is_ideal(Structure const& s, ElementSet const& host, ElementSet const& set);

struct Homomorphism {
  ElementSet        domain;
  std::vector<Code> images;  // images[i] is the image of domain[i]

  Code       operator()(Code x) const;
  ElementSet image(ElementSet const& s) const;
  ElementSet preimage(ElementSet const& t) const;
  ElementSet kernel() const { return preimage(ElementSet::unit()); }
};

bool is_homomorphism(Structure const& source, Structure const& target,
                     Homomorphism const& h);

struct Quotient {
  TableAlgebra algebra;
  Homomorphism projection;
};

// host / ideal. Classes are numbered with the unit class first, the others by
// least member.
Quotient quotient(Structure const& s, ElementSet const& host,
                  ElementSet const& ideal, EngineConfig const& cfg = {});
inline Quotient quotient(TableAlgebra const& a, ElementSet const& ideal,
                         EngineConfig const& cfg = {}) {
  return quotient(a, ElementSet::range(a.size()), ideal, cfg);
}

// The subalgebra as an algebra of its own, re-indexed in sorted code order.
TableAlgebra restrict_to(Structure const& s, ElementSet const& subalgebra,
                         EngineConfig const& cfg = {});

TableAlgebra direct_power(TableAlgebra const& a, std::size_t k,
                          EngineConfig const& cfg = {});
// Projection of a materialized direct power (or product) onto coordinate i.
Homomorphism projection(std::span<std::uint64_t const> radices, std::size_t i);
TableAlgebra direct_product(std::span<TableAlgebra const* const> factors,
                            EngineConfig const& cfg = {});

struct MeetJoin {
  ElementSet meet;
  ElementSet join;
};
MeetJoin meet_join_ideals(Structure const& s, ElementSet const& a,
                          ElementSet const& b, EngineConfig const& cfg = {});

// M^N: the ideal of M v N generated by M.
ElementSet m_to_the_n(Structure const& s, ElementSet const& m,
                      ElementSet const& n, EngineConfig const& cfg = {});

// All ideals of host, sorted by size then codes.
std::vector<ElementSet> enumerate_ideals(Structure const& s,
                                         ElementSet const& host,
                                         EngineConfig const& cfg = {});

}  // namespace omega

#endif  // OMEGA_CLOSURE_HPP_
