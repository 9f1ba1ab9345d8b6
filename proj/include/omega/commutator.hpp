// Relative commutators [M,N]_B, the c-value ideal C_B(M,N), centrality and
// the universal-property oracle, on both backends.
//
// Instances v(mn)v(n)^-1v(m)^-1 for every v in the word group are obtained
// without enumerating terms. T, the subalgebra of H^3 generated by (m,m,e)
// and (n,e,n), consists of triples (t(m,n), t(m,1), t(1,n)) for terms t.
// Its verbal values are the triples (v(m,n), v(m,1), v(1,n)) with v in the
// word group, so a*c^-1*b^-1 runs through the instances
// v(mn)v(n)^-1v(m)^-1 over tuples of M and N. Conversely each instance
// arises from the tuple of triples (m_i n_i, m_i, n_i).

#ifndef OMEGA_COMMUTATOR_HPP_
#define OMEGA_COMMUTATOR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega/closure.hpp"
#include "omega/variety.hpp"
#include "omega/zp.hpp"

namespace omega {

struct Witness {
  // "c": a triple (a,b,c) of verbal values of T produced a*c^-1*b^-1.
  // "w": a basis instance on the meet produced its value.
  std::string              kind;
  std::vector<std::string> inputs;
  std::size_t              identity = 0;
  std::string              element;
  std::optional<Code>      index;
};

// Sizes for the table backend, dimensions for the ring backend.
struct CommutatorStats {
  bool          linear        = false;
  std::uint64_t host          = 0;
  std::uint64_t triple        = 0;
  std::uint64_t triple_values = 0;
  std::uint64_t meet          = 0;
  std::uint64_t generators    = 0;
  std::uint64_t evaluations   = 0;
};

struct CommutatorReport {
  ElementSet           result;
  std::vector<Witness> witnesses;
  CommutatorStats      stats;
};

struct LinearCommutatorReport {
  Subspace             result;
  std::vector<Witness> witnesses;
  CommutatorStats      stats;
};

// H = M v N materialized on its own, with T inside the lazy cube of H.
struct TripleAlgebra {
  std::shared_ptr<TableAlgebra const> host;
  ElementSet                          embedding;  // position in host -> code
  PowerView                           cube;
  Subalgebra                          t;
};

TripleAlgebra build_triple(Structure const& a, ElementSet const& m,
                           ElementSet const& n, EngineConfig const& cfg = {});

CommutatorReport c_values(Structure const& a, ElementSet const& m,
                          ElementSet const& n, IdentityBasis const& basis,
                          EngineConfig const& cfg = {});
CommutatorReport relative_commutator(Structure const& a, ElementSet const& m,
                                     ElementSet const& n,
                                     IdentityBasis const& basis,
                                     EngineConfig const& cfg = {});
CommutatorReport higgins_commutator(Structure const& a, ElementSet const& m,
                                    ElementSet const& n,
                                    EngineConfig const& cfg = {});

// [M,N]_B = {e}, stopping at the first nontrivial generator.
bool commutator_is_trivial(Structure const& a, ElementSet const& m,
                           ElementSet const& n, IdentityBasis const& basis,
                           EngineConfig const& cfg = {});

// n is an ideal of the whole algebra; [N,A]_B = {e}.
bool is_central(Structure const& a, ElementSet const& n,
                IdentityBasis const& basis, EngineConfig const& cfg = {});
// Every v(n a) v(a)^-1 is trivial, through the subalgebra of A^2 generated
// by (n,e) and (a,a).
bool is_central_direct(Structure const& a, ElementSet const& n,
                       IdentityBasis const& basis, EngineConfig const& cfg = {});

// Smallest ideal I of M v N such that the images of M and N have trivial
// commutator in (M v N)/I. Throws InvariantViolation when the ideals with
// that property have no least element.
ElementSet universal_oracle(Structure const& a, ElementSet const& m,
                            ElementSet const& n, IdentityBasis const& basis,
                            EngineConfig const& cfg = {});

// C_B(A,A) equals the verbal values of A.
bool image_condition(Structure const& a, IdentityBasis const& basis,
                     EngineConfig const& cfg = {});

LinearCommutatorReport c_values(ZpRing const& r, Subspace const& m,
                                Subspace const& n, IdentityBasis const& basis,
                                EngineConfig const& cfg = {});
LinearCommutatorReport relative_commutator(ZpRing const& r, Subspace const& m,
                                           Subspace const& n,
                                           IdentityBasis const& basis,
                                           EngineConfig const& cfg = {});
LinearCommutatorReport higgins_commutator(ZpRing const& r, Subspace const& m,
                                          Subspace const& n,
                                          EngineConfig const& cfg = {});
bool is_central(ZpRing const& r, Subspace const& n, IdentityBasis const& basis,
                EngineConfig const& cfg = {});
bool is_central_direct(ZpRing const& r, Subspace const& n,
                       IdentityBasis const& basis, EngineConfig const& cfg = {});
bool image_condition(ZpRing const& r, IdentityBasis const& basis,
                     EngineConfig const& cfg = {});

}  // namespace omega

#endif  // OMEGA_COMMUTATOR_HPP_
