// Precrossed modules and their Omega-group form.
//
// (C, G, boundary, action) corresponds to G x C with
//   (g,c)(g',c') = (gg', c ^g c'),  d(g,c) = (g,1),  c(g,c) = (boundary(c) g, 1),
// where the pair (g,c) has code g*|C| + c. Normal submodules (K,S) correspond
// to the ideals {(s,k)}.

#ifndef OMEGA_PXMOD_HPP_
#define OMEGA_PXMOD_HPP_

#include <vector>

#include "omega/closure.hpp"
#include "omega/config.hpp"
#include "omega/structure.hpp"
#include "omega/variety.hpp"

namespace omega {

struct PrecrossedModule {
  TableAlgebra                   c;
  TableAlgebra                   g;
  std::vector<Code>              boundary;  // C -> G
  std::vector<std::vector<Code>> action;    // action[g][c] = ^g c
};

struct Submodule {
  ElementSet k;  // in C
  ElementSet s;  // in G

  bool operator==(Submodule const&) const = default;
};

// Group axioms of C and G, boundary a homomorphism, action a left action by
// automorphisms, boundary(^g c) = g boundary(c) g^-1. Throws ValidationError.
void validate(PrecrossedModule const& x);

// d and c are idempotent endomorphisms with d c = c and c d = d.
void validate_pxm(Structure const& a);

TableAlgebra     to_pxm(PrecrossedModule const& x, EngineConfig const& cfg = {});
// (kernel of d, image of d, c, conjugation), both re-indexed in code order.
PrecrossedModule to_precrossed(TableAlgebra const& a);
// An ideal J of a PXM algebra as the submodule (J meet K[d], d(J)) of
// to_precrossed(a).
Submodule pxm_ideal_submodule(TableAlgebra const& a, ElementSet const& ideal);

Submodule whole(PrecrossedModule const& x);
// Smallest normal submodule containing the given elements.
Submodule close_submodule(PrecrossedModule const& x, std::vector<Code> const& k,
                          std::vector<Code> const& s);
// K, S normal subgroups, boundary(K) in S, ^g k in K, ^s c c^-1 in K.
bool is_normal_submodule(PrecrossedModule const& x, Submodule const& sub);
ElementSet submodule_ideal(PrecrossedModule const& x, Submodule const& sub);
Submodule  ideal_submodule(PrecrossedModule const& x, ElementSet const& ideal);

Code peiffer_element(PrecrossedModule const& x, Code k, Code l);
// Normal closure in K v L of the elements <k,l> and <l,k>.
ElementSet peiffer_commutator(PrecrossedModule const& x, Submodule const& k,
                              Submodule const& l);
bool       is_crossed(PrecrossedModule const& x);

IdentityBasis xm_basis();

// N -> G the inclusion of a normal subgroup, G acting by conjugation. A
// crossed module; C is N re-indexed in code order.
PrecrossedModule conjugation_module(TableAlgebra const& g, ElementSet const& n);
// Trivial boundary and trivial action.
PrecrossedModule trivial_module(TableAlgebra const& c, TableAlgebra const& g);
// C_n with the generator of C_2 acting by inversion; the boundary sends the
// generator of C_n to that of C_2 when n is even and is trivial otherwise.
PrecrossedModule inversion_module(std::size_t n);

struct PeifferCheck {
  ElementSet peiffer;     // in C
  ElementSet commutator;  // in G x C, codes
  bool       agrees = false;
};
PeifferCheck peiffer_crosscheck(PrecrossedModule const& x, Submodule const& k,
                                Submodule const& l, EngineConfig const& cfg = {});

}  // namespace omega

#endif  // OMEGA_PXMOD_HPP_
