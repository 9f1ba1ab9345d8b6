// Builders for the finite algebras used by tests, demos and the command line:
// truncated polynomial rings over Z/p and the standard small groups.

#ifndef OMEGA_CONSTRUCTIONS_HPP_
#define OMEGA_CONSTRUCTIONS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "omega/config.hpp"
#include "omega/element_set.hpp"
#include "omega/structure.hpp"
#include "omega/zp.hpp"

namespace omega {

struct TruncatedRingSpec {
  std::uint32_t            p = 2;
  std::vector<std::string> generators;
  bool                     nil_squares = false;  // g^2 = 0 for each generator
  std::size_t              max_degree  = 1;      // longer monomials vanish
};

// Free commutative non-unital ring on the generators modulo monomials of
// degree above max_degree (and squares of generators when nil_squares). The
// basis is ordered by degree, then by exponent vector, larger first:
// a1, a2, b, a1*a2, a1*b, a2*b, a1*a2*b.
ZpRing build_ring(TruncatedRingSpec const& spec, EngineConfig const& cfg = {});

// Z/2[a]/(a^4).
ZpRing cubic_nil_ring();
// Z/5 on a1, a2, b with nil squares and degree at most 3.
ZpRing three_generator_ring();

struct GroupSpec {
  enum class Kind { cyclic, symmetric, dihedral, quaternion, product };
  Kind                   kind = Kind::cyclic;
  std::size_t            n    = 1;
  std::vector<GroupSpec> factors;  // for products
};

// "cyclic 6", "symmetric 3", "dihedral 4" (order 8), "quaternion", and
// products joined by " x ": "cyclic 2 x cyclic 3". Throws ParseError.
GroupSpec parse_group_spec(std::string_view text);

// Element numbering:
//   cyclic n     g^k has index k;
//   symmetric n  permutations in lexicographic order of their image lists,
//                composition (xy)(i) = x(y(i));
//   dihedral n   r^i s^j has index i + n*j;
//   quaternion   1, -1, i, -i, j, -j, k, -k;
//   product      mixed radix, first factor most significant.
TableAlgebra build_group(GroupSpec const& spec, EngineConfig const& cfg = {});
TableAlgebra build_group(std::string_view spec, EngineConfig const& cfg = {});

// Ideal of the whole algebra generated by group words such as "3", "1*2^-1"
// (factors are element indices).
ElementSet named_ideal(TableAlgebra const& a, std::vector<std::string> const& words,
                       EngineConfig const& cfg = {});
// Ideal of the whole ring generated by polynomials such as "a1*b + 2*b".
Subspace named_ideal(ZpRing const& r, std::vector<std::string> const& polys,
                     EngineConfig const& cfg = {});

Code evaluate_word(TableAlgebra const& a, std::string_view word);

}  // namespace omega

#endif  // OMEGA_CONSTRUCTIONS_HPP_
