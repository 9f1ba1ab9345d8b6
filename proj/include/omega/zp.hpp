// Finite-dimensional algebras over Z/p given by structure constants, and
// subspaces in reduced row echelon form.
//
// An element is its coefficient vector over the basis. Its index is the
// vector read as a base-p numeral, first coordinate most significant, so the
// zero vector has index 0 and indices of a direct power agree with PowerView.

#ifndef OMEGA_ZP_HPP_
#define OMEGA_ZP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/config.hpp"
#include "omega/signature.hpp"
#include "omega/structure.hpp"
#include "omega/term.hpp"

namespace omega {

using Coeff = std::uint32_t;
using Vec   = std::vector<Coeff>;

bool is_prime(std::uint64_t p);

// Sparse product of two basis vectors: (basis index, coefficient) pairs.
using BasisProduct = std::vector<std::pair<std::uint32_t, Coeff>>;

class ZpRing {
 public:
  ZpRing() = default;
  // products[i][j] is e_i * e_j.
  ZpRing(std::uint32_t p, std::vector<std::string> labels,
         std::vector<std::vector<BasisProduct>> products);

  std::uint32_t                   p() const noexcept { return _p; }
  std::size_t                     dimension() const noexcept { return _labels.size(); }
  std::vector<std::string> const& labels() const noexcept { return _labels; }
  BasisProduct const& product(std::size_t i, std::size_t j) const {
    return _products[i][j];
  }

  // Number of elements, saturating at UINT64_MAX.
  std::uint64_t size() const;

  Vec zero() const { return Vec(dimension(), 0); }
  Vec basis_vector(std::size_t i) const;
  Vec add(Vec const& a, Vec const& b) const;
  Vec sub(Vec const& a, Vec const& b) const;
  Vec neg(Vec const& a) const;
  Vec scale(Coeff c, Vec const& a) const;
  Vec mul(Vec const& a, Vec const& b) const;

  // Omega-group interface over the ring signature {r*}.
  Signature const& signature() const;
  Vec              unit() const { return zero(); }
  Vec              apply(OpId op, std::span<Vec const> args) const;

  std::uint64_t index(Vec const& v) const;
  Vec           element(std::uint64_t index) const;

  bool is_associative() const;
  bool is_commutative() const;

  // k-fold direct power, basis of copy i following that of copy i - 1.
  ZpRing power(std::size_t k) const;

  // Sorted "c*label" terms joined by " + ", coefficient 1 omitted, "0" for
  // zero.
  std::string format(Vec const& v) const;

  // Polynomial in the labels of this ring: "2*a1*b + a^2 - b". A factor is a
  // label, a parenthesized label, or a label raised to a positive power.
  Vec parse(std::string_view text) const;

 private:
  std::uint32_t                          _p = 2;
  std::vector<std::string>               _labels;
  std::vector<std::vector<BasisProduct>> _products;
};

// Table rendering: element i of the result is element(i) of the ring.
TableAlgebra to_table_algebra(ZpRing const& r, EngineConfig const& cfg = {});

class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t n) : _p(p), _n(n) {}

  static Subspace full(std::uint32_t p, std::size_t n);
  static Subspace span(std::uint32_t p, std::size_t n,
                       std::span<Vec const> vectors);

  // Returns true when v was not already contained.
  bool add(Vec const& v);

  bool contains(Vec const& v) const;
  // Canonical representative of v modulo this subspace: zero in every pivot
  // column.
  Vec reduce(Vec v) const;

  std::uint32_t                     p() const noexcept { return _p; }
  std::size_t                       ambient() const noexcept { return _n; }
  std::size_t                       dimension() const noexcept { return _rows.size(); }
  std::vector<Vec> const&           basis() const noexcept { return _rows; }
  std::vector<std::size_t> const&   pivots() const noexcept { return _pivots; }
  std::vector<std::size_t>          free_columns() const;
  std::uint64_t                     size() const;

  // Coordinates of a member with respect to basis().
  Vec coordinates(Vec const& v) const;

  // All elements in increasing index order. Guarded by cfg.guards.carrier.
  std::vector<Vec> elements(EngineConfig const& cfg = {}) const;

  bool is_subspace_of(Subspace const& that) const;
  bool operator==(Subspace const& that) const {
    return _p == that._p && _n == that._n && _rows == that._rows;
  }

 private:
  std::uint32_t            _p = 2;
  std::size_t              _n = 0;
  std::vector<Vec>         _rows;    // reduced row echelon form
  std::vector<std::size_t> _pivots;  // increasing
};

Subspace sum(Subspace const& a, Subspace const& b);
Subspace intersect(Subspace const& a, Subspace const& b);

// Image of a subspace of an ambient space split into k equal blocks under
// (x_1..x_k) -> sum c_i x_i.
Subspace combine_blocks(Subspace const& s, std::size_t k,
                        std::span<Coeff const> c);

// Closures inside a ring: subalgebra = span closed under products, ideal of
// a subalgebra = span closed under products with the host on both sides.
Subspace generate_subalgebra(ZpRing const& r, std::span<Vec const> seed,
                             EngineConfig const& cfg = {});
Subspace generate_ideal(ZpRing const& r, Subspace const& host,
                        std::span<Vec const> gens, EngineConfig const& cfg = {});
inline Subspace generate_ideal(ZpRing const& r, Subspace const& host,
                               Subspace const& gens,
                               EngineConfig const& cfg = {}) {
  return generate_ideal(r, host, std::span<Vec const>(gens.basis()), cfg);
}
bool is_subalgebra(ZpRing const& r, Subspace const& s);
bool is_ideal(ZpRing const& r, Subspace const& host, Subspace const& s);

// The subalgebra as a ring on its RREF basis, plus the embedding matrix
// (row i = image of the i-th basis vector).
struct Restriction {
  ZpRing           ring;
  std::vector<Vec> embedding;
};
Restriction restrict_to(ZpRing const& r, Subspace const& subalgebra);

// R / I on the free columns of I: the class of v has the free-column
// coordinates of reduce(v).
struct RingQuotient {
  ZpRing   ring;
  Subspace ideal;
  Vec      project(Vec const& v) const;
  // Preimage of a subspace of the quotient.
  Subspace preimage(Subspace const& t) const;
};
RingQuotient quotient(ZpRing const& r, Subspace const& ideal);

// Image of a subspace under a linear map given by row images.
Subspace linear_image(std::span<Vec const> rows, Subspace const& s,
                      std::uint32_t p, std::size_t target_dimension);

// Degree of a term as a polynomial map over the ring signature: variables 1,
// additive operations max, r* sum. The unit has degree 0.
std::size_t polynomial_degree(Term const& t);

}  // namespace omega

#endif  // OMEGA_ZP_HPP_
