// Finite Omega-groups given by operation tables, and lazy direct powers.
//
// Elements are codes 0..size-1 with the unit fixed at 0. A direct power
// encodes tuples in mixed radix, first coordinate most significant, so the
// unit tuple is again code 0.

#ifndef OMEGA_STRUCTURE_HPP_
#define OMEGA_STRUCTURE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omega/signature.hpp"

namespace omega {

using Code = std::uint64_t;

// Anything that can evaluate the operations of a signature on element codes.
class Structure {
 public:
  virtual ~Structure() = default;

  virtual Signature const& signature() const = 0;
  virtual std::uint64_t    size() const = 0;
  virtual Code apply(OpId op, std::span<Code const> args) const = 0;

  Code unit() const noexcept { return 0; }
  Code mul(Code a, Code b) const {
    Code args[2] = {a, b};
    return apply(op_mul, args);
  }
  Code inv(Code a) const { return apply(op_inv, std::span<Code const>(&a, 1)); }
};

class TableAlgebra final : public Structure {
 public:
  TableAlgebra() = default;

  // `tables[op]` lists the values of op id `op` on all argument tuples in
  // lexicographic order. Checks shapes and entry ranges (SchemaError), not
  // the group axioms; see validate().
  TableAlgebra(std::string name, Signature sig, std::uint64_t size,
               std::vector<std::vector<std::uint32_t>> tables);

  Signature const& signature() const override { return _sig; }
  std::uint64_t    size() const override { return _size; }
  Code apply(OpId op, std::span<Code const> args) const override;

  std::string const& name() const noexcept { return _name; }
  void               set_name(std::string name) { _name = std::move(name); }

  Code fast_mul(Code a, Code b) const noexcept {
    return _tables[op_mul][a * _size + b];
  }
  Code fast_inv(Code a) const noexcept { return _tables[op_inv][a]; }

  std::vector<std::uint32_t> const& table(OpId op) const { return _tables.at(op); }

  bool operator==(TableAlgebra const& that) const {
    return _sig == that._sig && _size == that._size && _tables == that._tables;
  }

 private:
  std::string                             _name;
  Signature                               _sig;
  std::uint64_t                           _size = 1;
  std::vector<std::vector<std::uint32_t>> _tables;
};

// Builds a table algebra by evaluating `op(args)` on every argument tuple.
template <typename F>
TableAlgebra tabulate(std::string name, Signature const& sig,
                      std::uint64_t size, F&& op);

// Checks the group axioms on the carrier and that every extra operation fixes
// the unit. Throws GroupAxiomViolation / ConstantViolation.
void validate(TableAlgebra const& a);

bool is_abelian_group(Structure const& s);

// k-fold direct power whose elements are never stored; operations act
// componentwise on decoded tuples.
class PowerView final : public Structure {
 public:
  PowerView(TableAlgebra const& base, std::size_t k);

  Signature const& signature() const override { return _base->signature(); }
  std::uint64_t    size() const override { return _size; }
  Code apply(OpId op, std::span<Code const> args) const override;

  TableAlgebra const& base() const noexcept { return *_base; }
  std::size_t         power() const noexcept { return _k; }

  Code encode(std::span<Code const> coords) const;
  void decode(Code x, std::span<Code> coords) const;
  Code coordinate(Code x, std::size_t i) const;

 private:
  TableAlgebra const* _base;
  std::size_t         _k;
  std::uint64_t       _size;
};

template <typename F>
TableAlgebra tabulate(std::string name, Signature const& sig,
                      std::uint64_t size, F&& op) {
  std::vector<std::vector<std::uint32_t>> tables;
  for (OpId id = 0; id < sig.number_of_ops(); ++id) {
    std::size_t   arity = sig.arity(id);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      count *= size;
    }
    std::vector<std::uint32_t> table(count);
    std::vector<Code>          args(arity, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = arity; i-- > 0;) {
        args[i] = rest % size;
        rest /= size;
      }
      table[idx] = static_cast<std::uint32_t>(
          op(id, std::span<Code const>(args.data(), arity)));
    }
    tables.push_back(std::move(table));
  }
  return TableAlgebra(std::move(name), sig, size, std::move(tables));
}

}  // namespace omega

#endif  // OMEGA_STRUCTURE_HPP_
