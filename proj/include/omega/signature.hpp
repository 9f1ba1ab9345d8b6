// Operation signatures of Omega-groups.
//
// Operation ids are dense: 0 is the group multiplication, 1 the inverse and
// 2 + i the i-th extra operation. The unit is the only constant and is not an
// operation id.

#ifndef OMEGA_SIGNATURE_HPP_
#define OMEGA_SIGNATURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

using OpId = std::size_t;

inline constexpr OpId op_mul = 0;
inline constexpr OpId op_inv = 1;

struct Operation {
  std::string name;
  std::size_t arity;

  bool operator==(Operation const&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Operation> extra_ops);

  std::vector<Operation> const& extra_ops() const noexcept { return _extra; }

  std::size_t number_of_ops() const noexcept { return 2 + _extra.size(); }
  std::size_t arity(OpId op) const;
  std::string const& name(OpId op) const;

  // Resolves a name to an op id. Accepts the aliases "+" for mul and "-"/"neg"
  // for inv so ring terms can be written additively.
  std::optional<OpId> find(std::string_view name) const;

  bool has_extra(std::string_view name) const;

  bool operator==(Signature const&) const = default;

 private:
  std::vector<Operation> _extra;
};

bool is_reserved_name(std::string_view name);

Signature ring_signature();
Signature pxm_signature();

}  // namespace omega

#endif  // OMEGA_SIGNATURE_HPP_
