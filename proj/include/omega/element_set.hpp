// Sorted sets of element codes and a code -> position index.

#ifndef OMEGA_ELEMENT_SET_HPP_
#define OMEGA_ELEMENT_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "omega/structure.hpp"

namespace omega {

class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Code> codes)
      : ElementSet(std::vector<Code>(codes)) {}
  explicit ElementSet(std::vector<Code> codes);

  static ElementSet unit() { return ElementSet(std::vector<Code>{0}); }
  static ElementSet range(std::uint64_t n);

  bool        contains(Code x) const;
  std::size_t size() const noexcept { return _codes.size(); }
  bool        empty() const noexcept { return _codes.empty(); }
  bool        is_trivial() const noexcept {
    return _codes.size() == 1 && _codes[0] == 0;
  }

  // Position of x in sorted order.
  std::optional<std::size_t> position(Code x) const;

  std::vector<Code> const& codes() const noexcept { return _codes; }
  auto                     begin() const noexcept { return _codes.begin(); }
  auto                     end() const noexcept { return _codes.end(); }
  Code operator[](std::size_t i) const noexcept { return _codes[i]; }

  bool is_subset_of(ElementSet const& that) const;

  bool operator==(ElementSet const&) const = default;
  auto operator<=>(ElementSet const&) const = default;

 private:
  std::vector<Code> _codes;
};

ElementSet set_union(ElementSet const& a, ElementSet const& b);
ElementSet set_intersection(ElementSet const& a, ElementSet const& b);

// Growable map from element codes of a universe to dense positions. Dense
// storage for small universes, hashing otherwise.
class CodeIndex {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  explicit CodeIndex(std::uint64_t universe);

  std::uint32_t find(Code x) const {
    if (_dense_mode) {
      return _dense[x];
    }
    auto it = _sparse.find(x);
    return it == _sparse.end() ? npos : it->second;
  }
  bool contains(Code x) const { return find(x) != npos; }
  void insert(Code x, std::uint32_t pos) {
    if (_dense_mode) {
      _dense[x] = pos;
    } else {
      _sparse.emplace(x, pos);
    }
  }

 private:
  bool                                    _dense_mode;
  std::vector<std::uint32_t>              _dense;
  std::unordered_map<Code, std::uint32_t> _sparse;
};

}  // namespace omega

#endif  // OMEGA_ELEMENT_SET_HPP_
