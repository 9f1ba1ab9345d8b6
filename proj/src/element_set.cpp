#include "omega/element_set.hpp"

#include <iterator>
#include <numeric>

namespace omega {

ElementSet::ElementSet(std::vector<Code> codes) : _codes(std::move(codes)) {
  std::sort(_codes.begin(), _codes.end());
  _codes.erase(std::unique(_codes.begin(), _codes.end()), _codes.end());
}

ElementSet ElementSet::range(std::uint64_t n) {
  std::vector<Code> codes(n);
  std::iota(codes.begin(), codes.end(), Code{0});
  return ElementSet(std::move(codes));
}

bool ElementSet::contains(Code x) const {
  return std::binary_search(_codes.begin(), _codes.end(), x);
}

std::optional<std::size_t> ElementSet::position(Code x) const {
  auto it = std::lower_bound(_codes.begin(), _codes.end(), x);
  if (it == _codes.end() || *it != x) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - _codes.begin());
}

bool ElementSet::is_subset_of(ElementSet const& that) const {
  return std::includes(that._codes.begin(), that._codes.end(), _codes.begin(),
                       _codes.end());
}

ElementSet set_union(ElementSet const& a, ElementSet const& b) {
  std::vector<Code> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet set_intersection(ElementSet const& a, ElementSet const& b) {
  std::vector<Code> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

CodeIndex::CodeIndex(std::uint64_t universe)
    : _dense_mode(universe <= (std::uint64_t{1} << 22)) {
  if (_dense_mode) {
    _dense.assign(universe, npos);
  }
}

}  // namespace omega
