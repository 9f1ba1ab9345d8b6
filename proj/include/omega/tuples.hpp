// Counters over tuple spaces {0..radix-1}^length, last coordinate fastest.

#ifndef OMEGA_TUPLES_HPP_
#define OMEGA_TUPLES_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace omega {

class Odometer {
 public:
  Odometer(std::size_t length, std::uint64_t radix)
      : _digits(length, 0), _radix(radix), _done(radix == 0 && length > 0) {}

  std::span<std::uint64_t const> digits() const noexcept { return _digits; }
  std::uint64_t operator[](std::size_t i) const noexcept { return _digits[i]; }
  bool          done() const noexcept { return _done; }

  void next() { skip_from(_digits.size()); }

  // Advances coordinate i - 1 and zeroes the later ones, skipping every tuple
  // that shares the current prefix of length i.
  void skip_from(std::size_t i) {
    for (std::size_t j = i; j < _digits.size(); ++j) {
      _digits[j] = 0;
    }
    while (i-- > 0) {
      if (++_digits[i] < _radix) {
        return;
      }
      _digits[i] = 0;
    }
    _done = true;
  }

 private:
  std::vector<std::uint64_t> _digits;
  std::uint64_t              _radix;
  bool                       _done;
};

// radix^length, saturating at UINT64_MAX.
inline std::uint64_t tuple_count(std::uint64_t radix, std::size_t length) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (radix != 0 && n > UINT64_MAX / radix) {
      return UINT64_MAX;
    }
    n *= radix;
  }
  return n;
}

}  // namespace omega

#endif  // OMEGA_TUPLES_HPP_
