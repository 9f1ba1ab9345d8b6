// Size guards and execution settings passed through every closure routine.

#ifndef OMEGA_CONFIG_HPP_
#define OMEGA_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

namespace omega {

struct Guards {
  // Largest carrier for which operation tables are materialized.
  std::uint64_t carrier = 4096;
  // Largest basis dimension of an input Z/p ring.
  std::size_t dimension = 24;
  // Largest exponent of a direct power (the triple construction needs 3).
  std::size_t power = 3;
  // Largest host admitted by exhaustive ideal enumeration and the oracle.
  std::uint64_t oracle = 16;
  // Largest number of term evaluations in one tuple enumeration.
  std::uint64_t tuples = std::uint64_t{1} << 28;
  // Largest subalgebra produced by closure inside a (lazy) product.
  std::uint64_t closure = std::uint64_t{1} << 20;
};

struct EngineConfig {
  Guards guards;
  unsigned threads = 1;
};

// Thread count from OMEGA_THREADS, falling back to `fallback` when unset or
// malformed.
unsigned threads_from_env(unsigned fallback);

void check_guard(bool ok, std::string const& what);

}  // namespace omega

#endif  // OMEGA_CONFIG_HPP_
