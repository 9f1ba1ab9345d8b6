// The two ring counterexamples, the Higgins case and the Peiffer case as
// self-checking demonstrations. Each throws InvariantViolation when a
// computed set differs from the expected one.

#ifndef OMEGA_DEMOS_HPP_
#define OMEGA_DEMOS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "omega/config.hpp"
#include "omega/io.hpp"

namespace omega {

struct DemoReport {
  std::string              name;
  std::vector<std::string> lines;  // human-readable summary
  Json                     data;   // machine-readable result
};

// Z/5 on a1, a2, b with nil squares and degree 3, basis x^3: [S,R1] and
// [S,R2] vanish while [S,R1 v R2] contains a1*a2*b.
DemoReport demo_cex1(EngineConfig const& cfg = {});
// Z/2[a]/(a^4), basis x^2: a^2 lies in [R,R] but not in C(R,R).
DemoReport demo_cex2(EngineConfig const& cfg = {});
// Abelian basis against commutator closures in S3 and in Z/2[a]/(a^4).
DemoReport demo_higgins(EngineConfig const& cfg = {});
// Crossed-module basis against Peiffer commutators.
DemoReport demo_peiffer(EngineConfig const& cfg = {});

std::vector<std::string> demo_names();
DemoReport               run_demo(std::string_view name, EngineConfig const& cfg = {});

}  // namespace omega

#endif  // OMEGA_DEMOS_HPP_
