#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dd::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED0DD5EED0DD01ULL;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double wall_ms = 0.0;
};

struct Check {
  std::string name;
  bool quick = false;  // cheap enough for the --quick tier
  std::function<CheckResult()> run;
};

// The acceptance criteria, in order. Each also enforces its runtime budget
// (0 = unlimited).
std::vector<Check> acceptance_checks(std::uint64_t seed = kDefaultSeed);

// Additional module invariants (rational identities, small grids, algebraic
// consistency checks); all quick.
std::vector<Check> invariant_checks(std::uint64_t seed = kDefaultSeed);

// quick = invariant checks + the fast acceptance criteria; full = everything.
std::vector<Check> suite(bool full, std::uint64_t seed = kDefaultSeed);

}  // namespace dd::verify
