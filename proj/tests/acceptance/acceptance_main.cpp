// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. ctest runs this as the gate; `ddseries verify --full` covers the
// same ground plus the module invariants.
#include <cstdio>

#include "dd/verify.hpp"

int main() {
  std::printf("acceptance suite (seed %llx)\n",
              static_cast<unsigned long long>(dd::verify::kDefaultSeed));
  int failed = 0;
  int index = 0;
  for (const auto& check : dd::verify::acceptance_checks()) {
    const dd::verify::CheckResult r = check.run();
    ++index;
    std::printf("[%s] %2d %-34s %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL", index,
                r.name.c_str(), r.wall_ms, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  if (failed == 0) {
    std::printf("all %d criteria passed\n", index);
  } else {
    std::printf("%d of %d criteria FAILED\n", failed, index);
  }
  return failed == 0 ? 0 : 1;
}
