// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <cstdio>

#include "dgl/acceptance.hpp"

int main() {
  bool all = true;
  auto results = dgl::run_acceptance(1, [&](const dgl::CriterionResult& r) {
    std::printf("criterion %2d %s  %s%s%s  (%.1fs)\n", r.index, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  });
  for (auto& r : results) all &= r.pass;
  std::printf(all ? "acceptance: all %zu criteria passed\n" : "acceptance: FAILURES present\n",
              results.size());
  return all ? 0 : 1;
}
