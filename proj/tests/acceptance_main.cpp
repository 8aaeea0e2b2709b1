#include <cstdio>

#include "pclab/acceptance.hpp"

int main() {
  const std::vector<pclab::CriterionResult> results = pclab::run_acceptance(7);
  bool all = true;
  for (const pclab::CriterionResult& r : results) {
    std::printf("[%s] C%d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.details.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
