// Runs every suite criterion at seed 1 and reports one line per criterion.
// Exit status 0 only when all of them pass.

#include <mirrorborn/suite.hpp>

#include <cstdio>
#include <exception>

int main() {
  try {
    const mirrorborn::SuiteResult result = mirrorborn::run_acceptance_suite(1);
    int passed = 0;
    for (const mirrorborn::CriterionResult& c : result.criteria) {
      std::printf("[%s] %2d. %s: %s\n", c.passed ? "PASS" : "FAIL", c.id,
                  c.name.c_str(), c.detail.c_str());
      if (c.passed) ++passed;
    }
    std::printf("RESULT: %d/%zu criteria passed\n", passed, result.criteria.size());
    return passed == int(result.criteria.size()) ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
