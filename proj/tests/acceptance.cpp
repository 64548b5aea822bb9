#include <cstdio>
#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
  precond::suite::SuiteOptions options;
  if (argc > 1) options.filter = argv[1];
  options.on_result = [](const precond::suite::CriterionResult& r) {
    std::cout << precond::suite::format_line(r) << std::endl;
  };
  const auto results = precond::suite::run(options);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 && !results.empty() ? 0 : 1;
}
