// One line per acceptance criterion; nonzero exit if any fails.
//   acceptance [--serial] [--details] [--contract "<command>"] [id ...]
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "uqkit/suite.hpp"

int main(int argc, char** argv) {
  uqkit::SuiteOptions opts;
  bool details = false;
  std::vector<int> only;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--serial")) opts.exec = uqkit::Exec::Serial;
    else if (!std::strcmp(argv[k], "--details")) details = true;
    else if (!std::strcmp(argv[k], "--contract") && k + 1 < argc) opts.cli_contract_command = argv[++k];
    else only.push_back(std::stoi(argv[k]));
  }
  int failed = 0;
  for (int id = 1; id <= uqkit::kCriterionCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto r = uqkit::run_criterion(id, opts);
    std::cout << uqkit::summary_line(r, true) << "\n";
    if (details || !r.passed)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    failed += !r.passed;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
