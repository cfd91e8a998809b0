// Runs the acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "affinv/acceptance.hpp"

int main(int argc, char** argv) {
  affinv::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::stoi(argv[i]));
  options.on_result = [](const affinv::AcceptanceResult& r) { std::cout << affinv::format_result(r) << std::endl; };
  const auto results = affinv::run_acceptance(options);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
