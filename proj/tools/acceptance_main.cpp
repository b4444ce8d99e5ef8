#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "matdecomp/acceptance.hpp"

// Usage: matdecomp_acceptance [criterion ids...]
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  return matdecomp::acceptance::run_all(std::cout, only) ? 0 : 1;
}
