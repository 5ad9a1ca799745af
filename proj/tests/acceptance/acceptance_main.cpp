#include <iostream>

#include "fanowalls/cli/acceptance.hpp"

int main() {
  const auto results = fanowalls::cli::run_acceptance();
  return fanowalls::cli::print_results(std::cout, results) ? 0 : 1;
}
