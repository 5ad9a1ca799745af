#include <iostream>

#include "fanowalls/cli/app.hpp"

int main(int argc, char** argv) { return fanowalls::cli::run(argc, argv, std::cout, std::cerr); }
