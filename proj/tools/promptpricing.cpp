#include <iostream>

#include "promptpricing/cli/app.hpp"

int main(int argc, char** argv) {
  return promptpricing::cli::run(argc, argv, std::cout, std::cerr);
}
