#include <iostream>
#include <string>
#include <vector>

#include "eqav/cli.hpp"

int main(int argc, char** argv) {
  return eqav::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
