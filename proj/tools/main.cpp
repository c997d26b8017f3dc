#include <iostream>
#include <string>
#include <vector>

#include "hw/cli.hpp"

int main(int argc, char** argv) {
  return hw::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
