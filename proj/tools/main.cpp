#include "cli_app.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cyclopadic::cli::run(std::move(args), std::cout, std::cerr);
}
