#include <iostream>
#include <string>
#include <vector>

#include "choicekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return choicekit::cli::run(args, std::cout, std::cerr);
}
