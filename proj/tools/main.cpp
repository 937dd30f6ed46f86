#include <iostream>
#include <string>
#include <vector>

#include "sqstable/cli/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqs::cli::main_entry(args, std::cout, std::cerr);
}
