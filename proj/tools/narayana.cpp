#include "narayana/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return narayana::run_cli(args, std::cout, std::cerr, narayana::threads_from_env(std::getenv("NARAYANA_THREADS")));
}
