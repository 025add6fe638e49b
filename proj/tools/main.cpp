#include "symcd_cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  symcd::cli::Options opts;
  opts.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return symcd::cli::dispatch(args, std::cout, std::cerr, opts);
}
