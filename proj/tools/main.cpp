#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  lwc::cli::Options options;
  options.color = std::getenv("LWC_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return lwc::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, options);
}
