#include <unistd.h>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return grossone::cli::run_command(args, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
