#include <iostream>
#include <string>
#include <vector>

#include "rickart/cli/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = rickart::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
