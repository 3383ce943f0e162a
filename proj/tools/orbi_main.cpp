#include <iostream>
#include <string>
#include <vector>

#include "orbi/report.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto r = orbi::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
