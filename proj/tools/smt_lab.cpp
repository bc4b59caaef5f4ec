#include <iostream>
#include <string>
#include <vector>

#include "smt_lab_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smt::cli::run_smt_lab(args, std::cout, std::cerr);
}
