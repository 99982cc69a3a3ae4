#include "liealg_cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return liealg::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "liealg: internal error: " << e.what() << "\n";
    return liealg::cli::kFailure;
  }
}
