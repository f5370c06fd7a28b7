#include <iostream>
#include <vector>

#include "floer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  floer::CliResult res = floer::run_cli(args);
  std::cout << res.text;
  return res.exit_code;
}
