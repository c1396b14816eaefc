#include <iostream>

#include "logcave/cli.hpp"

int main(int argc, char** argv) {
  return logcave::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
