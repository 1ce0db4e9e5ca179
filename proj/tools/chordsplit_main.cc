#include <iostream>

#include "chordsplit/cli.h"

int main(int argc, char** argv) {
  return chordsplit::RunCli(argc, argv, std::cin, std::cout, std::cerr);
}
