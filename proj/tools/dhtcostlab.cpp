#include <iostream>

#include "dhtcost/cli.hpp"

int main(int argc, char** argv) {
  return dhtcost::cli::run(argc, argv, std::cout, std::cerr);
}
