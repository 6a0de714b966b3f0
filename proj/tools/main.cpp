#include <iostream>

#include "cdens/cli.hpp"

int main(int argc, char** argv) {
  return cdens::run(argc, argv, std::cout, std::cerr);
}
