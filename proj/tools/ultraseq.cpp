#include <iostream>

#include "ultraseq/cli.hpp"

int main(int argc, char** argv) {
  return ultraseq::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
