#include <string>
#include <vector>

#include "tablescout/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tablescout::cli::run(args);
}
