#include <string>
#include <vector>

#include "barbell/cli.hpp"

int main(int argc, char** argv) {
  return barbell::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
