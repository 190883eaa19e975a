#include <iostream>
#include <string>
#include <vector>

#include "klasika/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const klasika::cli::CommandResult r = klasika::cli::run(args);
  std::cout << r.stdout_text();
  std::cerr << r.stderr_text();
  return r.exit_code;
}
