#include <iostream>
#include <string>
#include <vector>

#include "pstr/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const pstr::CommandResult r = pstr::dispatch(args);
  // Errors go to stderr in text mode; JSON always lands on stdout.
  std::ostream& out = (r.exit_code == 0 || r.as_json) ? std::cout : std::cerr;
  out << r.render();
  return r.exit_code;
}
