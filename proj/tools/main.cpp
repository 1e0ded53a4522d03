#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
  std::optional<std::uint64_t> env_seed;
  if (const char* s = std::getenv("PFCYCLES_SEED")) {
    try {
      env_seed = std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed PFCYCLES_SEED\n";
    }
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = pfcycles::app::run_command_line(args, env_seed);

  // --out is honoured only for successful runs; errors always go to stdout.
  std::string out_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--out") out_path = args[i + 1];
  }
  if (result.exit_code == pfcycles::app::exit_code::ok && !out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return pfcycles::app::exit_code::failure;
    }
    file << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
