// Command-line front end: a single positional config file plus --key value
// overrides mirroring the config schema.

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "gdec/config.hpp"
#include "gdec/runners.hpp"

namespace {

void print_usage(std::ostream& out) {
  out << "usage: gdec [config-file] [--key value ...]\n"
         "\n"
         "Flags mirror config keys and override file values; the config file\n"
         "is optional when every required key comes from flags.\n"
         "Environment: GDEC_OUTPUT_DIR relocates default output files.\n"
         "\n"
         "config keys:\n"
      << gdec::config_schema();
}

}  // namespace

int main(int argc, char** argv) {
  std::string config_path;
  std::vector<gdec::ConfigOverride> overrides;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      print_usage(std::cout);
      return 0;
    }
    if (arg.rfind("--", 0) == 0) {
      if (i + 1 >= argc) {
        std::cerr << "gdec: flag " << arg << " needs a value\n";
        return 2;
      }
      overrides.emplace_back(arg.substr(2), argv[++i]);
    } else if (config_path.empty()) {
      config_path = arg;
    } else {
      std::cerr << "gdec: unexpected extra positional argument '" << arg
                << "'\n";
      return 2;
    }
  }

  try {
    const gdec::RunConfig cfg =
        config_path.empty()
            ? gdec::parse_config("", overrides)
            : gdec::parse_config_file(config_path, overrides);
    return gdec::run_mode(cfg, std::cout);
  } catch (const gdec::ConfigError& e) {
    std::cerr << "gdec: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gdec: " << e.what() << "\n";
    return 3;
  }
}
