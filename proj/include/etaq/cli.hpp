#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace etaq {

enum class OutputFormat { text, json, latex };

struct CliConfig {
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> cache_path;
  std::uint64_t seed = 0;
  int precision_digits = 50;
  size_t max_terms = 0;  // 0: unlimited
};

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_resource = 3 };

// argv[0] is the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etaq
