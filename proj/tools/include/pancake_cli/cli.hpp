#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pancake::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kClassificationViolation = 3,
  kConjectureMismatch = 4,
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "12", "512M", "4GiB", ... Throws std::invalid_argument on malformed input.
std::uint64_t parse_byte_size(std::string_view text);

/// "7" or "3..9" (inclusive). Throws std::invalid_argument on malformed or empty ranges.
std::pair<int, int> parse_range(std::string_view text);

}  // namespace pancake::cli
