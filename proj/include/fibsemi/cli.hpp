#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fibsemi::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kOracleInfeasible = 3,
  kIoFailure = 4,
};

/// "3..8", "3,5,7" or a mix such as "3..5,9".
std::vector<int> parse_int_list(const std::string& text);

/// Value of FIBSEMI_ORACLE_MAX_BITS, or the default when unset.
std::uint64_t oracle_max_bits_from_env();

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibsemi::cli
