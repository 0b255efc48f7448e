#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hausdim::cli {

/// Process exit statuses; stable for scripting.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNumericalFailure = 2,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands "a..b" integer ranges and comma lists, e.g. "1..3,7" -> 1,2,3,7.
std::vector<std::size_t> parse_index_list(const std::string& text);

/// Comma list of numbers; an item "B^E1..B^E2" expands to B^E for the
/// integer exponents from E1 to E2 in order.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace hausdim::cli
