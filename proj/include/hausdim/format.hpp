#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hausdim {

/// Shortest decimal that round-trips to the same double.
std::string format_shortest(double x);

/// Decimal with 17 significant digits (the CSV format).
std::string format_csv_real(double x);

/// Parses a full-string real; throws InvalidArgument on trailing garbage.
double parse_real(std::string_view text);

/// Parses a real, a power "base^exponent" (e.g. "3^-5") or a quotient "a/b".
double parse_number(std::string_view text);

/// Splits on a delimiter, trimming surrounding whitespace from each piece.
std::vector<std::string> split(std::string_view text, char delim);

}  // namespace hausdim
