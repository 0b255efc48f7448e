#include "hausdim/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "hausdim/errors.hpp"

namespace hausdim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_shortest(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string format_csv_real(double x) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

double parse_real(std::string_view text) {
    const auto t = trim(text);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    // from_chars rejects a leading '+', which people do write.
    if (begin != end && *begin == '+') ++begin;
    const auto res = std::from_chars(begin, end, value);
    if (t.empty() || res.ec != std::errc() || res.ptr != end) {
        throw InvalidArgument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

double parse_number(std::string_view text) {
    const auto t = trim(text);
    if (const auto caret = t.find('^'); caret != std::string_view::npos) {
        return std::pow(parse_real(t.substr(0, caret)), parse_real(t.substr(caret + 1)));
    }
    if (const auto slash = t.find('/'); slash != std::string_view::npos) {
        return parse_real(t.substr(0, slash)) / parse_real(t.substr(slash + 1));
    }
    return parse_real(t);
}

std::vector<std::string> split(std::string_view text, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(delim, start);
        out.emplace_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace hausdim
