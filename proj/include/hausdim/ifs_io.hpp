#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hausdim/ifs.hpp"

namespace hausdim {

// IFS description files. Line oriented, UTF-8, '#' starts a comment:
//
//   dim=2
//   seed=0,1,0,1
//   map ratio=0.5 rot=0 reflect=0 tx=0 ty=0 weight=0.25
//   ...
//
// `dim` and `seed` appear once each (seed lists lo,hi per axis). Every map
// needs ratio and tx, plus ty when dim=2. rot (radians) and reflect default
// to 0. Weights are optional but must be given on all maps or on none.

/// Throws ParseError carrying the offending line number.
Ifs parse_ifs(std::istream& in);
Ifs parse_ifs(std::string_view text);
Ifs load_ifs(const std::filesystem::path& path);

/// Writes the description format with 17 significant digits, so
/// parse_ifs(write_ifs(x)) reproduces x exactly.
void write_ifs(std::ostream& out, const Ifs& ifs);
std::string to_ifs_text(const Ifs& ifs);

}  // namespace hausdim
