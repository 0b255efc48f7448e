#include "hausdim/ifs_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"

namespace hausdim {

namespace {

struct MapLine {
    std::size_t line = 0;
    std::map<std::string, std::string, std::less<>> fields;
};

std::string strip_comment(const std::string& raw) {
    const auto hash = raw.find('#');
    std::string s = raw.substr(0, hash);
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double number_at(std::size_t line, std::string_view key, std::string_view text) {
    try {
        return parse_real(text);
    } catch (const InvalidArgument&) {
        throw ParseError(line, "value of '" + std::string(key) + "' is not a number: '" +
                                   std::string(text) + "'");
    }
}

}  // namespace

Ifs parse_ifs(std::istream& in) {
    std::optional<std::size_t> dim;
    std::optional<std::vector<double>> seed;
    std::size_t seed_line = 0;
    std::vector<MapLine> map_lines;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = strip_comment(raw);
        if (s.empty()) continue;

        if (s.rfind("map", 0) == 0 && (s.size() == 3 || s[3] == ' ' || s[3] == '\t')) {
            MapLine m{line, {}};
            std::istringstream tokens(s.substr(3));
            std::string tok;
            while (tokens >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos || eq == 0) {
                    throw ParseError(line, "expected key=value, got '" + tok + "'");
                }
                auto key = tok.substr(0, eq);
                static const std::vector<std::string> known{"ratio", "rot",   "reflect",
                                                            "tx",    "ty",    "weight"};
                if (std::find(known.begin(), known.end(), key) == known.end()) {
                    throw ParseError(line, "unknown map field '" + key + "'");
                }
                if (!m.fields.emplace(key, tok.substr(eq + 1)).second) {
                    throw ParseError(line, "duplicate map field '" + key + "'");
                }
            }
            map_lines.push_back(std::move(m));
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "unrecognised line '" + s + "'");
        const std::string key = strip_comment(s.substr(0, eq));
        const std::string value = strip_comment(s.substr(eq + 1));
        if (key == "dim") {
            if (dim) throw ParseError(line, "duplicate 'dim'");
            if (value != "1" && value != "2") throw ParseError(line, "dim must be 1 or 2");
            dim = value == "1" ? 1 : 2;
        } else if (key == "seed") {
            if (seed) throw ParseError(line, "duplicate 'seed'");
            std::vector<double> v;
            for (const auto& piece : split(value, ',')) v.push_back(number_at(line, "seed", piece));
            seed = std::move(v);
            seed_line = line;
        } else {
            throw ParseError(line, "unknown header '" + key + "'");
        }
    }

    if (!dim) throw ParseError(line, "missing 'dim=' header");
    if (!seed) throw ParseError(line, "missing 'seed=' header");
    if (map_lines.empty()) throw ParseError(line, "no 'map' lines");
    if (seed->size() != 2 * *dim) {
        throw ParseError(seed_line, "seed needs " + std::to_string(2 * *dim) + " numbers");
    }

    AxisBox seed_box;
    try {
        seed_box = *dim == 1 ? AxisBox::interval((*seed)[0], (*seed)[1])
                             : AxisBox::rect((*seed)[0], (*seed)[1], (*seed)[2], (*seed)[3]);
    } catch (const Error& e) {
        throw ParseError(seed_line, e.what());
    }

    std::vector<Similitude> maps;
    std::vector<double> weights;
    for (const auto& m : map_lines) {
        const auto get = [&](std::string_view key) -> std::optional<double> {
            const auto it = m.fields.find(key);
            if (it == m.fields.end()) return std::nullopt;
            return number_at(m.line, key, it->second);
        };
        const auto ratio = get("ratio");
        const auto tx = get("tx");
        const auto ty = get("ty");
        if (!ratio) throw ParseError(m.line, "map needs ratio=");
        if (!tx) throw ParseError(m.line, "map needs tx=");
        if (*dim == 2 && !ty) throw ParseError(m.line, "map needs ty= when dim=2");
        if (*dim == 1 && ty) throw ParseError(m.line, "ty= is not allowed when dim=1");
        const double rot = get("rot").value_or(0.0);
        const double reflect = get("reflect").value_or(0.0);
        if (reflect != 0.0 && reflect != 1.0) throw ParseError(m.line, "reflect must be 0 or 1");
        try {
            maps.emplace_back(*ratio, rot, reflect == 1.0,
                              *dim == 1 ? Point{*tx} : Point{*tx, *ty});
        } catch (const Error& e) {
            throw ParseError(m.line, e.what());
        }
        const auto w = get("weight");
        if (w.has_value() != map_lines.front().fields.contains("weight")) {
            throw ParseError(m.line, "weights must be given on every map or on none");
        }
        if (w) weights.push_back(*w);
    }

    try {
        return Ifs(std::move(maps), std::move(weights), seed_box);
    } catch (const Error& e) {
        throw ParseError(map_lines.front().line, e.what());
    }
}

Ifs parse_ifs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_ifs(in);
}

Ifs load_ifs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open IFS file '" + path.string() + "'");
    return parse_ifs(in);
}

void write_ifs(std::ostream& out, const Ifs& ifs) {
    out << "dim=" << ifs.dim() << '\n';
    out << "seed=";
    const auto& seed = ifs.seed_box();
    for (std::size_t i = 0; i < ifs.dim(); ++i) {
        if (i > 0) out << ',';
        out << format_csv_real(seed.lo(i)) << ',' << format_csv_real(seed.hi(i));
    }
    out << '\n';
    for (std::size_t k = 0; k < ifs.size(); ++k) {
        const auto& f = ifs.maps()[k];
        out << "map ratio=" << format_csv_real(f.ratio())
            << " rot=" << format_csv_real(f.rotation()) << " reflect=" << (f.reflect() ? 1 : 0)
            << " tx=" << format_csv_real(f.translation()[0]);
        if (ifs.dim() == 2) out << " ty=" << format_csv_real(f.translation()[1]);
        out << " weight=" << format_csv_real(ifs.weights()[k]) << '\n';
    }
}

std::string to_ifs_text(const Ifs& ifs) {
    std::ostringstream out;
    write_ifs(out, ifs);
    return out.str();
}

}  // namespace hausdim
