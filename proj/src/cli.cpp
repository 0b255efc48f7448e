#include "hausdim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hausdim/covering.hpp"
#include "hausdim/csv.hpp"
#include "hausdim/dimension.hpp"
#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"
#include "hausdim/ifs.hpp"
#include "hausdim/ifs_io.hpp"
#include "hausdim/measure.hpp"
#include "hausdim/render.hpp"

namespace hausdim::cli {

namespace {

enum class Source { cantor, square, file };

struct RunConfig {
    std::string preset;
    std::string alpha;
    std::string file;
    std::string depths;
    std::string deltas;
    std::string s;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    double tolerance = 1e-10;
    std::string out;
    std::string format;
};

struct LoadedIfs {
    Source source;
    double alpha = 0.0;
    Ifs ifs;
};

LoadedIfs load(const RunConfig& cfg) {
    if (cfg.preset.empty() == cfg.file.empty()) {
        throw InvalidArgument("give exactly one IFS source: --preset or --file");
    }
    if (!cfg.file.empty()) {
        if (!cfg.alpha.empty()) throw InvalidArgument("--alpha only applies to --preset cantor");
        try {
            return {Source::file, 0.0, load_ifs(cfg.file)};
        } catch (const ParseError& e) {
            throw InvalidArgument(cfg.file + ": " + e.what());
        }
    }
    if (cfg.preset == "cantor") {
        const double alpha = cfg.alpha.empty() ? 1.0 / 3.0 : parse_number(cfg.alpha);
        return {Source::cantor, alpha, cantor_preset(alpha)};
    }
    if (!cfg.alpha.empty()) throw InvalidArgument("--alpha only applies to --preset cantor");
    return {Source::square, 0.0, square_preset()};
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* f : allowed) {
        if (cfg.format == f) return;
    }
    throw InvalidArgument("--format " + cfg.format + " is not available for this command");
}

bool is_cantor_third(const LoadedIfs& l) {
    return l.source == Source::cantor && std::abs(l.alpha - 1.0 / 3.0) <= 1e-12;
}

std::string cmd_simdim(const RunConfig& cfg) {
    require_format(cfg, {"plain", "csv"});
    const LoadedIfs l = load(cfg);
    const DimensionEstimate est = hausdorff_dimension_via_similarity(l.ifs, l.ifs.seed_box());
    const bool certified = is_certified(est);

    std::ostringstream out;
    if (cfg.format == "csv") {
        out << "dimension,method,uncertainty,osc,witness\n"
            << format_csv_real(est.value) << ',' << to_string(est.method) << ','
            << format_csv_real(est.uncertainty) << ',' << (certified ? "certified" : "unverified")
            << ',' << est.meta("witness").value_or("") << '\n';
        return out.str();
    }
    out << "dimension: " << format_shortest(est.value) << '\n'
        << "method: " << to_string(est.method) << '\n'
        << "uncertainty: " << format_shortest(est.uncertainty) << '\n';
    if (certified) {
        out << "osc: certified\n"
            << "witness: " << *est.meta("witness") << '\n';
    } else {
        out << "osc: unverified\n";
        if (auto v = est.meta("violation")) out << "violation: " << *v << '\n';
        if (auto c = est.meta("clamped_from")) {
            out << "note: similarity dimension " << *c << " clamped to the ambient dimension\n";
        }
        out << "warning: OSC unverified; the value is only an upper bound on the Hausdorff "
               "dimension\n";
    }
    return out.str();
}

std::string cmd_boxcount(const RunConfig& cfg) {
    require_format(cfg, {"csv", "plain"});
    const LoadedIfs l = load(cfg);
    std::string deltas = cfg.deltas;
    if (deltas.empty()) {
        if (l.source == Source::file) throw InvalidArgument("--deltas is required with --file");
        deltas = l.source == Source::square ? "2^-2..2^-7" : "3^-3..3^-8";
    }
    const auto delta_list = parse_number_list(deltas);
    if (delta_list.size() < 3) throw InvalidArgument("box counting needs at least three --deltas");
    const std::size_t samples =
        cfg.samples.value_or(l.source == Source::square ? 1'000'000 : 100'000);
    const std::uint64_t seed = cfg.seed.value_or(l.source == Source::square ? 7 : 42);

    const auto points = chaos_game(l.ifs, samples, seed);
    const auto series = box_count_series(points, delta_list);
    const auto fit = boxcount_dimension(series);
    std::ostringstream out;
    write_box_count_csv(out, series, fit);
    return out.str();
}

std::string cmd_coversum(const RunConfig& cfg) {
    require_format(cfg, {"csv"});
    const LoadedIfs l = load(cfg);
    const auto depths = parse_index_list(cfg.depths.empty() ? "1..8" : cfg.depths);
    for (std::size_t d : depths) {
        if (!cell_count(l.ifs.size(), d)) {
            throw CapExceeded("depth " + std::to_string(d) + " exceeds the cap of " +
                              std::to_string(kMaxCells) + " cells");
        }
    }
    std::vector<double> exponents;
    if (cfg.s.empty()) {
        exponents.push_back(similarity_dimension(l.ifs).value);
    } else {
        exponents = parse_number_list(cfg.s);
    }

    std::vector<Cover> covers;
    for (std::size_t d : depths) covers.push_back(natural_cover(l.ifs, d));
    std::vector<CoverSum> rows;
    for (double s : exponents) {
        for (std::size_t i = 0; i < depths.size(); ++i) {
            CoverSum row = cover_sum(covers[i], s);
            row.depth_or_delta = static_cast<double>(depths[i]);
            rows.push_back(row);
        }
    }
    std::ostringstream out;
    write_cover_sum_csv(out, rows);
    return out.str();
}

struct Verdict {
    std::string text;
    bool pass = true;
};

std::string cmd_massdist(const RunConfig& cfg, Verdict& verdict) {
    require_format(cfg, {"csv"});
    const LoadedIfs l = load(cfg);
    if (l.source == Source::file) {
        throw Unsupported("massdist supports --preset cantor or --preset square only");
    }
    const auto range = parse_number_list(cfg.deltas.empty() ? "1e-6,1e-1" : cfg.deltas);
    if (range.size() != 2) throw InvalidArgument("--deltas takes delta_min,delta_max");
    const std::size_t samples = cfg.samples.value_or(100'000);
    const std::uint64_t seed = cfg.seed.value_or(42);

    MddCertificate cert;
    std::optional<double> target;
    if (l.source == Source::cantor) {
        const double s_star = similarity_dimension(l.ifs).value;
        const double s = cfg.s.empty() ? s_star : parse_number(cfg.s);
        const SelfSimilarMeasure mu(l.ifs);
        cert = mdd_check(upper_mass(mu), l.ifs.seed_box(), s, {range[0], range[1]}, samples, seed);
        if (is_cantor_third(l) && std::abs(s - s_star) <= 1e-12) target = 4.0;
    } else {
        const double s = cfg.s.empty() ? 2.0 : parse_number(cfg.s);
        cert = mdd_check(lebesgue_square_mass, l.ifs.seed_box(), s, {range[0], range[1]}, samples,
                         seed);
        if (s == 2.0) target = std::numbers::pi / 4.0;
    }

    if (target) {
        verdict.pass = cert.c <= *target + 1e-9;
        verdict.text = std::string(verdict.pass ? "pass" : "fail") + ": c = " +
                       format_shortest(cert.c) + (verdict.pass ? " <= " : " > ") +
                       format_shortest(*target) + " (+1e-9)";
    } else {
        verdict.text = "info: no analytic constant for this configuration; certificate reported only";
    }
    std::ostringstream out;
    write_certificate_csv(out, cert);
    return out.str();
}

std::string cmd_render(const RunConfig& cfg) {
    require_format(cfg, {"svg"});
    const LoadedIfs l = load(cfg);
    const auto depths = parse_index_list(cfg.depths.empty() ? "5" : cfg.depths);
    if (depths.size() != 1) throw InvalidArgument("render takes a single --depth");
    return render_svg(l.ifs, depths.front());
}

std::string cmd_export(const RunConfig& cfg) {
    require_format(cfg, {"plain"});
    return to_ifs_text(load(cfg).ifs);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool sampling) {
    sub->add_option("--preset", cfg.preset, "Built-in system")
        ->check(CLI::IsMember({"cantor", "square"}));
    sub->add_option("--alpha", cfg.alpha, "Removed middle fraction for the Cantor preset");
    sub->add_option("--file", cfg.file, "IFS description file");
    sub->add_option("--out", cfg.out, "Write the report to this path");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg", "plain"}));
    if (sampling) {
        sub->add_option("--samples", cfg.samples, "Number of random samples");
        sub->add_option("--seed", cfg.seed, "RNG seed");
    }
}

}  // namespace

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    const auto to_index = [](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer: '" + s + "'");
        }
        if (used != s.size() || v < 0) throw InvalidArgument("not a nonnegative integer: '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    for (const auto& item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_index(item));
            continue;
        }
        const std::size_t a = to_index(item.substr(0, dots));
        const std::size_t b = to_index(item.substr(dots + 2));
        if (a > b) throw InvalidArgument("empty range '" + item + "'");
        for (std::size_t d = a; d <= b; ++d) out.push_back(d);
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number(item));
            continue;
        }
        const auto lhs = item.substr(0, dots);
        const auto rhs = item.substr(dots + 2);
        const auto lc = lhs.find('^');
        const auto rc = rhs.find('^');
        if (lc == std::string::npos || rc == std::string::npos ||
            lhs.substr(0, lc) != rhs.substr(0, rc)) {
            throw InvalidArgument("ranges must look like B^E1..B^E2, got '" + item + "'");
        }
        const double base = parse_real(lhs.substr(0, lc));
        const double e1 = parse_real(lhs.substr(lc + 1));
        const double e2 = parse_real(rhs.substr(rc + 1));
        if (e1 != std::floor(e1) || e2 != std::floor(e2)) {
            throw InvalidArgument("range exponents must be integers in '" + item + "'");
        }
        const double step = e2 >= e1 ? 1.0 : -1.0;
        for (double e = e1;; e += step) {
            out.push_back(std::pow(base, e));
            if (e == e2) break;
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hausdorff and similarity dimensions of self-similar sets", "hausdim"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto* simdim = app.add_subcommand("simdim", "Similarity dimension with OSC certification");
    add_common(simdim, cfg, false);

    auto* boxcount = app.add_subcommand("boxcount", "Box-counting regression on a chaos-game cloud");
    add_common(boxcount, cfg, true);
    boxcount->add_option("--deltas", cfg.deltas, "Grid sizes, e.g. 3^-3..3^-8");

    auto* coversum = app.add_subcommand("coversum", "Cover sums of the natural covers");
    add_common(coversum, cfg, false);
    coversum->add_option("--depths,--depth", cfg.depths, "Depths, e.g. 1..8");
    coversum->add_option("--s", cfg.s, "Exponents (default: similarity dimension)");

    auto* massdist = app.add_subcommand("massdist", "Mass distribution principle certificate");
    add_common(massdist, cfg, true);
    massdist->add_option("--s", cfg.s, "Test exponent");
    massdist->add_option("--deltas", cfg.deltas, "delta_min,delta_max");

    auto* render = app.add_subcommand("render", "SVG of the construction stages");
    add_common(render, cfg, false);
    render->add_option("--depth,--depths", cfg.depths, "Last stage to draw");

    auto* exporter = app.add_subcommand("export", "Print a system in the IFS file format");
    add_common(exporter, cfg, false);

    for (auto* sub : {simdim, boxcount, coversum, massdist, render, exporter}) {
        sub->add_option("--tolerance", cfg.tolerance, "Numerical tolerance")
            ->check(CLI::PositiveNumber);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::string report;
    Verdict verdict;
    try {
        if (simdim->parsed()) {
            report = cmd_simdim(cfg);
        } else if (boxcount->parsed()) {
            report = cmd_boxcount(cfg);
        } else if (coversum->parsed()) {
            report = cmd_coversum(cfg);
        } else if (massdist->parsed()) {
            report = cmd_massdist(cfg, verdict);
        } else if (render->parsed()) {
            report = cmd_render(cfg);
        } else {
            report = cmd_export(cfg);
        }
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (cfg.out.empty()) {
        out << report;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!(file << report)) {
            err << "error: cannot write '" << cfg.out << "'\n";
            return kUsageError;
        }
    }
    if (!verdict.text.empty()) err << verdict.text << '\n';
    return verdict.pass ? kSuccess : kNumericalFailure;
}

}  // namespace hausdim::cli
