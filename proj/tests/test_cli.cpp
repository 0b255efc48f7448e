#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "hausdim/cli.hpp"
#include "hausdim/csv.hpp"
#include "hausdim/format.hpp"

using namespace hausdim;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

// The <g> block of one render stage.
std::string stage(const std::string& svg, int depth) {
    const auto start = svg.find("data-depth=\"" + std::to_string(depth) + "\"");
    if (start == std::string::npos) return "";
    return svg.substr(start, svg.find("</g>", start) - start);
}

}  // namespace

TEST_CASE("list parsing") {
    CHECK(cli::parse_index_list("1..3,7") == std::vector<std::size_t>{1, 2, 3, 7});
    CHECK(cli::parse_index_list("4") == std::vector<std::size_t>{4});
    const auto deltas = cli::parse_number_list("3^-3..3^-5");
    REQUIRE(deltas.size() == 3);
    CHECK(deltas[0] == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
    CHECK(deltas[2] == doctest::Approx(1.0 / 243.0).epsilon(1e-15));
    CHECK(cli::parse_number_list("0.5,1/4") == std::vector<double>{0.5, 0.25});
    CHECK_THROWS(cli::parse_index_list("3..1"));
    CHECK_THROWS(cli::parse_number_list("x"));
}

TEST_CASE("simdim") {
    const auto cantor = run({"simdim", "--preset", "cantor", "--alpha", "1/3"});
    CHECK(cantor.code == cli::kSuccess);
    CHECK(std::regex_search(cantor.out, std::regex("^dimension: 0\\.630929753571457")));
    CHECK(cantor.out.find("osc: certified") != std::string::npos);
    CHECK(cantor.out.find("witness: (0,1)") != std::string::npos);

    const auto square = run({"simdim", "--preset", "square"});
    CHECK(square.code == cli::kSuccess);
    CHECK(square.out.rfind("dimension: 2\n", 0) == 0);
    CHECK(square.out.find("osc: certified") != std::string::npos);

    const auto file = write_temp("hausdim_overlapping.ifs",
                                 "dim=1\nseed=0,1\nmap ratio=0.5 tx=0\nmap ratio=0.5 tx=0.25\n");
    const auto overlap = run({"simdim", "--file", file.string()});
    CHECK(overlap.code == cli::kSuccess);
    CHECK(overlap.out.rfind("dimension: 1\n", 0) == 0);
    CHECK(overlap.out.find("OSC unverified") != std::string::npos);

    const auto csv = run({"simdim", "--preset", "cantor", "--format", "csv"});
    CHECK(csv.out.rfind("dimension,method,uncertainty,osc,witness\n", 0) == 0);
}

TEST_CASE("malformed IFS files report the line") {
    const auto file = write_temp("hausdim_bad.ifs", "dim=1\nseed=0,1\nmap ratio=0.5 tx=0 foo=1\n");
    const auto r = run({"simdim", "--file", file.string()});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(count_of(r.err, "line 3") == 1);
}

TEST_CASE("boxcount") {
    const auto cantor = run({"boxcount", "--preset", "cantor"});
    REQUIRE(cantor.code == cli::kSuccess);
    std::istringstream in(cantor.out);
    const auto table = read_box_count_csv(in);
    CHECK(table.series.entries.size() == 6);
    REQUIRE(table.slope);
    CHECK(*table.slope >= 0.61);
    CHECK(*table.slope <= 0.65);

    CHECK(run({"boxcount", "--preset", "cantor", "--deltas", "0.1"}).code == cli::kUsageError);

    // A single point has the same count at every scale.
    const auto file = write_temp("hausdim_point.ifs", "dim=1\nseed=0,1\nmap ratio=0.5 tx=0\n");
    const auto flat = run({"boxcount", "--file", file.string(), "--deltas", "0.5,0.25,0.125",
                           "--samples", "100"});
    CHECK(flat.code == cli::kNumericalFailure);
}

TEST_CASE("coversum") {
    const double s = std::log(2.0) / std::log(3.0);
    const auto at_dim = run({"coversum", "--preset", "cantor", "--s", format_shortest(s)});
    REQUIRE(at_dim.code == cli::kSuccess);
    std::istringstream in(at_dim.out);
    const auto rows = read_cover_sum_csv(in);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) CHECK(row.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto both = run({"coversum", "--preset", "cantor", "--depths", "1..8", "--s", "0.5,0.7"});
    std::istringstream in2(both.out);
    const auto rows2 = read_cover_sum_csv(in2);
    REQUIRE(rows2.size() == 16);
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(rows2[i].value > rows2[i - 1].value);
        CHECK(rows2[8 + i].value < rows2[8 + i - 1].value);
    }
    CHECK(run({"coversum", "--preset", "cantor", "--depths", "1..25"}).code == cli::kUsageError);
}

TEST_CASE("massdist") {
    const auto cantor = run({"massdist", "--preset", "cantor", "--samples", "5000"});
    CHECK(cantor.code == cli::kSuccess);
    std::istringstream in(cantor.out);
    const auto cert = read_certificate_csv(in);
    CHECK(cert.c <= 4.0 + 1e-9);
    CHECK(cert.samples == 5000);
    CHECK(cert.rng_seed == 42);

    const auto square = run({"massdist", "--preset", "square", "--samples", "5000"});
    CHECK(square.code == cli::kSuccess);
    std::istringstream sq(square.out);
    CHECK(read_certificate_csv(sq).c <= std::numbers::pi / 4.0 + 1e-9);

    const auto high = run({"massdist", "--preset", "cantor", "--s", "0.9", "--samples", "2000"});
    CHECK(high.code == cli::kSuccess);
    CHECK(high.out.rfind("s,c,samples", 0) == 0);

    const auto file = write_temp("hausdim_md.ifs", "dim=1\nseed=0,1\nmap ratio=0.5 tx=0\n");
    CHECK(run({"massdist", "--file", file.string()}).code == cli::kUsageError);
}

TEST_CASE("render") {
    const auto cantor = run({"render", "--preset", "cantor", "--depth", "5"});
    REQUIRE(cantor.code == cli::kSuccess);
    CHECK(count_of(cantor.out, "class=\"stage\"") == 6);
    const std::regex width("width=\"([0-9.e+-]+)\"");
    for (int n = 0; n <= 5; ++n) {
        const std::string g = stage(cantor.out, n);
        CHECK(count_of(g, "<rect") == (std::size_t{1} << n));
        for (std::sregex_iterator it(g.begin(), g.end(), width), end; it != end; ++it) {
            CHECK(std::stod((*it)[1]) == doctest::Approx(810.0 * std::pow(3.0, -n)).epsilon(1e-12));
        }
    }

    const auto square = run({"render", "--preset", "square", "--depth", "1"});
    CHECK(count_of(stage(square.out, 1), "<rect") == 4);
    CHECK(count_of(stage(square.out, 1), "width=\"405\" height=\"405\"") == 4);

    const auto bar = run({"render", "--preset", "cantor", "--depth", "0"});
    CHECK(count_of(bar.out, "class=\"stage\"") == 1);
    CHECK(stage(bar.out, 0).find("width=\"810\"") != std::string::npos);

    CHECK(run({"render", "--preset", "cantor", "--depth", "13"}).code == cli::kUsageError);
    CHECK(run({"render", "--preset", "square", "--depth", "7"}).code == cli::kUsageError);
}

TEST_CASE("export and --out") {
    const auto text = run({"export", "--preset", "square"});
    CHECK(text.code == cli::kSuccess);
    CHECK(text.out.rfind("dim=2\nseed=0,1,0,1\n", 0) == 0);

    const auto path = std::filesystem::temp_directory_path() / "hausdim_export.ifs";
    std::filesystem::remove(path);
    const auto r = run({"export", "--preset", "square", "--out", path.string()});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == text.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"nosuch"}).code == cli::kUsageError);
    CHECK(run({"simdim"}).code == cli::kUsageError);
    CHECK(run({"simdim", "--preset", "cantor", "--file", "x.ifs"}).code == cli::kUsageError);
    CHECK(run({"simdim", "--preset", "triangle"}).code == cli::kUsageError);
    CHECK(run({"simdim", "--preset", "cantor", "--alpha", "1.5"}).code == cli::kUsageError);
    CHECK(run({"simdim", "--file", "/nonexistent.ifs"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("every subcommand is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"simdim", "--preset", "cantor"},
        {"boxcount", "--preset", "cantor", "--samples", "20000"},
        {"coversum", "--preset", "cantor"},
        {"massdist", "--preset", "cantor", "--samples", "3000"},
        {"render", "--preset", "square", "--depth", "3"},
        {"export", "--preset", "cantor"},
    };
    for (const auto& cmd : commands) {
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
