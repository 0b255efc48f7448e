// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path/to/hausdim]   (the binary enables process-level
// determinism runs in criterion 13)

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hausdim/cli.hpp"
#include "hausdim/covering.hpp"
#include "hausdim/dimension.hpp"
#include "hausdim/measure.hpp"
#include "oracles.hpp"

using namespace hausdim;

namespace {

const double kCantorDim = std::log(2.0) / std::log(3.0);

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(17);
    o << x;
    return o.str();
}

Result similarity_cantor() {
    Result r;
    const Ifs cantor = cantor_preset(1.0 / 3.0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto est = hausdorff_dimension_via_similarity(cantor, AxisBox::interval(0.0, 1.0));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.require(std::abs(est.value - 0.6309297535714574) <= 1e-12, "value " + fmt(est.value));
    r.require(is_certified(est), "not certified");
    r.require(est.meta("witness") == "(0,1)", "witness");
    r.require(ms < 1.0, "runtime " + fmt(ms) + " ms");
    r.detail = r.pass ? "dim = " + fmt(est.value) + ", witness (0,1), " + fmt(ms) + " ms" : r.detail;
    return r;
}

Result similarity_square() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const auto est = hausdorff_dimension_via_similarity(square_preset(), AxisBox::rect(0.0, 1.0, 0.0, 1.0));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.require(est.value == 2.0, "value " + fmt(est.value));
    r.require(is_certified(est), "not certified");
    r.require(est.meta("witness") == "(0,1)x(0,1)", "witness");
    r.require(ms < 1.0, "runtime " + fmt(ms) + " ms");
    r.detail = r.pass ? "dim = 2, witness (0,1)x(0,1), " + fmt(ms) + " ms" : r.detail;
    return r;
}

Result moran_unequal() {
    Result r;
    const double oracle_value = oracle::golden_moran_root();
    const auto est = similarity_dimension(std::vector<double>{0.5, 0.25});
    const double err = std::abs(est.value - oracle_value);
    r.require(err <= 1e-10, "error " + fmt(err));
    r.require(std::abs(oracle_value - oracle::golden_moran_closed_form()) <= 1e-14, "oracle disagrees");
    r.detail = r.pass ? "s = " + fmt(est.value) + ", |s - oracle| = " + fmt(err) : r.detail;
    return r;
}

Result phase_transition() {
    Result r;
    const Ifs cantor = cantor_preset(1.0 / 3.0);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> at, above, below;
    for (std::size_t d = 1; d <= 12; ++d) {
        const Cover c = natural_cover(cantor, d);
        at.push_back(cover_sum(c, kCantorDim).value);
        above.push_back(cover_sum(c, kCantorDim + 0.05).value);
        below.push_back(cover_sum(c, kCantorDim - 0.05).value);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    double worst = 0.0;
    for (double v : at) worst = std::max(worst, rel_err(v, 1.0));
    r.require(worst <= 1e-12, "sum at s* off by " + fmt(worst));
    for (std::size_t i = 1; i < at.size(); ++i) {
        r.require(above[i] <= 0.95 * above[i - 1], "s*+0.05 not decreasing by 5% at depth " + std::to_string(i + 1));
        r.require(below[i] > below[i - 1], "s*-0.05 not increasing at depth " + std::to_string(i + 1));
    }
    r.require(ms < 100.0, "runtime " + fmt(ms) + " ms");
    r.detail = r.pass ? "max rel err at s* " + fmt(worst) + ", " + fmt(ms) + " ms" : r.detail;
    return r;
}

Result square_upper_bound() {
    Result r;
    double worst = 0.0;
    for (std::size_t n : {10u, 100u}) {
        std::vector<CoverElement> cells;
        const double side = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                cells.emplace_back(AxisBox::rect(i * side, (i + 1) * side, j * side, (j + 1) * side));
            }
        }
        const Cover grid(std::move(cells));
        for (double s : {1.5, 2.0, 2.5}) {
            const double expected = std::pow(std::sqrt(2.0), s) * std::pow(static_cast<double>(n), 2.0 - s);
            const double err = rel_err(cover_sum(grid, s).value, expected);
            worst = std::max(worst, err);
            r.require(err <= 1e-10, "N=" + std::to_string(n) + " s=" + fmt(s) + " rel err " + fmt(err));
        }
    }
    r.detail = r.pass ? "max rel err " + fmt(worst) : r.detail;
    return r;
}

Result sandwich() {
    Result r;
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<CoverElement> elems;
        const bool planar = trial % 2 == 1;
        const int count = 1 + static_cast<int>(u(gen) * 50);
        for (int k = 0; k < count; ++k) {
            const double a = u(gen), w = u(gen), b = u(gen), h = u(gen);
            elems.emplace_back(planar ? AxisBox::rect(a, a + w, b, b + h) : AxisBox::interval(a, a + w));
        }
        const Cover boxes(std::move(elems));
        const Cover balls = cover_to_balls(boxes);
        for (double s : {0.5, 1.0, 2.0}) {
            const double err = rel_err(cover_sum(balls, s).value, std::pow(2.0, s) * cover_sum(boxes, s).value);
            worst = std::max(worst, err);
            r.require(err <= 1e-12, "trial " + std::to_string(trial) + " rel err " + fmt(err));
        }
    }
    r.detail = r.pass ? "100 covers, max rel err " + fmt(worst) : r.detail;
    return r;
}

Result mass_cantor() {
    Result r;
    const SelfSimilarMeasure mu(cantor_preset(1.0 / 3.0));
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = mdd_check(upper_mass(mu), AxisBox::interval(0.0, 1.0), kCantorDim, {1e-6, 1e-1},
                                100000, 42);
    const auto est = lower_bound_dimension(cert);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(cert.c <= 4.0 + 1e-9, "c = " + fmt(cert.c));
    r.require(est.value >= kCantorDim, "bound " + fmt(est.value));
    r.require(est.meta("bound") == "lower", "not a lower bound");
    r.require(cert.implied_measure_lower_bound >= 1.0 / cert.c, "H^s bound below 1/c");
    r.require(sec < 10.0, "runtime " + fmt(sec) + " s");
    r.detail = r.pass ? "c = " + fmt(cert.c) + " <= 4, H^s >= " + fmt(cert.implied_measure_lower_bound) +
                            ", " + fmt(sec) + " s"
                      : r.detail;
    return r;
}

Result mass_square() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = mdd_check(lebesgue_square_mass, AxisBox::rect(0.0, 1.0, 0.0, 1.0), 2.0, {1e-6, 1e-1},
                                100000, 42);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(cert.c <= std::numbers::pi / 4.0 + 1e-9, "c = " + fmt(cert.c));
    r.require(sec < 5.0, "runtime " + fmt(sec) + " s");
    r.detail = r.pass ? "c = " + fmt(cert.c) + " <= pi/4, " + fmt(sec) + " s" : r.detail;
    return r;
}

Result cylinder_masses() {
    Result r;
    const Ifs cantor = cantor_preset(1.0 / 3.0);
    const SelfSimilarMeasure mu(cantor);
    for (std::size_t n = 0; n <= 10; ++n) {
        const double expected = std::ldexp(1.0, -static_cast<int>(n));
        double total = 0.0;
        for (const auto& cell : refine(cantor, n).cells) {
            const auto b = mu_box(mu, cell.box, n + 2);
            r.require(b.lower == expected && b.upper == expected,
                      "depth " + std::to_string(n) + " cell bracket [" + fmt(b.lower) + ", " + fmt(b.upper) + "]");
            total += b.lower;
        }
        r.require(total == 1.0, "depth " + std::to_string(n) + " total " + fmt(total));
    }
    r.detail = r.pass ? "depths 0..10 exact, totals 1" : r.detail;
    return r;
}

Result box_counting() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<double> cantor_deltas;
    for (int n = 3; n <= 8; ++n) cantor_deltas.push_back(std::pow(3.0, -n));
    const auto cantor_pts = chaos_game(cantor_preset(1.0 / 3.0), 100000, 42);
    const double cantor_slope = boxcount_dimension(cantor_pts, cantor_deltas).value;
    r.require(cantor_slope >= 0.61 && cantor_slope <= 0.65, "cantor slope " + fmt(cantor_slope));

    std::vector<double> square_deltas;
    for (int n = 2; n <= 7; ++n) square_deltas.push_back(std::ldexp(1.0, -n));
    const auto square_pts = chaos_game(square_preset(), 1000000, 7);
    const double square_slope = boxcount_dimension(square_pts, square_deltas).value;
    r.require(square_slope >= 1.9 && square_slope <= 2.05, "square slope " + fmt(square_slope));

    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // Analytic counts: 2^n cells for the Cantor set, the full grid for the square.
    std::vector<double> x, yc, ys;
    for (int n = 3; n <= 8; ++n) {
        x.push_back(n * std::log(3.0));
        yc.push_back(n * std::log(2.0));
    }
    std::vector<double> xs;
    for (int n = 2; n <= 7; ++n) {
        xs.push_back(n * std::log(2.0));
        ys.push_back(2.0 * n * std::log(2.0));
    }
    r.require(std::abs(oracle::ols_slope(x, yc) - kCantorDim) <= 1e-12, "cantor oracle");
    r.require(std::abs(oracle::ols_slope(xs, ys) - 2.0) <= 1e-12, "square oracle");
    r.require(sec < 30.0, "runtime " + fmt(sec) + " s");
    r.detail = r.pass ? "cantor slope " + fmt(cantor_slope) + ", square slope " + fmt(square_slope) + ", " +
                            fmt(sec) + " s"
                      : r.detail;
    return r;
}

Result normalization() {
    Result r;
    const std::array<double, 4> known{1.0, 2.0, std::numbers::pi, 4.0 * std::numbers::pi / 3.0};
    for (int s = 0; s <= 3; ++s) {
        const double a = alpha_constant(s);
        r.require(rel_err(a, oracle::alpha_by_hand(s)) <= 1e-12, "s=" + std::to_string(s) + " vs oracle");
        r.require(rel_err(a, known[s]) <= 1e-12, "s=" + std::to_string(s) + " = " + fmt(a));
    }
    r.detail = r.pass ? "alpha(0..3) = 1, 2, pi, 4pi/3" : r.detail;
    return r;
}

Result powered_system_check() {
    Result r;
    const Ifs cantor = cantor_preset(1.0 / 3.0);
    const double base = similarity_dimension(cantor).value;
    for (std::size_t k = 1; k <= 4; ++k) {
        const Ifs p = powered_system(cantor, k);
        const double v = similarity_dimension(p).value;
        r.require(p.size() == (std::size_t{1} << k), "k=" + std::to_string(k) + " map count");
        r.require(v == base, "k=" + std::to_string(k) + " gives " + fmt(v) + " vs " + fmt(base));
    }
    r.detail = r.pass ? "k = 1..4 all equal " + fmt(base) : r.detail;
    return r;
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return out + "\nstatus " + std::to_string(status);
}

Result determinism(const std::string& binary) {
    Result r;
    const std::vector<std::vector<std::string>> commands{
        {"simdim", "--preset", "cantor"},
        {"simdim", "--preset", "square", "--format", "csv"},
        {"boxcount", "--preset", "cantor"},
        {"boxcount", "--preset", "square", "--samples", "100000"},
        {"coversum", "--preset", "cantor", "--s", "0.5,0.7"},
        {"massdist", "--preset", "cantor", "--samples", "20000"},
        {"massdist", "--preset", "square", "--samples", "20000"},
        {"render", "--preset", "cantor", "--depth", "5"},
        {"render", "--preset", "square", "--depth", "3"},
        {"export", "--preset", "square"},
    };
    for (const auto& cmd : commands) {
        std::string joined;
        for (const auto& a : cmd) joined += " " + a;

        std::array<std::string, 2> outs;
        for (auto& o : outs) {
            std::ostringstream out, err;
            const int code = cli::run(cmd, out, err);
            o = out.str() + "\x1f" + err.str() + "\x1f" + std::to_string(code);
        }
        r.require(outs[0] == outs[1], "in-process:" + joined);

        if (!binary.empty()) {
            const std::string line = "'" + binary + "'" + joined + " 2>&1";
            r.require(capture(line) == capture(line), "process:" + joined);
        }
    }
    r.detail = r.pass ? std::to_string(commands.size()) + " commands byte-identical" +
                            (binary.empty() ? " (in-process only)" : " (in-process and as processes)")
                      : r.detail;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"similarity dimension, cantor", similarity_cantor},
        {"similarity dimension, square", similarity_square},
        {"Moran solver, unequal ratios", moran_unequal},
        {"phase transition of cover sums", phase_transition},
        {"square grid upper bound", square_upper_bound},
        {"ball/box sandwich identity", sandwich},
        {"mass distribution, cantor", mass_cantor},
        {"mass distribution, square", mass_square},
        {"cylinder masses", cylinder_masses},
        {"box-counting regression", box_counting},
        {"normalization constants", normalization},
        {"powered-system consistency", powered_system_check},
        {"determinism", [&] { return determinism(binary); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result res;
        try {
            res = criteria[i].second();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("threw: ") + e.what();
        }
        if (!res.pass) ++failures;
        std::cout << (res.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first
                  << " - " << res.detail << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
