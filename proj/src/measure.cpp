#include "hausdim/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"
#include "hausdim/rng.hpp"

namespace hausdim {

namespace {

constexpr std::size_t kMaxAdaptiveDepth = 48;

Ifs require_disjoint(Ifs ifs) {
    const OscReport osc = check_osc(ifs, ifs.seed_box());
    if (!osc.satisfied) {
        throw Unsupported("self-similar measure needs interior-disjoint first-level cells");
    }
    return ifs;
}

}  // namespace

SelfSimilarMeasure::SelfSimilarMeasure(Ifs ifs) : ifs_(require_disjoint(std::move(ifs))) {}

MassBound mu_box(const SelfSimilarMeasure& m, const AxisBox& u, std::size_t max_depth) {
    if (max_depth < 1) throw InvalidArgument("max_depth must be at least 1");
    const Ifs& ifs = m.ifs();
    if (u.dim() != ifs.dim()) throw DimensionMismatch("query box dimension mismatch");
    const double tol = ifs.tolerance();

    MassBound bound;
    std::vector<std::pair<Cell, std::size_t>> stack{{root_cell(ifs), 0}};
    while (!stack.empty()) {
        auto [cell, depth] = std::move(stack.back());
        stack.pop_back();
        if (u.contains(cell.box, tol)) {
            bound.lower += cell.weight;
            bound.upper += cell.weight;
        } else if (interiors_disjoint(cell.box, u, tol)) {
            continue;
        } else if (depth >= max_depth) {
            bound.upper += cell.weight;
        } else {
            auto kids = children(ifs, cell);
            // Reverse so cells are visited in word order.
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                stack.emplace_back(std::move(*it), depth + 1);
            }
        }
    }
    bound.upper = std::min(bound.upper, 1.0);
    bound.lower = std::min(bound.lower, bound.upper);
    return bound;
}

double lebesgue_square_mass(const AxisBox& u) {
    if (u.dim() != 2) throw DimensionMismatch("Lebesgue square mass needs a 2-D box");
    const auto clipped = box_intersect(u, AxisBox::rect(0.0, 1.0, 0.0, 1.0));
    return clipped ? clipped->volume() : 0.0;
}

MassFunction upper_mass(const SelfSimilarMeasure& m, std::size_t extra_depth) {
    const double seed_diam = diameter(m.ifs().seed_box());
    const auto ratios = m.ifs().ratios();
    const double max_ratio = *std::max_element(ratios.begin(), ratios.end());
    return [m, seed_diam, max_ratio, extra_depth](const AxisBox& u) {
        const double d = diameter(u);
        std::size_t depth = kMaxAdaptiveDepth;
        if (d > 0.0) {
            // Cells at depth k have diameter at most max_ratio^k * seed_diam.
            const double levels = std::ceil(std::log(d / seed_diam) / std::log(max_ratio));
            depth = static_cast<std::size_t>(std::max(levels, 0.0)) + extra_depth;
        }
        return mu_box(m, u, std::clamp<std::size_t>(depth, 1, kMaxAdaptiveDepth)).upper;
    };
}

MddCertificate mdd_check(const MassFunction& mass, const AxisBox& domain, double s,
                         std::pair<double, double> delta_range, std::size_t samples,
                         std::uint64_t rng_seed) {
    const auto [dmin, dmax] = delta_range;
    if (samples < 1) throw InvalidArgument("need at least one sample");
    if (!(dmin > 0.0 && dmin <= dmax) || !std::isfinite(dmax)) {
        throw InvalidArgument("delta range must satisfy 0 < delta_min <= delta_max");
    }
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("exponent s must be >= 0");

    Rng rng(rng_seed);
    const double log_lo = std::log(dmin);
    const double log_hi = std::log(dmax);
    const std::size_t n = domain.dim();

    MddCertificate cert;
    cert.s = s;
    cert.samples = samples;
    cert.delta_min = dmin;
    cert.delta_max = dmax;
    cert.rng_seed = rng_seed;

    for (std::size_t k = 0; k < samples; ++k) {
        std::array<double, kMaxDim> centre{};
        for (std::size_t i = 0; i < n; ++i) centre[i] = rng.uniform(domain.lo(i), domain.hi(i));
        const double d = std::exp(rng.uniform(log_lo, log_hi));
        std::array<double, kMaxDim> half{};
        if (n == 1) {
            half[0] = 0.5 * d;
        } else {
            const double theta = rng.uniform(0.0, std::numbers::pi / 2.0);
            half[0] = 0.5 * d * std::cos(theta);
            half[1] = 0.5 * d * std::sin(theta);
        }
        std::array<double, kMaxDim> lo{};
        std::array<double, kMaxDim> hi{};
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = centre[i] - half[i];
            hi[i] = centre[i] + half[i];
        }
        const AxisBox box(Point(std::span<const double>(lo.data(), n)),
                          Point(std::span<const double>(hi.data(), n)));
        const double diam = diameter(box);
        const double ratio = mass(box) / (s == 0.0 ? 1.0 : std::pow(diam, s));
        if (ratio > cert.c) {
            cert.c = ratio;
            cert.worst_box = box;
        }
    }
    if (!(cert.c > 0.0)) {
        throw NumericalFailure("no sampled set carried mass; widen the delta range or add samples");
    }
    cert.implied_measure_lower_bound = 1.0 / cert.c;
    return cert;
}

DimensionEstimate lower_bound_dimension(const MddCertificate& cert) {
    if (!std::isfinite(cert.c) || !(cert.c > 0.0)) {
        throw InvalidArgument("certificate constant must be finite and positive");
    }
    DimensionEstimate est;
    est.value = cert.s;
    est.method = Method::bound_certificate;
    est.metadata.emplace_back("bound", "lower");
    est.metadata.emplace_back("c", format_csv_real(cert.c));
    est.metadata.emplace_back("hs_lower_bound", format_csv_real(cert.implied_measure_lower_bound));
    est.metadata.emplace_back("samples", std::to_string(cert.samples));
    est.metadata.emplace_back("evidence", "empirical");
    return est;
}

double alpha_constant(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("alpha(s) needs s >= 0");
    return std::pow(std::numbers::pi, 0.5 * s) / std::tgamma(0.5 * s + 1.0);
}

CoverSum normalized_cover_sum(const Cover& c, double s) {
    const double a = alpha_constant(s);
    double total = 0.0;
    for (const auto& e : c.elements()) {
        total += s == 0.0 ? 1.0 : std::pow(0.5 * e.diameter(), s);
    }
    return CoverSum{s, a * total, c.delta()};
}

}  // namespace hausdim
