#include "hausdim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"

namespace hausdim {

namespace {

constexpr double kEqualRatioTol = 1e-14;
constexpr double kBisectionTol = 1e-12;

void require_ratios(std::span<const double> ratios) {
    if (ratios.empty()) throw InvalidArgument("need at least one ratio");
    for (double r : ratios) {
        if (!(r > 0.0 && r < 1.0)) {
            throw InvalidArgument("ratio " + format_shortest(r) + " is outside (0, 1)");
        }
    }
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::moran_root: return "moran_root";
        case Method::boxcount_regression: return "boxcount_regression";
        case Method::bound_certificate: return "bound_certificate";
    }
    return "unknown";
}

std::optional<std::string> DimensionEstimate::meta(std::string_view key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) return v;
    }
    return std::nullopt;
}

double equal_ratio_dimension(std::size_t n, double r) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("ratio must lie in (0, 1)");
    if (n == 0) throw InvalidArgument("need at least one map");
    const long double num = std::log2(static_cast<long double>(n));
    return static_cast<double>(num / -std::log2(static_cast<long double>(r)));
}

double moran_value(std::span<const double> ratios, double s) {
    require_ratios(ratios);
    if (!(s >= 0.0)) throw InvalidArgument("exponent must be nonnegative");
    double sum = 0.0;
    for (double r : ratios) sum += std::pow(r, s);
    return sum - 1.0;
}

DimensionEstimate similarity_dimension(std::span<const double> ratios) {
    require_ratios(ratios);
    const auto n = static_cast<double>(ratios.size());
    DimensionEstimate est;
    if (ratios.size() == 1) {
        est.value = 0.0;
        est.method = Method::closed_form;
        return est;
    }

    const auto [min_it, max_it] = std::minmax_element(ratios.begin(), ratios.end());
    if (*max_it - *min_it <= kEqualRatioTol) {
        est.value = equal_ratio_dimension(ratios.size(), ratios.front());
        est.method = Method::closed_form;
        return est;
    }

    // N * (max r)^s <= 1 at s_hi, so the root is bracketed by [0, s_hi].
    double lo = 0.0;
    double hi = std::log(n) / -std::log(*max_it);
    int iterations = 0;
    while (hi - lo > kBisectionTol && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (moran_value(ratios, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    est.value = 0.5 * (lo + hi);
    est.method = Method::moran_root;
    est.uncertainty = hi - lo;
    est.metadata.emplace_back("iterations", std::to_string(iterations));
    return est;
}

DimensionEstimate similarity_dimension(const Ifs& ifs) {
    const auto r = ifs.ratios();
    return similarity_dimension(std::span<const double>(r));
}

OscReport check_osc(const Ifs& ifs, const AxisBox& candidate) {
    if (candidate.dim() != ifs.dim()) {
        throw DimensionMismatch("candidate set dimension does not match the IFS");
    }
    if (candidate.degenerate()) throw InvalidArgument("candidate open set must be nondegenerate");
    if (!ifs.axis_aligned()) {
        throw Unsupported("OSC check requires axis-aligned maps (rotation a multiple of pi/2)");
    }

    const double tol = kGeometryTolerance * diameter(candidate);
    std::vector<AxisBox> images;
    images.reserve(ifs.size());
    for (const auto& f : ifs.maps()) images.push_back(f.transform().image(candidate));

    OscReport report;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!candidate.contains(images[i], tol)) {
            report.violation = OscViolation{OscViolation::Kind::not_contained, i, i};
            return report;
        }
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (!interiors_disjoint(images[i], images[j], tol)) {
                report.violation = OscViolation{OscViolation::Kind::overlap, i, j};
                return report;
            }
        }
    }
    report.satisfied = true;
    report.witness = candidate;
    return report;
}

DimensionEstimate hausdorff_dimension_via_similarity(const Ifs& ifs, const AxisBox& candidate) {
    const OscReport osc = check_osc(ifs, candidate);
    DimensionEstimate est = similarity_dimension(ifs);
    if (osc.satisfied) {
        est.metadata.emplace_back("osc", "certified");
        est.metadata.emplace_back("witness", format_open_box(*osc.witness));
        return est;
    }

    est.metadata.emplace_back("osc", "upper bound only - OSC unverified");
    const auto& v = *osc.violation;
    if (v.kind == OscViolation::Kind::overlap) {
        est.metadata.emplace_back("violation", "images of maps " + std::to_string(v.first) +
                                                   " and " + std::to_string(v.second) +
                                                   " overlap");
    } else {
        est.metadata.emplace_back("violation", "image of map " + std::to_string(v.first) +
                                                   " leaves the candidate set");
    }
    // dim_H never exceeds the ambient dimension, so the bound can be tightened.
    const auto ambient = static_cast<double>(ifs.dim());
    if (est.value > ambient) {
        est.metadata.emplace_back("clamped_from", format_shortest(est.value));
        est.value = ambient;
    }
    return est;
}

bool is_certified(const DimensionEstimate& e) { return e.meta("osc") == "certified"; }

std::string format_open_box(const AxisBox& b) {
    std::string out;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (i > 0) out += "x";
        out += "(" + format_shortest(b.lo(i)) + "," + format_shortest(b.hi(i)) + ")";
    }
    return out;
}

}  // namespace hausdim
