#include "hausdim/covering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"

namespace hausdim {

namespace {

/// Neumaier summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double power(double base, double s) { return s == 0.0 ? 1.0 : std::pow(base, s); }

void require_exponent(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("exponent s must be >= 0");
}

}  // namespace

CoverElement::CoverElement(const AxisBox& box) : shape_(box), diameter_(hausdim::diameter(box)) {}

CoverElement::CoverElement(const AxisBox& box, double diameter) : shape_(box), diameter_(diameter) {
    if (!(diameter >= 0.0) || !std::isfinite(diameter)) throw InvalidArgument("diameter must be >= 0");
}

CoverElement::CoverElement(const Ball& ball) : shape_(ball), diameter_(ball.diameter()) {}

Cover::Cover(std::vector<CoverElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw InvalidArgument("a cover needs at least one element");
    for (const auto& e : elements_) delta_ = std::max(delta_, e.diameter());
    if (!(delta_ > 0.0)) throw InvalidArgument("a cover needs an element of positive diameter");
}

CoverSum cover_sum(const Cover& c, double s) {
    require_exponent(s);
    CompensatedSum acc;
    for (const auto& e : c.elements()) acc.add(power(e.diameter(), s));
    return CoverSum{s, acc.value(), c.delta()};
}

Cover natural_cover(const Ifs& ifs, std::size_t depth) {
    auto cells = refine(ifs, depth);
    std::vector<CoverElement> elements;
    elements.reserve(cells.cells.size());
    // Endpoint differences of deep cells lose most of their digits; for
    // box-preserving maps the cell is exactly its bounding box, whose
    // diameter is the ratio product times the seed diameter.
    const bool exact = ifs.axis_aligned();
    const double seed_diam = diameter(ifs.seed_box());
    for (const auto& cell : cells.cells) {
        if (exact) {
            elements.emplace_back(cell.box, cell.ratio * seed_diam);
        } else {
            elements.emplace_back(cell.box);
        }
    }
    return Cover(std::move(elements));
}

DimensionEstimate upper_bound_exponent(const Ifs& ifs, std::span<const std::size_t> depths,
                                       double tolerance) {
    if (depths.size() < 2) throw InvalidArgument("need at least two depths");
    if (!std::is_sorted(depths.begin(), depths.end(), std::less_equal<>())) {
        throw InvalidArgument("depths must be strictly increasing");
    }
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    for (std::size_t d : depths) {
        if (!cell_count(ifs.size(), d)) {
            throw CapExceeded("depth " + std::to_string(d) + " exceeds the cell cap");
        }
    }

    std::vector<Cover> covers;
    covers.reserve(depths.size());
    for (std::size_t d : depths) covers.push_back(natural_cover(ifs, d));

    DimensionEstimate est;
    est.method = Method::bound_certificate;
    const auto ratios = ifs.ratios();
    const auto [min_it, max_it] = std::minmax_element(ratios.begin(), ratios.end());
    const double n = static_cast<double>(ifs.size());

    if (ifs.size() == 1) {
        est.value = 0.0;
        est.metadata.emplace_back("criterion", "single map");
    } else if (*max_it - *min_it <= 1e-14) {
        // N^d r^{ds} -> 0 exactly when N r^s < 1.
        est.value = equal_ratio_dimension(ratios.size(), ratios.front());
        est.metadata.emplace_back("criterion", "analytic N*r^s = 1");
    } else {
        const Cover& shallow = covers.front();
        const Cover& deep = covers.back();
        const auto decays = [&](double s) {
            return cover_sum(deep, s).value < cover_sum(shallow, s).value;
        };
        double lo = 0.0;
        double hi = std::log(n) / -std::log(*max_it);
        if (!decays(hi)) {
            throw NumericalFailure("cover sums do not decay at the analytic upper bracket");
        }
        while (hi - lo > tolerance) {
            const double mid = 0.5 * (lo + hi);
            if (decays(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        est.value = hi;
        est.uncertainty = hi - lo;
        est.metadata.emplace_back("criterion", "cover-sum decay between depths " +
                                                   std::to_string(depths.front()) + " and " +
                                                   std::to_string(depths.back()));
    }

    for (std::size_t i = 0; i < depths.size(); ++i) {
        est.metadata.emplace_back("cover_sum[depth=" + std::to_string(depths[i]) + "]",
                                  format_csv_real(cover_sum(covers[i], est.value).value));
    }
    return est;
}

Cover cover_to_balls(const Cover& c) {
    std::vector<CoverElement> balls;
    balls.reserve(c.size());
    for (const auto& e : c.elements()) {
        if (!e.is_box()) throw InvalidArgument("cover_to_balls expects a cover made of boxes");
        balls.emplace_back(Ball(e.box().center(), e.diameter()));
    }
    return Cover(std::move(balls));
}

std::size_t box_count(std::span<const Point> points, double delta) {
    if (points.empty()) throw InvalidArgument("box counting needs at least one point");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be positive");
    const std::size_t n = points.front().dim();

    std::vector<std::array<std::int64_t, kMaxDim>> keys;
    keys.reserve(points.size());
    for (const auto& p : points) {
        if (p.dim() != n) throw DimensionMismatch("points of mixed dimension");
        std::array<std::int64_t, kMaxDim> key{};
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = static_cast<std::int64_t>(std::floor(p[i] / delta));
        }
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

BoxCountSeries box_count_series(std::span<const Point> points, std::span<const double> deltas) {
    BoxCountSeries series;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (i > 0 && !(deltas[i] < deltas[i - 1])) {
            throw InvalidArgument("deltas must be strictly decreasing");
        }
        series.entries.push_back({deltas[i], box_count(points, deltas[i])});
    }
    return series;
}

DimensionEstimate boxcount_dimension(std::span<const Point> points,
                                     std::span<const double> deltas) {
    if (deltas.size() < 3) throw InvalidArgument("regression needs at least three scales");
    return boxcount_dimension(box_count_series(points, deltas));
}

DimensionEstimate boxcount_dimension(const BoxCountSeries& series) {
    const auto& e = series.entries;
    if (e.size() < 3) throw InvalidArgument("regression needs at least three scales");
    const bool all_equal = std::all_of(e.begin(), e.end(),
                                       [&](const BoxCount& b) { return b.count == e[0].count; });
    if (all_equal) {
        throw NumericalFailure("degenerate regression: every scale has the same box count; "
                               "use finer scales");
    }

    const auto m = static_cast<double>(e.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& b : e) {
        mean_x += -std::log(b.delta);
        mean_y += std::log(static_cast<double>(b.count));
    }
    mean_x /= m;
    mean_y /= m;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& b : e) {
        const double dx = -std::log(b.delta) - mean_x;
        sxx += dx * dx;
        sxy += dx * (std::log(static_cast<double>(b.count)) - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    double ssr = 0.0;
    for (const auto& b : e) {
        const double r =
            std::log(static_cast<double>(b.count)) - (intercept + slope * -std::log(b.delta));
        ssr += r * r;
    }

    DimensionEstimate est;
    est.value = slope;
    est.method = Method::boxcount_regression;
    est.uncertainty = std::sqrt(ssr / (m - 2.0) / sxx);
    est.metadata.emplace_back("intercept", format_csv_real(intercept));
    est.metadata.emplace_back("scales", std::to_string(e.size()));
    return est;
}

}  // namespace hausdim
