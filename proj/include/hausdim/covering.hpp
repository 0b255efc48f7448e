#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hausdim/dimension.hpp"
#include "hausdim/geometry.hpp"
#include "hausdim/ifs.hpp"

namespace hausdim {

/// A covering set: an axis box or a ball, with its diameter cached.
class CoverElement {
public:
    CoverElement(const AxisBox& box);  // NOLINT(google-explicit-constructor)
    CoverElement(const Ball& ball);    // NOLINT(google-explicit-constructor)
    /// Box whose diameter is known more accurately than its endpoints give,
    /// e.g. a deep construction cell. Must agree with diameter(box) to rounding.
    CoverElement(const AxisBox& box, double diameter);

    double diameter() const noexcept { return diameter_; }
    bool is_box() const noexcept { return std::holds_alternative<AxisBox>(shape_); }
    bool is_ball() const noexcept { return std::holds_alternative<Ball>(shape_); }
    const AxisBox& box() const { return std::get<AxisBox>(shape_); }
    const Ball& ball() const { return std::get<Ball>(shape_); }

private:
    std::variant<AxisBox, Ball> shape_;
    double diameter_;
};

/// Finite delta-cover; delta is the largest element diameter and must be positive.
class Cover {
public:
    explicit Cover(std::vector<CoverElement> elements);

    const std::vector<CoverElement>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    double delta() const noexcept { return delta_; }

private:
    std::vector<CoverElement> elements_;
    double delta_ = 0.0;
};

struct CoverSum {
    double s = 0.0;
    double value = 0.0;
    double depth_or_delta = 0.0;  // provenance: refinement depth or cover delta
};

struct BoxCount {
    double delta = 0.0;
    std::size_t count = 0;
};

/// Box counts ordered by strictly decreasing delta.
struct BoxCountSeries {
    std::vector<BoxCount> entries;
};

/// sum_i diam(U_i)^s over the cover (compensated summation). s = 0 gives the
/// element count. depth_or_delta is set to the cover's delta.
CoverSum cover_sum(const Cover& c, double s);

/// The depth-d cells of the construction as a cover.
Cover natural_cover(const Ifs& ifs, std::size_t depth);

/// Exponent above which the natural cover sums vanish as depth grows.
///
/// Equal ratios give log N / log(1/r) analytically. Otherwise the exponent is
/// bisected on whether the deepest cover's sum falls below the shallowest's,
/// which happens exactly when sum_i r_i^s < 1. Metadata records the cover sum
/// at each requested depth evaluated at the returned exponent.
DimensionEstimate upper_bound_exponent(const Ifs& ifs, std::span<const std::size_t> depths,
                                       double tolerance);

/// Replaces every box by its enclosing ball (radius = box diameter).
/// Throws InvalidArgument if the cover already holds a ball.
Cover cover_to_balls(const Cover& c);

/// Occupied cells of the origin-anchored grid of side delta; a point with
/// coordinate x falls in cell floor(x / delta) on each axis.
std::size_t box_count(std::span<const Point> points, double delta);

BoxCountSeries box_count_series(std::span<const Point> points, std::span<const double> deltas);

/// Least-squares slope of log count against log(1/delta); the uncertainty is
/// the slope's standard error. Needs at least three strictly decreasing
/// deltas. Throws NumericalFailure when every count is equal.
DimensionEstimate boxcount_dimension(std::span<const Point> points,
                                     std::span<const double> deltas);

/// Same regression on a precomputed series.
DimensionEstimate boxcount_dimension(const BoxCountSeries& series);

}  // namespace hausdim
