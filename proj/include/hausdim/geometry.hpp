#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>

namespace hausdim {

/// Largest ambient dimension supported by the fixed-size storage below.
inline constexpr std::size_t kMaxDim = 2;

/// A point of R^n, n in {1, 2}. All coordinates are finite.
class Point {
public:
    Point() = default;
    Point(std::initializer_list<double> coords);
    explicit Point(std::span<const double> coords);

    std::size_t dim() const noexcept { return dim_; }
    double operator[](std::size_t axis) const noexcept { return x_[axis]; }
    std::span<const double> coords() const noexcept { return {x_.data(), dim_}; }

    friend bool operator==(const Point& a, const Point& b) noexcept;

private:
    std::size_t dim_ = 0;
    std::array<double, kMaxDim> x_{};
};

double distance(const Point& a, const Point& b);

/// Closed axis-aligned box [lo_0, hi_0] x ... x [lo_{n-1}, hi_{n-1}].
class AxisBox {
public:
    AxisBox() = default;
    AxisBox(const Point& lo, const Point& hi);

    /// Convenience for the 1-D interval [lo, hi].
    static AxisBox interval(double lo, double hi);
    /// Convenience for the 2-D rectangle [x0, x1] x [y0, y1].
    static AxisBox rect(double x0, double x1, double y0, double y1);

    std::size_t dim() const noexcept { return lo_.dim(); }
    const Point& lo() const noexcept { return lo_; }
    const Point& hi() const noexcept { return hi_; }
    double lo(std::size_t axis) const noexcept { return lo_[axis]; }
    double hi(std::size_t axis) const noexcept { return hi_[axis]; }
    double extent(std::size_t axis) const noexcept { return hi_[axis] - lo_[axis]; }

    Point center() const;
    /// Product of the side lengths (length in 1-D, area in 2-D).
    double volume() const noexcept;
    /// True when some side has zero length.
    bool degenerate() const noexcept;
    bool contains(const AxisBox& inner, double tol = 0.0) const;
    bool contains(const Point& p, double tol = 0.0) const;

    friend bool operator==(const AxisBox& a, const AxisBox& b) noexcept = default;

private:
    Point lo_;
    Point hi_;
};

/// Closed ball B(center, radius). Its diameter is 2 * radius.
class Ball {
public:
    Ball() = default;
    Ball(const Point& center, double radius);

    const Point& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    double diameter() const noexcept { return 2.0 * radius_; }
    std::size_t dim() const noexcept { return center_.dim(); }

private:
    Point center_;
    double radius_ = 0.0;
};

/// Euclidean length of the box diagonal.
double diameter(const AxisBox& b);

/// Ball centred at the box centre with radius equal to the box diameter, so the
/// ball's diameter is exactly twice the box's.
Ball enclosing_ball(const AxisBox& b);

/// Closed intersection; empty when the boxes share no point. Throws
/// DimensionMismatch when the ambient dimensions differ.
std::optional<AxisBox> box_intersect(const AxisBox& a, const AxisBox& b);

/// True when the interiors of a and b do not meet, i.e. on some axis the
/// overlap length is at most tol.
bool interiors_disjoint(const AxisBox& a, const AxisBox& b, double tol = 0.0);

}  // namespace hausdim
