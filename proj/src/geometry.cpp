#include "hausdim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hausdim/errors.hpp"

namespace hausdim {

namespace {

void require_dim(std::size_t n) {
    if (n == 0 || n > kMaxDim) {
        throw InvalidArgument("ambient dimension must be 1 or 2, got " + std::to_string(n));
    }
}

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

}  // namespace

Point::Point(std::initializer_list<double> coords)
    : Point(std::span<const double>(coords.begin(), coords.size())) {}

Point::Point(std::span<const double> coords) : dim_(coords.size()) {
    require_dim(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!std::isfinite(coords[i])) {
            throw InvalidArgument("point coordinates must be finite");
        }
        x_[i] = coords[i];
    }
}

bool operator==(const Point& a, const Point& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i) {
        if (a.x_[i] != b.x_[i]) return false;
    }
    return true;
}

double distance(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim());
    double sq = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

AxisBox::AxisBox(const Point& lo, const Point& hi) : lo_(lo), hi_(hi) {
    require_same_dim(lo.dim(), hi.dim());
    require_dim(lo.dim());
    for (std::size_t i = 0; i < lo.dim(); ++i) {
        if (lo[i] > hi[i]) {
            throw InvalidArgument("box endpoints out of order on axis " + std::to_string(i));
        }
    }
}

AxisBox AxisBox::interval(double lo, double hi) { return AxisBox(Point{lo}, Point{hi}); }

AxisBox AxisBox::rect(double x0, double x1, double y0, double y1) {
    return AxisBox(Point{x0, y0}, Point{x1, y1});
}

Point AxisBox::center() const {
    std::array<double, kMaxDim> c{};
    for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lo_[i] + hi_[i]);
    return Point(std::span<const double>(c.data(), dim()));
}

double AxisBox::volume() const noexcept {
    double v = 1.0;
    for (std::size_t i = 0; i < dim(); ++i) v *= extent(i);
    return v;
}

bool AxisBox::degenerate() const noexcept {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (extent(i) == 0.0) return true;
    }
    return false;
}

bool AxisBox::contains(const AxisBox& inner, double tol) const {
    require_same_dim(dim(), inner.dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (inner.lo(i) < lo(i) - tol || inner.hi(i) > hi(i) + tol) return false;
    }
    return true;
}

bool AxisBox::contains(const Point& p, double tol) const {
    require_same_dim(dim(), p.dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (p[i] < lo(i) - tol || p[i] > hi(i) + tol) return false;
    }
    return true;
}

Ball::Ball(const Point& center, double radius) : center_(center), radius_(radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("ball radius must be finite and nonnegative");
    }
}

double diameter(const AxisBox& b) {
    double sq = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i) sq += b.extent(i) * b.extent(i);
    return std::sqrt(sq);
}

Ball enclosing_ball(const AxisBox& b) { return Ball(b.center(), diameter(b)); }

std::optional<AxisBox> box_intersect(const AxisBox& a, const AxisBox& b) {
    require_same_dim(a.dim(), b.dim());
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        lo[i] = std::max(a.lo(i), b.lo(i));
        hi[i] = std::min(a.hi(i), b.hi(i));
        if (lo[i] > hi[i]) return std::nullopt;
    }
    return AxisBox(Point(std::span<const double>(lo.data(), a.dim())),
                   Point(std::span<const double>(hi.data(), a.dim())));
}

bool interiors_disjoint(const AxisBox& a, const AxisBox& b, double tol) {
    require_same_dim(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double overlap = std::min(a.hi(i), b.hi(i)) - std::max(a.lo(i), b.lo(i));
        if (overlap <= tol) return true;
    }
    return false;
}

}  // namespace hausdim
