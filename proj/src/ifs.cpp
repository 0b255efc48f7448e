#include "hausdim/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hausdim/errors.hpp"
#include "hausdim/rng.hpp"

namespace hausdim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kAngleSnap = 1e-12;

/// Quarter-turn index when the angle is a multiple of pi/2 within kAngleSnap.
std::optional<int> quarter_turns(double angle) {
    const double k = std::nearbyint(angle / kHalfPi);
    if (std::abs(angle - k * kHalfPi) > kAngleSnap) return std::nullopt;
    const auto q = static_cast<long long>(k) % 4;
    return static_cast<int>((q + 4) % 4);
}

/// cos/sin with exact values at quarter turns.
std::pair<double, double> cos_sin(double angle) {
    if (auto q = quarter_turns(angle)) {
        static constexpr std::array<std::pair<double, double>, 4> table{
            {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
        return table[static_cast<std::size_t>(*q)];
    }
    return {std::cos(angle), std::sin(angle)};
}

Point make_point(const std::array<double, kMaxDim>& x, std::size_t dim) {
    return Point(std::span<const double>(x.data(), dim));
}

}  // namespace

Transform::Transform(double ratio, double rotation, bool reflect, const Point& translation)
    : ratio_(ratio), rotation_(rotation), reflect_(reflect), translation_(translation) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw InvalidArgument("similarity ratio must be positive and finite");
    }
    if (!std::isfinite(rotation)) throw InvalidArgument("rotation must be finite");
    if (translation.dim() == 1) {
        if (rotation != 0.0) {
            throw InvalidArgument("rotation must be 0 in one dimension; use reflect for x -> -x");
        }
        linear_[0][0] = reflect ? -ratio : ratio;
        return;
    }
    const auto [c, s] = cos_sin(rotation);
    // R(theta) * diag(1, -1) when reflecting.
    const double m = reflect ? -1.0 : 1.0;
    linear_ = {{{ratio * c, -ratio * s * m}, {ratio * s, ratio * c * m}}};
}

Transform Transform::identity(std::size_t dim) {
    const std::array<double, kMaxDim> zero{};
    return Transform(1.0, 0.0, false, make_point(zero, dim));
}

bool Transform::axis_aligned() const noexcept {
    return dim() == 1 || quarter_turns(rotation_).has_value();
}

Point Transform::apply(const Point& p) const {
    if (p.dim() != dim()) {
        throw DimensionMismatch("point dimension " + std::to_string(p.dim()) +
                                " does not match map dimension " + std::to_string(dim()));
    }
    std::array<double, kMaxDim> y{};
    for (std::size_t i = 0; i < dim(); ++i) {
        double acc = translation_[i];
        for (std::size_t j = 0; j < dim(); ++j) acc += linear_[i][j] * p[j];
        y[i] = acc;
    }
    return make_point(y, dim());
}

std::vector<Point> Transform::image_corners(const AxisBox& b) const {
    std::vector<Point> out;
    const std::size_t n = b.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::array<double, kMaxDim> c{};
        for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1U ? b.hi(i) : b.lo(i);
        out.push_back(apply(make_point(c, n)));
    }
    return out;
}

AxisBox Transform::image(const AxisBox& b) const {
    const auto corners = image_corners(b);
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};
    for (std::size_t i = 0; i < b.dim(); ++i) {
        lo[i] = hi[i] = corners.front()[i];
        for (const auto& c : corners) {
            lo[i] = std::min(lo[i], c[i]);
            hi[i] = std::max(hi[i], c[i]);
        }
    }
    return AxisBox(make_point(lo, b.dim()), make_point(hi, b.dim()));
}

Transform Transform::compose(const Transform& inner) const {
    if (inner.dim() != dim()) throw DimensionMismatch("cannot compose maps of different dimension");
    Transform out;
    out.ratio_ = ratio_ * inner.ratio_;
    out.reflect_ = reflect_ != inner.reflect_;
    out.rotation_ =
        dim() == 1 ? 0.0
                   : std::remainder(rotation_ + (reflect_ ? -inner.rotation_ : inner.rotation_),
                                    2.0 * std::numbers::pi);
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += linear_[i][k] * inner.linear_[k][j];
            out.linear_[i][j] = acc;
        }
    }
    out.translation_ = apply(inner.translation_);
    return out;
}

Similitude::Similitude(double ratio, double rotation, bool reflect, const Point& translation)
    : Similitude(Transform(ratio, rotation, reflect, translation)) {}

Similitude::Similitude(const Transform& t) : t_(t) {
    if (!(t.ratio() < 1.0)) throw InvalidArgument("similitude ratio must lie in (0, 1)");
}

Similitude Similitude::line(double ratio, double shift, bool reflect) {
    return Similitude(ratio, 0.0, reflect, Point{shift});
}

Similitude Similitude::plane(double ratio, double tx, double ty) {
    return Similitude(ratio, 0.0, false, Point{tx, ty});
}

Point apply(const Similitude& f, const Point& p) { return f.transform().apply(p); }

Ifs::Ifs(std::vector<Similitude> maps, std::vector<double> weights, const AxisBox& seed_box)
    : maps_(std::move(maps)), weights_(std::move(weights)), seed_(seed_box) {
    if (maps_.empty()) throw InvalidArgument("an IFS needs at least one map");
    if (!(diameter(seed_) > 0.0)) throw InvalidArgument("seed box must have positive diameter");
    for (const auto& f : maps_) {
        if (f.dim() != seed_.dim()) {
            throw DimensionMismatch("map dimension does not match seed box dimension");
        }
    }
    if (weights_.empty()) {
        weights_.assign(maps_.size(), 1.0 / static_cast<double>(maps_.size()));
    } else {
        if (weights_.size() != maps_.size()) {
            throw InvalidArgument("weight count must equal map count");
        }
        for (double w : weights_) {
            if (!(w > 0.0) || !std::isfinite(w)) throw InvalidArgument("weights must be positive");
        }
        const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
        if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("weights must sum to 1");
    }
    const double tol = tolerance();
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        for (const auto& c : maps_[i].transform().image_corners(seed_)) {
            if (!seed_.contains(c, tol)) {
                throw InvalidArgument("map " + std::to_string(i) +
                                      " does not send the seed box into itself");
            }
        }
    }
}

Ifs Ifs::from_transforms(std::span<const Transform> maps, std::vector<double> weights,
                         const AxisBox& seed_box) {
    std::vector<Similitude> sims;
    sims.reserve(maps.size());
    for (const auto& t : maps) sims.push_back(Similitude(t));
    return Ifs(std::move(sims), std::move(weights), seed_box);
}

std::vector<double> Ifs::ratios() const {
    std::vector<double> r;
    r.reserve(maps_.size());
    for (const auto& f : maps_) r.push_back(f.ratio());
    return r;
}

bool Ifs::axis_aligned() const noexcept {
    return std::all_of(maps_.begin(), maps_.end(),
                       [](const Similitude& f) { return f.axis_aligned(); });
}

double Ifs::tolerance() const { return kGeometryTolerance * diameter(seed_); }

std::optional<std::size_t> cell_count(std::size_t maps, std::size_t depth) {
    std::size_t count = 1;
    for (std::size_t d = 0; d < depth; ++d) {
        if (maps != 0 && count > kMaxCells / maps) return std::nullopt;
        count *= maps;
    }
    if (count > kMaxCells) return std::nullopt;
    return count;
}

Cell root_cell(const Ifs& ifs) {
    return Cell{ifs.seed_box(), {}, 1.0, 1.0, Transform::identity(ifs.dim())};
}

std::vector<Cell> children(const Ifs& ifs, const Cell& parent) {
    std::vector<Cell> out;
    out.reserve(ifs.size());
    for (std::size_t i = 0; i < ifs.size(); ++i) {
        Cell c;
        c.map = parent.map.compose(ifs.maps()[i].transform());
        c.box = c.map.image(ifs.seed_box());
        c.word = parent.word;
        c.word.push_back(static_cast<std::uint32_t>(i));
        c.ratio = parent.ratio * ifs.maps()[i].ratio();
        c.weight = parent.weight * ifs.weights()[i];
        out.push_back(std::move(c));
    }
    return out;
}

CellSet refine(const Ifs& ifs, std::size_t depth) {
    if (!cell_count(ifs.size(), depth)) {
        throw CapExceeded("refinement to depth " + std::to_string(depth) + " of a " +
                          std::to_string(ifs.size()) + "-map system exceeds " +
                          std::to_string(kMaxCells) + " cells");
    }
    std::vector<Cell> level{root_cell(ifs)};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Cell> next;
        next.reserve(level.size() * ifs.size());
        for (const auto& cell : level) {
            auto kids = children(ifs, cell);
            std::move(kids.begin(), kids.end(), std::back_inserter(next));
        }
        level = std::move(next);
    }
    return CellSet{depth, std::move(level)};
}

Ifs powered_system(const Ifs& ifs, std::size_t k) {
    if (k == 0) throw InvalidArgument("power must be at least 1");
    const auto cells = refine(ifs, k);
    std::vector<Transform> maps;
    std::vector<double> weights;
    for (const auto& c : cells.cells) {
        maps.push_back(c.map);
        weights.push_back(c.weight);
    }
    // Products of weights drift from a unit sum by rounding; renormalise.
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) w /= total;
    return Ifs::from_transforms(maps, std::move(weights), ifs.seed_box());
}

std::vector<Point> chaos_game(const Ifs& ifs, std::size_t count, std::uint64_t rng_seed) {
    if (count == 0) throw InvalidArgument("chaos game needs at least one point");
    std::vector<double> cumulative(ifs.size());
    std::partial_sum(ifs.weights().begin(), ifs.weights().end(), cumulative.begin());

    Rng rng(rng_seed);
    const auto pick = [&] {
        const double u = rng.uniform() * cumulative.back();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                     ifs.size() - 1);
    };

    const AxisBox& seed = ifs.seed_box();
    const auto clamp_to_seed = [&](const Point& p) {
        std::array<double, kMaxDim> x{};
        for (std::size_t i = 0; i < p.dim(); ++i) x[i] = std::clamp(p[i], seed.lo(i), seed.hi(i));
        return make_point(x, p.dim());
    };

    Point x = seed.center();
    for (std::size_t i = 0; i < kChaosBurnIn; ++i) x = ifs.maps()[pick()].transform().apply(x);

    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Clamping absorbs last-ulp rounding at the seed-box faces.
        x = clamp_to_seed(ifs.maps()[pick()].transform().apply(x));
        out.push_back(x);
    }
    return out;
}

Ifs cantor_preset(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    const double r = (1.0 - alpha) / 2.0;
    return Ifs({Similitude::line(r, 0.0), Similitude::line(r, (1.0 + alpha) / 2.0)},
               AxisBox::interval(0.0, 1.0));
}

Ifs square_preset() {
    return Ifs({Similitude::plane(0.5, 0.0, 0.0), Similitude::plane(0.5, 0.5, 0.0),
                Similitude::plane(0.5, 0.0, 0.5), Similitude::plane(0.5, 0.5, 0.5)},
               AxisBox::rect(0.0, 1.0, 0.0, 1.0));
}

}  // namespace hausdim
