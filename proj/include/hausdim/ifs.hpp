#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hausdim/geometry.hpp"

namespace hausdim {

/// Relative tolerance (scaled by the seed-box diameter) used for geometric
/// predicates on computed cells: containment, interior overlap, invariance.
inline constexpr double kGeometryTolerance = 1e-12;

/// Largest number of cells refine() will materialise.
inline constexpr std::size_t kMaxCells = 1'000'000;

/// x -> ratio * Q(x) + translation, with Q = R(rotation) * S^reflect in 2-D
/// (S mirrors the second axis) and Q = (reflect ? -1 : 1) in 1-D.
///
/// The ratio is only required to be positive so that compositions, including
/// the identity of the empty word, share the representation.
class Transform {
public:
    Transform() = default;
    Transform(double ratio, double rotation, bool reflect, const Point& translation);

    static Transform identity(std::size_t dim);

    std::size_t dim() const noexcept { return translation_.dim(); }
    double ratio() const noexcept { return ratio_; }
    double rotation() const noexcept { return rotation_; }
    bool reflect() const noexcept { return reflect_; }
    const Point& translation() const noexcept { return translation_; }

    /// Rotation is a multiple of pi/2 (always true in 1-D), so boxes map onto boxes.
    bool axis_aligned() const noexcept;

    Point apply(const Point& p) const;
    /// Bounding box of the image; exact for axis-aligned transforms.
    AxisBox image(const AxisBox& b) const;
    /// Images of the box corners (the image is their convex hull).
    std::vector<Point> image_corners(const AxisBox& b) const;

    /// (*this) o inner.
    Transform compose(const Transform& inner) const;

private:
    double ratio_ = 1.0;
    double rotation_ = 0.0;
    bool reflect_ = false;
    Point translation_;
    std::array<std::array<double, 2>, 2> linear_{};  // ratio * Q
};

/// A contracting similarity map of R^n, 0 < ratio < 1.
class Similitude {
public:
    Similitude() = default;
    Similitude(double ratio, double rotation, bool reflect, const Point& translation);
    /// 1-D shorthand x -> ratio * x + shift.
    static Similitude line(double ratio, double shift, bool reflect = false);
    /// 2-D shorthand without rotation or reflection.
    static Similitude plane(double ratio, double tx, double ty);

    std::size_t dim() const noexcept { return t_.dim(); }
    double ratio() const noexcept { return t_.ratio(); }
    double rotation() const noexcept { return t_.rotation(); }
    bool reflect() const noexcept { return t_.reflect(); }
    const Point& translation() const noexcept { return t_.translation(); }
    bool axis_aligned() const noexcept { return t_.axis_aligned(); }
    const Transform& transform() const noexcept { return t_; }

private:
    explicit Similitude(const Transform& t);
    friend class Ifs;

    Transform t_;
};

Point apply(const Similitude& f, const Point& p);

/// Iterated function system of similitudes with per-map weights and a seed box
/// that every map sends into itself.
class Ifs {
public:
    /// Empty weights mean uniform 1/N.
    Ifs(std::vector<Similitude> maps, std::vector<double> weights, const AxisBox& seed_box);
    Ifs(std::vector<Similitude> maps, const AxisBox& seed_box)
        : Ifs(std::move(maps), {}, seed_box) {}

    std::size_t size() const noexcept { return maps_.size(); }
    std::size_t dim() const noexcept { return seed_.dim(); }
    const std::vector<Similitude>& maps() const noexcept { return maps_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const AxisBox& seed_box() const noexcept { return seed_; }
    std::vector<double> ratios() const;
    bool axis_aligned() const noexcept;
    /// Absolute tolerance for geometric predicates on this system's cells.
    double tolerance() const;

    /// Builds a system from composite maps; used by powered_system().
    static Ifs from_transforms(std::span<const Transform> maps, std::vector<double> weights,
                               const AxisBox& seed_box);

private:
    std::vector<Similitude> maps_;
    std::vector<double> weights_;
    AxisBox seed_;
};

/// One cell f_{w_1} o ... o f_{w_d}(seed) of a refinement.
struct Cell {
    AxisBox box;
    std::vector<std::uint32_t> word;
    double ratio = 1.0;   // product of the ratios along the word
    double weight = 1.0;  // product of the weights along the word
    Transform map;        // the composite f_w
};

struct CellSet {
    std::size_t depth = 0;
    std::vector<Cell> cells;  // lexicographic order of words
};

/// Number of depth-d cells, N^depth, or nullopt when it exceeds kMaxCells.
std::optional<std::size_t> cell_count(std::size_t maps, std::size_t depth);

/// All N^depth cells of the given depth. Throws CapExceeded past kMaxCells.
CellSet refine(const Ifs& ifs, std::size_t depth);

/// Children f_w o f_i(seed) of a cell, one per map, in map order.
std::vector<Cell> children(const Ifs& ifs, const Cell& parent);

/// The root cell (empty word, seed box).
Cell root_cell(const Ifs& ifs);

/// The system whose maps are all depth-k composites f_w (N^k maps).
Ifs powered_system(const Ifs& ifs, std::size_t k);

/// Chaos-game orbit: starts at the seed-box centre, discards 100 iterations,
/// then returns `count` points. Map indices are drawn by weight.
std::vector<Point> chaos_game(const Ifs& ifs, std::size_t count, std::uint64_t rng_seed);

inline constexpr std::size_t kChaosBurnIn = 100;

/// Middle-alpha Cantor system: two maps of ratio (1-alpha)/2 on [0,1].
Ifs cantor_preset(double alpha);
/// The four quadrant maps of the unit square, ratio 1/2.
Ifs square_preset();

}  // namespace hausdim
