#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hausdim/geometry.hpp"
#include "hausdim/ifs.hpp"

namespace hausdim {

enum class Method { closed_form, moran_root, boxcount_regression, bound_certificate };

std::string_view to_string(Method m);

/// A dimension value with the route that produced it.
///
/// `uncertainty` is 0 for exact methods, the final bracket width for
/// bisection, and the slope standard error for regressions. `metadata` holds
/// ordered key/value provenance notes.
struct DimensionEstimate {
    double value = 0.0;
    Method method = Method::closed_form;
    double uncertainty = 0.0;
    std::vector<std::pair<std::string, std::string>> metadata;

    /// Value of the first metadata entry with this key.
    std::optional<std::string> meta(std::string_view key) const;
};

/// Which open-set-condition requirement failed.
struct OscViolation {
    enum class Kind { not_contained, overlap };
    Kind kind = Kind::overlap;
    std::size_t first = 0;
    std::size_t second = 0;  // equals `first` for not_contained
};

struct OscReport {
    bool satisfied = false;
    std::optional<AxisBox> witness;
    std::optional<OscViolation> violation;
};

/// log N / log(1/r), evaluated as base-2 logarithms in extended precision so
/// that N^k maps of ratio r^k give the same double.
double equal_ratio_dimension(std::size_t n, double r);

/// sum_i r_i^s - 1. Strictly decreasing in s; equals N - 1 at s = 0.
double moran_value(std::span<const double> ratios, double s);

/// Root of the Moran equation sum_i r_i^s = 1.
///
/// Equal ratios use log N / log(1/r) directly; otherwise bisection on
/// [0, log N / log(1/max r)] down to a 1e-12 bracket. A single map gives 0.
DimensionEstimate similarity_dimension(std::span<const double> ratios);
DimensionEstimate similarity_dimension(const Ifs& ifs);

/// Open set condition with V = int(candidate): every image box lies inside
/// the candidate and image interiors are pairwise disjoint. Only defined for
/// axis-aligned systems; throws Unsupported otherwise.
OscReport check_osc(const Ifs& ifs, const AxisBox& candidate);

/// Similarity dimension, certified as the Hausdorff dimension when the OSC
/// holds for `candidate`. Without the OSC the value is still returned as an
/// upper bound and the metadata says so.
DimensionEstimate hausdorff_dimension_via_similarity(const Ifs& ifs, const AxisBox& candidate);

/// Reads the "osc" metadata entry written by hausdorff_dimension_via_similarity.
bool is_certified(const DimensionEstimate& e);

/// Human-readable open-box notation, e.g. "(0,1)x(0,1)".
std::string format_open_box(const AxisBox& b);

}  // namespace hausdim
