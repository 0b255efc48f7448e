#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

#include "hausdim/covering.hpp"
#include "hausdim/dimension.hpp"
#include "hausdim/geometry.hpp"
#include "hausdim/ifs.hpp"

namespace hausdim {

/// Mass distribution that gives the cell of word w the weight prod_k p_{w_k}.
///
/// Only interior-disjoint systems are accepted (the seed box itself must
/// witness the open set condition), otherwise overlapping cells would count
/// the same mass twice.
class SelfSimilarMeasure {
public:
    explicit SelfSimilarMeasure(Ifs ifs);

    const Ifs& ifs() const noexcept { return ifs_; }

private:
    Ifs ifs_;
};

/// Two-sided enclosure 0 <= lower <= mu(U) <= upper <= 1.
struct MassBound {
    double lower = 0.0;
    double upper = 0.0;
};

/// Enclosure of mu(u) by recursive descent over cells.
///
/// Cells inside u count fully, cells missing u count nothing, and cells still
/// straddling the boundary at max_depth count toward `upper` only. Geometric
/// predicates use the system's tolerance (1e-12 of the seed diameter), so
/// boundaries are resolved to that width.
MassBound mu_box(const SelfSimilarMeasure& m, const AxisBox& u, std::size_t max_depth);

/// Area of u intersected with the unit square.
double lebesgue_square_mass(const AxisBox& u);

/// Upper bound on the mass of a box.
using MassFunction = std::function<double(const AxisBox&)>;

/// mu_box upper side with a depth chosen from the box size: deep enough that
/// cells are `extra_depth` levels below the box diameter, capped at 48.
MassFunction upper_mass(const SelfSimilarMeasure& m, std::size_t extra_depth = 12);

struct MddCertificate {
    double s = 0.0;
    double c = 0.0;  // largest sampled mass(U) / |U|^s
    std::size_t samples = 0;
    double delta_min = 0.0;
    double delta_max = 0.0;
    std::uint64_t rng_seed = 0;
    double implied_measure_lower_bound = 0.0;  // mu(A) / c with mu(A) = 1
    AxisBox worst_box;                         // the sample attaining c
};

/// Empirical constant for the scaling condition mu(U) <= c |U|^s.
///
/// Draws `samples` boxes with centres uniform in `domain` and diameters
/// log-uniform in [delta_min, delta_max]. In 2-D the diagonal direction is
/// uniform in (0, pi/2), so aspect ratios vary. c is the exact maximum of the
/// sampled ratios and is therefore a lower estimate of the true supremum.
/// Throws NumericalFailure when no sample carries mass.
MddCertificate mdd_check(const MassFunction& mass, const AxisBox& domain, double s,
                         std::pair<double, double> delta_range, std::size_t samples,
                         std::uint64_t rng_seed);

/// dim_H(A) >= s from a certificate, with H^s(A) >= 1/c in the metadata.
DimensionEstimate lower_bound_dimension(const MddCertificate& cert);

/// pi^{s/2} / Gamma(s/2 + 1), the volume of the unit ball for integer s.
double alpha_constant(double s);

/// sum_i alpha(s) (diam_i / 2)^s.
CoverSum normalized_cover_sum(const Cover& c, double s);

}  // namespace hausdim
