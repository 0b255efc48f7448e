#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hausdim/covering.hpp"
#include "hausdim/dimension.hpp"
#include "hausdim/measure.hpp"

namespace hausdim {

// CSV tables: header row, comma separated, LF newlines, reals printed with 17
// significant digits so every value parses back to the same double.

/// "delta,count" rows, then "slope,stderr" and its row when a fit is given.
void write_box_count_csv(std::ostream& out, const BoxCountSeries& series,
                         const std::optional<DimensionEstimate>& fit = std::nullopt);

/// "depth,s,sum" rows; depth is taken from CoverSum::depth_or_delta.
void write_cover_sum_csv(std::ostream& out, const std::vector<CoverSum>& rows);

/// "s,c,samples,delta_min,delta_max,rng_seed,hs_lower_bound" and one row.
void write_certificate_csv(std::ostream& out, const MddCertificate& cert);

struct BoxCountTable {
    BoxCountSeries series;
    std::optional<double> slope;
    std::optional<double> stderr_slope;
};

/// Readers for the formats above; throw ParseError on malformed input.
BoxCountTable read_box_count_csv(std::istream& in);
std::vector<CoverSum> read_cover_sum_csv(std::istream& in);
MddCertificate read_certificate_csv(std::istream& in);

}  // namespace hausdim
