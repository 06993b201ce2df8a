#pragma once

// Statistics over walk grids and snapshot series: leading-digit (Benford)
// histograms, dwell-count histograms with log-linear fits, box-counting
// dimension estimates, aligned PW/pRW ratio tables and area slope fits.
//
// Everything here is a pure function of immutable inputs.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "primewalk/grid.hpp"
#include "primewalk/walk.hpp"

namespace primewalk {

// ---------------------------------------------------------------------------
// Least squares
// ---------------------------------------------------------------------------

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

// Ordinary least squares of y against x. Precondition: sizes match, >= 2
// points (throws std::invalid_argument otherwise).
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Benford leading digits
// ---------------------------------------------------------------------------

struct LeadingDigitHistogram {
    // Index 1..9; index 0 unused.
    std::array<uint64_t, 10> counts{};
    std::array<double, 10> proportions{};
    std::array<double, 10> benford{};  // log10(1 + 1/d)
    uint64_t total = 0;
    double max_abs_deviation = 0.0;
};

// Leading decimal digit of v >= 1.
int leading_digit(uint64_t v);

// Tally leading digits of a non-empty sequence of positive integers.
// Throws std::invalid_argument on an empty input.
LeadingDigitHistogram benford_histogram(const std::vector<uint64_t>& values);

// Histogram over a grid's counts; when axis_only is set, only cells on the
// y = 0 line contribute.
LeadingDigitHistogram benford_histogram(const VisitGrid& grid, bool axis_only = false);

// ---------------------------------------------------------------------------
// Dwell-count histogram
// ---------------------------------------------------------------------------

struct ZFit {
    double a = 0.0;  // model: ln C(z) = b - a * z
    double b = 0.0;
    double rms_residual = 0.0;
    uint64_t z_lo = 0;
    uint64_t z_hi = 0;
};

struct ZHistogram {
    std::map<uint64_t, uint64_t> counts;  // z -> number of cells
    std::optional<ZFit> fit;              // empty when < 2 fit points
};

struct ZFitRange {
    uint64_t z_lo = 0;
    uint64_t z_hi = 0;
};

// Exact counts plus a least-squares fit of ln-counts against z over the
// fit range. Without an explicit range, z_lo defaults to the 10th
// percentile of the cell counts and z_hi to the largest count.
// Throws std::invalid_argument on an empty grid.
ZHistogram z_histogram(const VisitGrid& grid,
                       std::optional<ZFitRange> fit_range = std::nullopt);

// ---------------------------------------------------------------------------
// Box counting
// ---------------------------------------------------------------------------

struct BoxCountEntry {
    uint64_t epsilon = 0;   // box side, in cells
    uint64_t occupied = 0;  // boxes containing at least one visited cell
};

struct BoxCountSeries {
    std::vector<BoxCountEntry> entries;  // sorted by epsilon
    std::optional<double> d_f;           // slope of log(occupied) vs log(1/eps)
    double residual = 0.0;               // rms residual of that fit
};

// Default epsilon schedule: powers of 2 from 1 to min(bbox W, H) / 4.
std::vector<uint64_t> default_epsilons(const Bbox& box);

// Count occupied boxes for each epsilon on a mesh anchored at the bbox
// minimum corner. Preconditions: non-empty grid; epsilons positive,
// distinct, each <= max(bbox W, H). Throws std::invalid_argument.
BoxCountSeries box_count(const VisitGrid& grid, std::vector<uint64_t> epsilons);

// ---------------------------------------------------------------------------
// PW / pRW ratio series
// ---------------------------------------------------------------------------

struct RatioPoint {
    uint64_t n = 0;
    uint64_t pi_n = 0;
    double n_over_ln_n = 0.0;  // 0 at n = 1
    uint64_t area_pw = 0;
    double area_prw_mean = 0.0;
    double pi_over_area_pw = 0.0;
    double pi_over_area_prw = 0.0;
    double prw_over_pw = 0.0;
    uint64_t z_max_pw = 0;
    double z_max_prw_mean = 0.0;
};

struct RatioSeries {
    std::vector<RatioPoint> points;
};

// Combine a PW snapshot series with one or more pRW series taken on the
// same n grid. Throws std::invalid_argument naming the first mismatching
// index if the series do not align.
RatioSeries ratio_series(const std::vector<WalkSnapshot>& pw,
                         const std::vector<std::vector<WalkSnapshot>>& prw_sets);

// ---------------------------------------------------------------------------
// Area growth
// ---------------------------------------------------------------------------

struct AreaSlopeFit {
    double b = 0.0;        // area ~ b * n, fitted through the origin
    double std_error = 0.0;
    std::size_t points = 0;
};

// Through-origin least squares of area against n over snapshots with
// n_lo <= n <= n_hi. Throws std::invalid_argument with < 2 points in range.
AreaSlopeFit area_slope_fit(const std::vector<WalkSnapshot>& snapshots,
                            uint64_t n_lo, uint64_t n_hi);

} // namespace primewalk
