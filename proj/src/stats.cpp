#include "primewalk/stats.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace primewalk {

// ---------------------------------------------------------------------------
// Least squares
// ---------------------------------------------------------------------------

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("linear_fit: size mismatch");
    std::size_t n = x.size();
    if (n < 2)
        throw std::invalid_argument("linear_fit: need at least 2 points");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (y[i] - mean_y);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("linear_fit: degenerate x values");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
    return fit;
}

// ---------------------------------------------------------------------------
// Benford leading digits
// ---------------------------------------------------------------------------

int leading_digit(uint64_t v) {
    assert(v >= 1);
    while (v >= 10) v /= 10;
    return static_cast<int>(v);
}

namespace {

LeadingDigitHistogram finish_histogram(std::array<uint64_t, 10> counts, uint64_t total) {
    if (total == 0)
        throw std::invalid_argument("benford_histogram: empty input");
    LeadingDigitHistogram h;
    h.counts = counts;
    h.total = total;
    for (int d = 1; d <= 9; ++d) {
        h.proportions[d] = static_cast<double>(counts[d]) / static_cast<double>(total);
        h.benford[d] = std::log10(1.0 + 1.0 / d);
        h.max_abs_deviation =
            std::max(h.max_abs_deviation, std::abs(h.proportions[d] - h.benford[d]));
    }
    return h;
}

} // namespace

LeadingDigitHistogram benford_histogram(const std::vector<uint64_t>& values) {
    std::array<uint64_t, 10> counts{};
    for (uint64_t v : values) {
        if (v < 1)
            throw std::invalid_argument("benford_histogram: values must be >= 1");
        ++counts[leading_digit(v)];
    }
    return finish_histogram(counts, values.size());
}

LeadingDigitHistogram benford_histogram(const VisitGrid& grid, bool axis_only) {
    std::array<uint64_t, 10> counts{};
    uint64_t total = 0;
    grid.for_each([&](GridCoord c, uint64_t v) {
        if (axis_only && c.y != 0) return;
        ++counts[leading_digit(v)];
        ++total;
    });
    return finish_histogram(counts, total);
}

// ---------------------------------------------------------------------------
// Dwell-count histogram
// ---------------------------------------------------------------------------

ZHistogram z_histogram(const VisitGrid& grid, std::optional<ZFitRange> fit_range) {
    if (grid.empty())
        throw std::invalid_argument("z_histogram: empty grid");

    ZHistogram hist;
    grid.for_each([&](GridCoord, uint64_t v) { ++hist.counts[v]; });

    ZFitRange range;
    if (fit_range) {
        range = *fit_range;
    } else {
        // default cut: drop counts below the 10th percentile of cell values
        uint64_t cells = grid.area();
        uint64_t rank = (cells + 9) / 10;  // 10th percentile, rounding up
        uint64_t running = 0;
        range.z_lo = hist.counts.begin()->first;
        for (const auto& [z, count] : hist.counts) {
            running += count;
            if (running >= rank) {
                range.z_lo = z;
                break;
            }
        }
        range.z_hi = hist.counts.rbegin()->first;
    }

    std::vector<double> xs, ys;
    for (const auto& [z, count] : hist.counts) {
        if (z < range.z_lo || z > range.z_hi || count == 0) continue;
        xs.push_back(static_cast<double>(z));
        ys.push_back(std::log(static_cast<double>(count)));
    }
    if (xs.size() >= 2) {
        LinearFit fit = linear_fit(xs, ys);
        ZFit zfit;
        zfit.a = -fit.slope;
        zfit.b = fit.intercept;
        zfit.rms_residual = fit.rms_residual;
        zfit.z_lo = range.z_lo;
        zfit.z_hi = range.z_hi;
        hist.fit = zfit;
    }
    return hist;
}

// ---------------------------------------------------------------------------
// Box counting
// ---------------------------------------------------------------------------

std::vector<uint64_t> default_epsilons(const Bbox& box) {
    uint64_t cap = std::min(box.width(), box.height()) / 4;
    std::vector<uint64_t> eps{1};
    for (uint64_t e = 2; e <= cap; e *= 2) eps.push_back(e);
    return eps;
}

BoxCountSeries box_count(const VisitGrid& grid, std::vector<uint64_t> epsilons) {
    if (grid.empty())
        throw std::invalid_argument("box_count: empty grid");
    const Bbox& box = grid.bbox();

    // boxes larger than the bounding box are allowed; they count as one
    std::sort(epsilons.begin(), epsilons.end());
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i] == 0)
            throw std::invalid_argument("box_count: epsilon must be positive");
        if (i > 0 && epsilons[i] == epsilons[i - 1])
            throw std::invalid_argument("box_count: duplicate epsilon");
    }

    BoxCountSeries series;
    std::unordered_set<uint64_t> boxes;
    for (uint64_t eps : epsilons) {
        boxes.clear();
        grid.for_each([&](GridCoord c, uint64_t) {
            uint64_t bx = static_cast<uint64_t>(c.x - box.min_x) / eps;
            uint64_t by = static_cast<uint64_t>(c.y - box.min_y) / eps;
            boxes.insert((by << 32) | bx);
        });
        series.entries.push_back({eps, boxes.size()});
    }

    if (series.entries.size() >= 2) {
        std::vector<double> xs, ys;
        for (const BoxCountEntry& e : series.entries) {
            xs.push_back(-std::log(static_cast<double>(e.epsilon)));
            ys.push_back(std::log(static_cast<double>(e.occupied)));
        }
        LinearFit fit = linear_fit(xs, ys);
        series.d_f = fit.slope;
        series.residual = fit.rms_residual;
        assert(*series.d_f >= -1e-9 && *series.d_f <= 2.0 + 1e-9);
    }
    return series;
}

// ---------------------------------------------------------------------------
// PW / pRW ratio series
// ---------------------------------------------------------------------------

RatioSeries ratio_series(const std::vector<WalkSnapshot>& pw,
                         const std::vector<std::vector<WalkSnapshot>>& prw_sets) {
    if (prw_sets.empty())
        throw std::invalid_argument("ratio_series: need at least one pRW series");
    for (std::size_t i = 1; i < pw.size(); ++i)
        if (pw[i].n <= pw[i - 1].n)
            throw std::invalid_argument("ratio_series: n must increase strictly, violated at index " +
                                        std::to_string(i));
    for (std::size_t s = 0; s < prw_sets.size(); ++s) {
        if (prw_sets[s].size() != pw.size())
            throw std::invalid_argument("ratio_series: pRW series " + std::to_string(s) +
                                        " has " + std::to_string(prw_sets[s].size()) +
                                        " snapshots, PW has " + std::to_string(pw.size()));
        for (std::size_t i = 0; i < pw.size(); ++i) {
            if (prw_sets[s][i].n != pw[i].n)
                throw std::invalid_argument(
                    "ratio_series: n mismatch at index " + std::to_string(i) + ": pw n=" +
                    std::to_string(pw[i].n) + ", prw set " + std::to_string(s) +
                    " n=" + std::to_string(prw_sets[s][i].n));
        }
    }

    RatioSeries series;
    series.points.reserve(pw.size());
    double n_sets = static_cast<double>(prw_sets.size());
    for (std::size_t i = 0; i < pw.size(); ++i) {
        RatioPoint pt;
        pt.n = pw[i].n;
        pt.pi_n = pw[i].prime_count;
        pt.n_over_ln_n =
            pt.n > 1 ? static_cast<double>(pt.n) / std::log(static_cast<double>(pt.n)) : 0.0;
        pt.area_pw = pw[i].area;
        double area_sum = 0.0, zmax_sum = 0.0;
        for (const auto& set : prw_sets) {
            area_sum += static_cast<double>(set[i].area);
            zmax_sum += static_cast<double>(set[i].z_max);
        }
        pt.area_prw_mean = area_sum / n_sets;
        pt.z_max_prw_mean = zmax_sum / n_sets;
        pt.pi_over_area_pw = static_cast<double>(pt.pi_n) / static_cast<double>(pt.area_pw);
        pt.pi_over_area_prw = static_cast<double>(pt.pi_n) / pt.area_prw_mean;
        pt.prw_over_pw = pt.area_prw_mean / static_cast<double>(pt.area_pw);
        pt.z_max_pw = pw[i].z_max;
        series.points.push_back(pt);
    }
    return series;
}

// ---------------------------------------------------------------------------
// Area growth
// ---------------------------------------------------------------------------

AreaSlopeFit area_slope_fit(const std::vector<WalkSnapshot>& snapshots,
                            uint64_t n_lo, uint64_t n_hi) {
    std::vector<double> ns, areas;
    for (const WalkSnapshot& s : snapshots) {
        if (s.n < n_lo || s.n > n_hi) continue;
        ns.push_back(static_cast<double>(s.n));
        areas.push_back(static_cast<double>(s.area));
    }
    if (ns.size() < 2)
        throw std::invalid_argument("area_slope_fit: need at least 2 snapshots in range");

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        sxx += ns[i] * ns[i];
        sxy += ns[i] * areas[i];
    }
    AreaSlopeFit fit;
    fit.b = sxy / sxx;
    fit.points = ns.size();
    double ss = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        double r = areas[i] - fit.b * ns[i];
        ss += r * r;
    }
    fit.std_error = std::sqrt(ss / static_cast<double>(ns.size() - 1) / sxx);
    return fit;
}

} // namespace primewalk
