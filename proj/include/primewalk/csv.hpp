#pragma once

// CSV encoders for the exported tables, plus a strict reader for
// snapshot series. All tables are UTF-8, LF line endings, one header row,
// numeric-only fields. Encoders are byte-deterministic.

#include <cstdint>
#include <string>
#include <vector>

#include "primewalk/primes.hpp"
#include "primewalk/stats.hpp"
#include "primewalk/walk.hpp"

namespace primewalk {

// Raised on malformed CSV input; the message names the offending field.
class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest-ish deterministic rendering, 12 significant digits.
std::string format_double(double v);

// snapshots.csv
// n,x,y,area,z_max,bbox_min_x,bbox_max_x,bbox_min_y,bbox_max_y,interior_unvisited,pi_n
std::string snapshots_csv(const std::vector<WalkSnapshot>& snapshots);
std::vector<WalkSnapshot> parse_snapshots_csv(const std::string& text);

// benford.csv: digit,count,proportion,benford_expected,abs_deviation
std::string benford_csv(const LeadingDigitHistogram& hist);

// zhist.csv: "# fit: ..." comment, then z,count
std::string zhist_csv(const ZHistogram& hist);

// boxdim.csv: "# d_f=..., residual=..." comment, then epsilon,occupied
std::string boxdim_csv(const BoxCountSeries& series);

// ratios.csv:
// n,pi_n,n_over_ln_n,area_pw,area_prw_mean,pi_over_area_pw,pi_over_area_prw,prw_over_pw,z_max_pw,z_max_prw_mean
std::string ratios_csv(const RatioSeries& series);

// gaps.csv: gap,count
std::string gaps_csv(const GapHistogram& hist);

// pairs.csv: d1,d2,count,expected_uniform,deviation
std::string pairs_csv(const PairMatrix& matrix);

// areafit.csv: b,std_error,points,n_lo,n_hi
std::string areafit_csv(const AreaSlopeFit& fit, uint64_t n_lo, uint64_t n_hi);

// Atomic text write (temporary file, then rename); throws on I/O failure.
void write_text_file(const std::string& text, const std::string& path);
std::string read_text_file(const std::string& path);

} // namespace primewalk
