// Acceptance suite. Runs every gate end to end and prints one line per
// criterion; exits nonzero if any executed gate fails. The full suite
// performs walks up to 10^9 and takes a few minutes.
//
// Criteria sets:
//   (no argument) / all  -- every criterion, 1..13
//   core                 -- all but the two area-ratio targets
//   area-ratios         -- only criteria 5 and 6
//
// Criteria 5 and 6 pin area ratios (pRW/PW near 2, PW area near pi(N)/10)
// that the walk defined here measurably does not attain; they are kept
// faithful and expected to fail, with the measured values printed. The
// ctest wiring runs them under an expected-failure marker so a change in
// either direction surfaces.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "primewalk/checkpoint.hpp"
#include "primewalk/csv.hpp"
#include "primewalk/primes.hpp"
#include "primewalk/raster.hpp"
#include "primewalk/stats.hpp"
#include "primewalk/walk.hpp"

using namespace primewalk;

namespace {

struct Harness {
    int failures = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void report(int id, const std::string& what, bool ok, const std::string& detail) {
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started).count();
        started = std::chrono::steady_clock::now();
        std::printf("[%s] %2d %s (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                    detail.c_str(), elapsed);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------------
// Independent box-count oracles
// ---------------------------------------------------------------------------

// Brute force over an explicit cell list: normalize, sort, count unique.
uint64_t brute_force_boxes(const std::vector<GridCoord>& cells, const Bbox& box,
                           uint64_t eps) {
    std::vector<std::pair<uint64_t, uint64_t>> indices;
    indices.reserve(cells.size());
    for (const GridCoord& c : cells)
        indices.emplace_back(uint64_t(c.x - box.min_x) / eps, uint64_t(c.y - box.min_y) / eps);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices.size();
}

// Minimal binary-PGM reader for the raster cross-check.
struct ParsedPgm {
    uint64_t width = 0, height = 0;
    std::vector<uint8_t> pixels;
};

ParsedPgm parse_pgm(const std::string& bytes) {
    ParsedPgm pgm;
    std::size_t pos = 0;
    auto token = [&]() -> std::string {
        while (true) {
            while (pos < bytes.size() && (bytes[pos] == ' ' || bytes[pos] == '\n' ||
                                          bytes[pos] == '\t' || bytes[pos] == '\r')) {
                ++pos;
            }
            if (pos < bytes.size() && bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        std::size_t start = pos;
        while (pos < bytes.size() && bytes[pos] != ' ' && bytes[pos] != '\n' &&
               bytes[pos] != '\t' && bytes[pos] != '\r') {
            ++pos;
        }
        return bytes.substr(start, pos - start);
    };
    if (token() != "P5") throw std::runtime_error("not a P5 pgm");
    pgm.width = std::stoull(token());
    pgm.height = std::stoull(token());
    if (token() != "255") throw std::runtime_error("unexpected maxval");
    ++pos;  // single whitespace after maxval
    if (bytes.size() - pos != pgm.width * pgm.height)
        throw std::runtime_error("pgm payload size mismatch");
    pgm.pixels.assign(bytes.begin() + pos, bytes.end());
    return pgm;
}

// Box counting straight off raster pixels; row 0 holds max_y.
uint64_t raster_boxes(const ParsedPgm& pgm, uint64_t eps) {
    std::set<std::pair<uint64_t, uint64_t>> boxes;
    for (uint64_t row = 0; row < pgm.height; ++row) {
        for (uint64_t col = 0; col < pgm.width; ++col) {
            if (pgm.pixels[row * pgm.width + col] == 0) continue;
            boxes.insert({col / eps, (pgm.height - 1 - row) / eps});
        }
    }
    return boxes.size();
}

// Dihedral transforms as integer 2x2 matrices.
struct Transform {
    int64_t a, b, c, d;  // (x, y) -> (a x + b y, c x + d y)
    GridCoord apply(GridCoord p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

constexpr Transform dihedral[8] = {
    {1, 0, 0, 1},   {0, -1, 1, 0},  {-1, 0, 0, -1}, {0, 1, -1, 0},
    {-1, 0, 0, 1},  {1, 0, 0, -1},  {0, 1, 1, 0},   {0, -1, -1, 0},
};

Move transform_move(const Transform& t, Move m) {
    GridCoord v = t.apply(apply_move({0, 0}, m));
    if (v.x == 0 && v.y == 1) return Move::up;
    if (v.x == 0 && v.y == -1) return Move::down;
    if (v.x == -1 && v.y == 0) return Move::left;
    if (v.x == 1 && v.y == 0) return Move::right;
    return Move::stay;
}

} // namespace

int run_criteria(bool core, bool ratios);

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "all";
    bool core = mode == "all" || mode == "core";
    bool ratios = mode == "all" || mode == "area-ratios";
    if (!core && !ratios) {
        std::fprintf(stderr, "usage: acceptance [all|core|area-ratios]\n");
        return 2;
    }
    try {
        return run_criteria(core, ratios);
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance suite aborted: %s\n", e.what());
        return 1;
    }
}

int run_criteria(bool core, bool ratios) {
    Harness harness;

    // ---- 1: sieve counts match the trial-division oracle --------------------
    if (core) try {
        uint64_t oracle_1e6 = 0;
        for (uint64_t n = 2; n <= 1'000'000; ++n)
            if (is_prime_reference(n)) ++oracle_1e6;
        uint64_t sieve_1e6 = prime_count(1'000'000);
        uint64_t sieve_1e8 = prime_count(100'000'000);
        // 5,761,455 derived once with the same trial-division oracle
        const uint64_t oracle_1e8 = 5'761'455;
        bool ok = sieve_1e6 == oracle_1e6 && sieve_1e6 == 78'498 && sieve_1e8 == oracle_1e8;
        harness.report(1, "sieve matches trial-division oracle", ok,
                       fmt("pi(1e6)=%llu oracle=%llu, pi(1e8)=%llu expected=%llu",
                           (unsigned long long)sieve_1e6, (unsigned long long)oracle_1e6,
                           (unsigned long long)sieve_1e8, (unsigned long long)oracle_1e8));
    } catch (const std::exception& e) {
        harness.report(1, "sieve matches trial-division oracle", false, e.what());
    }

    // ---- 2: hand-traced walk to 13 ------------------------------------------
    if (core) try {
        WalkResult result = run_pw(13, 1);
        bool ok = result.grid().area() == 4 && result.state.z_max == 5 &&
                  result.grid().at({0, 0}) == 2 && result.grid().at({0, -1}) == 4 &&
                  result.grid().at({-1, -1}) == 5 && result.grid().at({-1, 0}) == 2 &&
                  result.grid().sum() == 13;
        harness.report(2, "hand trace at limit 13 is exact", ok,
                       fmt("area=%llu z_max=%llu",
                           (unsigned long long)result.grid().area(),
                           (unsigned long long)result.state.z_max));
    } catch (const std::exception& e) {
        harness.report(2, "hand trace at limit 13 is exact", false, e.what());
    }

    // shared runs at 10^8
    WalkResult pw_1e8 = run_pw(100'000'000, 100'000'000);
    std::vector<WalkResult> prw_1e8;
    for (uint64_t seed : {1, 2, 3})
        prw_1e8.push_back(run_prw(100'000'000, PrngSpec{seed}, 100'000'000));

    // ---- 3: dwell counts sum to N -------------------------------------------
    if (core) try {
        uint64_t sum_1e3 = run_pw(1000, 1000).grid().sum();
        uint64_t sum_1e6 = run_pw(1'000'000, 1'000'000).grid().sum();
        uint64_t sum_1e8 = pw_1e8.grid().sum();
        bool ok = sum_1e3 == 1000 && sum_1e6 == 1'000'000 && sum_1e8 == 100'000'000;
        harness.report(3, "dwell counts sum to N at 1e3/1e6/1e8", ok,
                       fmt("%llu/%llu/%llu", (unsigned long long)sum_1e3,
                           (unsigned long long)sum_1e6, (unsigned long long)sum_1e8));
    } catch (const std::exception& e) {
        harness.report(3, "dwell counts sum to N at 1e3/1e6/1e8", false, e.what());
    }

    // ---- 4: dihedral remappings transform the grid exactly ------------------
    if (core) try {
        const uint64_t limit = 100'000;
        WalkResult base = run_pw(limit, limit);
        bool ok = true;
        std::string first_bad;
        for (int t = 0; t < 8 && ok; ++t) {
            const Transform& tr = dihedral[t];
            MoveTable table = MoveTable::canonical();
            for (Move& m : table.by_digit) m = transform_move(tr, m);
            WalkParams params;
            params.table = table;
            WalkResult image = run_pw(limit, limit, params);
            if (image.grid().area() != base.grid().area()) ok = false;
            base.grid().for_each([&](GridCoord c, uint64_t v) {
                if (image.grid().at(tr.apply(c)) != v) ok = false;
            });
            if (!ok) first_bad = fmt("transform %d", t);
        }
        harness.report(4, "all 8 dihedral move permutations commute", ok,
                       ok ? fmt("area=%llu at limit 1e5",
                                (unsigned long long)base.grid().area())
                          : first_bad);
    } catch (const std::exception& e) {
        harness.report(4, "all 8 dihedral move permutations commute", false, e.what());
    }

    // ---- 5: pRW covers about twice the PW area ------------------------------
    double mean_area_1e8 = 0;
    if (ratios) try {
        for (const WalkResult& r : prw_1e8)
            mean_area_1e8 += double(r.grid().area()) / double(prw_1e8.size());
        double ratio_1e8 = mean_area_1e8 / double(pw_1e8.grid().area());

        WalkResult pw_1e9 = run_pw(1'000'000'000, 1'000'000'000);
        double mean_area_1e9 = 0;
        for (uint64_t seed : {1, 2, 3}) {
            WalkResult r = run_prw(1'000'000'000, PrngSpec{seed}, 1'000'000'000);
            mean_area_1e9 += double(r.grid().area()) / 3.0;
        }
        double ratio_1e9 = mean_area_1e9 / double(pw_1e9.grid().area());
        bool ok = ratio_1e8 >= 1.6 && ratio_1e8 <= 2.4 && ratio_1e9 >= 1.8 && ratio_1e9 <= 2.2;
        harness.report(5, "pRW/PW area ratio near 2", ok,
                       fmt("1e8: %.3f in [1.6,2.4], 1e9: %.3f in [1.8,2.2] "
                           "(pw area %llu/%llu, prw mean %.0f/%.0f)",
                           ratio_1e8, ratio_1e9, (unsigned long long)pw_1e8.grid().area(),
                           (unsigned long long)pw_1e9.grid().area(), mean_area_1e8,
                           mean_area_1e9));

        // ---- 6: PW area is about a tenth of pi(N) at 10^9 -------------------
        double area_over_pi =
            double(pw_1e9.grid().area()) / double(pw_1e9.state.prime_count);
        double prw_area_over_pi = mean_area_1e9 / double(pw_1e9.state.prime_count);
        bool ok6 = area_over_pi >= 0.08 && area_over_pi <= 0.12;
        harness.report(6, "PW area / pi(N) near 1/10 at 1e9", ok6,
                       fmt("area=%llu pi=%llu ratio=%.4f in [0.08,0.12] "
                           "(pRW-area reading: %.4f)",
                           (unsigned long long)pw_1e9.grid().area(),
                           (unsigned long long)pw_1e9.state.prime_count, area_over_pi,
                           prw_area_over_pi));
    } catch (const std::exception& e) {
        harness.report(5, "pRW/PW area ratio near 2", false, e.what());
        harness.report(6, "PW area / pi(N) near 1/10 at 1e9", false, e.what());
    }

    // ---- 7: PW revisits harder: larger z_max --------------------------------
    // The gate is the ordering property; the ratio itself has no pinned
    // convergence scale and is reported alongside its anticipated band.
    if (core) try {
        double mean_zmax = 0;
        for (const WalkResult& r : prw_1e8) mean_zmax += double(r.state.z_max) / 3.0;
        double ratio = double(pw_1e8.state.z_max) / mean_zmax;
        bool in_band = ratio >= 1.2 && ratio <= 2.0;
        bool ok = double(pw_1e8.state.z_max) > mean_zmax;
        harness.report(7, "PW z_max above mean pRW z_max at 1e8", ok,
                       fmt("pw=%llu prw_mean=%.0f ratio=%.3f (expected band [1.2,2.0] %s)",
                           (unsigned long long)pw_1e8.state.z_max, mean_zmax, ratio,
                           in_band ? "met" : "missed"));
    } catch (const std::exception& e) {
        harness.report(7, "PW z_max above mean pRW z_max at 1e8", false, e.what());
    }

    // ---- 8: dwell counts follow Benford's law at 5.5e7 -----------------------
    if (core) try {
        WalkResult pw_55 = run_pw(55'000'000, 55'000'000);
        LeadingDigitHistogram h = benford_histogram(pw_55.grid());
        bool ok = h.max_abs_deviation <= 0.02;
        harness.report(8, "leading digits of dwell counts match Benford", ok,
                       fmt("max deviation %.4f <= 0.02 over %llu cells (z_max=%llu)",
                           h.max_abs_deviation, (unsigned long long)h.total,
                           (unsigned long long)pw_55.state.z_max));
    } catch (const std::exception& e) {
        harness.report(8, "leading digits of dwell counts match Benford", false, e.what());
    }

    // ---- 9: box-count dimension at 1e8, cross-checked on the raster ---------
    if (core) try {
        BoxCountSeries series = box_count(pw_1e8.grid(), default_epsilons(pw_1e8.grid().bbox()));
        ParsedPgm pgm = parse_pgm(pgm_encode(rasterize(pw_1e8.grid(), RasterScale::binary)));
        bool counts_match = true;
        for (const BoxCountEntry& e : series.entries)
            if (raster_boxes(pgm, e.epsilon) != e.occupied) counts_match = false;
        bool ok = series.d_f && *series.d_f >= 1.80 && *series.d_f <= 1.95 && counts_match;
        harness.report(9, "fractal dimension near 1.91 and raster oracle agrees", ok,
                       fmt("d_f=%.4f in [1.80,1.95], %zu epsilons, raster match=%s",
                           series.d_f ? *series.d_f : -1.0, series.entries.size(),
                           counts_match ? "yes" : "no"));
    } catch (const std::exception& e) {
        harness.report(9, "fractal dimension near 1.91 and raster oracle agrees", false,
                       e.what());
    }

    // ---- 10: the most common prime gap up to 1e8 is 6 ------------------------
    if (core) try {
        GapHistogram gaps = gap_histogram(100'000'000);
        bool ok = gaps.mode() == 6;
        harness.report(10, "jumping champion at 1e8 is 6", ok,
                       fmt("mode=%llu max_gap=%llu", (unsigned long long)gaps.mode(),
                           (unsigned long long)gaps.max_gap));
    } catch (const std::exception& e) {
        harness.report(10, "jumping champion at 1e8 is 6", false, e.what());
    }

    // ---- 11: repeated last digits are under-represented ----------------------
    if (core) try {
        PairMatrix matrix = pair_matrix(10'000'000);
        double expected = matrix.expected_uniform();
        bool ok = true;
        for (int d = 0; d < 4; ++d)
            if (double(matrix.counts[d][d]) >= expected) ok = false;
        harness.report(11, "repeated-digit pairs below uniform share", ok,
                       fmt("diagonal %llu/%llu/%llu/%llu all < %.0f",
                           (unsigned long long)matrix.counts[0][0],
                           (unsigned long long)matrix.counts[1][1],
                           (unsigned long long)matrix.counts[2][2],
                           (unsigned long long)matrix.counts[3][3], expected));
    } catch (const std::exception& e) {
        harness.report(11, "repeated-digit pairs below uniform share", false, e.what());
    }

    // ---- 12: checkpoint resume is byte-identical -----------------------------
    if (core) try {
        const uint64_t mid = 1'000'000, limit = 2'000'000, cadence = 100'000;
        bool ok = true;

        for (int mode = 0; mode < 2 && ok; ++mode) {
            WalkResult direct, first_leg;
            if (mode == 0) {
                direct = run_pw(limit, cadence);
                first_leg = run_pw(mid, cadence);
            } else {
                direct = run_prw(limit, PrngSpec{42}, cadence);
                first_leg = run_prw(mid, PrngSpec{42}, cadence);
            }
            std::vector<uint8_t> ckpt = checkpoint_save(first_leg.state);
            WalkState resumed = checkpoint_load(ckpt);
            WalkParams params;
            params.limit = limit;
            params.cadence = cadence;
            WalkSeries tail = run_walk(resumed, params);

            std::vector<WalkSnapshot> combined = first_leg.snapshots();
            combined.insert(combined.end(), tail.snapshots.begin(), tail.snapshots.end());
            if (snapshots_csv(combined) != snapshots_csv(direct.snapshots())) ok = false;
            if (checkpoint_save(resumed) != checkpoint_save(direct.state)) ok = false;
        }
        harness.report(12, "resume from checkpoint is byte-identical", ok,
                       "pw and prw, 1e6 -> 2e6");
    } catch (const std::exception& e) {
        harness.report(12, "resume from checkpoint is byte-identical", false, e.what());
    }

    // ---- 13: box counting agrees with brute force on random grids ------------
    if (core) try {
        Mt19937 rng(2024);
        bool ok = true;
        for (int round = 0; round < 20 && ok; ++round) {
            VisitGrid grid;
            std::vector<GridCoord> cells;
            uint64_t n_cells = 100 + rng.next_u32() % 9901;  // up to 10^4
            int64_t span = 1 + rng.next_u32() % 1000;
            for (uint64_t i = 0; i < n_cells; ++i) {
                GridCoord c{int64_t(rng.next_u32() % span) - span / 2,
                            int64_t(rng.next_u32() % span) - span / 2};
                if (grid.at(c) == 0) cells.push_back(c);
                grid.add(c, 1 + rng.next_u32() % 100);
            }
            std::vector<uint64_t> epsilons{1, 2, 3, 4, 5, 7, 8, 16, 31, 64};
            BoxCountSeries series = box_count(grid, epsilons);
            for (const BoxCountEntry& e : series.entries) {
                if (brute_force_boxes(cells, grid.bbox(), e.epsilon) != e.occupied) ok = false;
            }
        }
        harness.report(13, "box counts equal brute force on 20 random grids", ok,
                       "epsilons 1..64, up to 1e4 cells");
    } catch (const std::exception& e) {
        harness.report(13, "box counts equal brute force on 20 random grids", false, e.what());
    }

    if (harness.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", harness.failures);
    return 1;
}
