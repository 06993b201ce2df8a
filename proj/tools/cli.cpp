#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "primewalk/checkpoint.hpp"
#include "primewalk/csv.hpp"
#include "primewalk/io.hpp"
#include "primewalk/primes.hpp"
#include "primewalk/raster.hpp"
#include "primewalk/stats.hpp"
#include "primewalk/version.hpp"
#include "primewalk/walk.hpp"

namespace primewalk::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string mode;  // "pw" | "prw"
    uint64_t limit = 0;
    uint64_t cadence = 1'000'000;
    std::optional<uint64_t> seed;
    std::string checkpoint_path;  // resume source, empty = fresh
    std::string output_dir = ".";
    std::string count_mode = "dwell";  // dwell | arrival | both
    uint64_t segment_size = SieveConfig::default_segment_size;
};

void write_manifest(const RunConfig& config, const WalkState& state, double wall_seconds) {
    nlohmann::json manifest;
    manifest["version"] = version_string;
    manifest["command"] = "run";
    manifest["mode"] = config.mode;
    manifest["limit"] = config.limit;
    manifest["cadence"] = config.cadence;
    manifest["segment_size"] = config.segment_size;
    if (state.mode == WalkMode::prw) {
        manifest["seed"] = state.seed;  // original seed even across resumes
        manifest["prng_algorithm"] = PrngSpec::algorithm;
    } else {
        manifest["seed"] = nullptr;
        manifest["prng_algorithm"] = nullptr;
    }
    manifest["count_mode"] = config.count_mode;
    manifest["resumed_from"] =
        config.checkpoint_path.empty() ? nlohmann::json(nullptr)
                                       : nlohmann::json(config.checkpoint_path);
    manifest["output_dir"] = config.output_dir;
    manifest["wall_time_seconds"] = wall_seconds;
    manifest["files"] = {{"snapshots", "snapshots.csv"}, {"checkpoint", "grid.ckpt"}};

    const Bbox& box = state.dwell.bbox();
    manifest["final"] = {
        {"n", state.n},
        {"x", state.position.x},
        {"y", state.position.y},
        {"area", state.dwell.area()},
        {"z_max", state.z_max},
        {"bbox", {box.min_x, box.max_x, box.min_y, box.max_y}},
        {"pi_n", state.prime_count},
        {"interior_unvisited", box.cell_count() - state.dwell.area()},
    };

    std::filesystem::path out(config.output_dir);
    write_text_file(manifest.dump(2) + "\n", (out / "manifest.json").string());
}

int cmd_run(const RunConfig& config) {
    bool track_arrival = config.count_mode != "dwell";
    WalkState state;
    if (!config.checkpoint_path.empty()) {
        if (config.seed) {
            std::cerr << "run: a resumed run takes its generator state from the "
                         "checkpoint; --seed is not allowed\n";
            return exit_usage;
        }
        state = checkpoint_read_file(config.checkpoint_path);
        if ((state.mode == WalkMode::prw) != (config.mode == "prw")) {
            std::cerr << "run: --mode does not match the checkpoint's mode\n";
            return exit_usage;
        }
        if (state.track_arrival != track_arrival) {
            std::cerr << "run: --count-mode does not match the checkpoint "
                      << (state.track_arrival ? "(arrival counts present)\n"
                                              : "(no arrival counts)\n");
            return exit_usage;
        }
    } else if (config.mode == "prw") {
        if (!config.seed) {
            std::cerr << "run: --seed is required for --mode prw\n";
            return exit_usage;
        }
        state = WalkState::fresh_prw(PrngSpec{*config.seed}, track_arrival);
    } else {
        if (config.seed) {
            std::cerr << "run: --seed only applies to --mode prw\n";
            return exit_usage;
        }
        state = WalkState::fresh_pw(track_arrival);
    }

    WalkParams params;
    params.limit = config.limit;
    params.cadence = config.cadence;
    params.segment_size = config.segment_size;

    auto t0 = std::chrono::steady_clock::now();
    WalkSeries series = run_walk(state, params);
    double wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0).count();

    std::filesystem::path out(config.output_dir);
    std::filesystem::create_directories(out);
    write_text_file(snapshots_csv(series.snapshots), (out / "snapshots.csv").string());
    checkpoint_write_file(state, (out / "grid.ckpt").string());
    write_manifest(config, state, wall_seconds);

    std::cout << config.mode << " run to n=" << state.n << ": area=" << state.dwell.area()
              << " z_max=" << state.z_max << " pi_n=" << state.prime_count
              << " snapshots=" << series.snapshots.size() << "\n"
              << "wrote " << (out / "snapshots.csv").string() << ", "
              << (out / "grid.ckpt").string() << ", " << (out / "manifest.json").string()
              << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// stats helpers
// ---------------------------------------------------------------------------

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-")
        std::cout << text;
    else
        write_text_file(text, output_path);
}

// Grid view selected by the --arrival flag.
const VisitGrid& select_view(const WalkState& state, bool arrival) {
    if (!arrival) return state.dwell;
    return arrival_counts(state);  // throws logic_error if absent
}

std::vector<uint64_t> parse_epsilon_list(const std::string& text) {
    std::vector<uint64_t> eps;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = comma == std::string::npos ? text.substr(start)
                                                      : text.substr(start, comma - start);
        if (item.empty())
            throw std::invalid_argument("--epsilons: empty list item");
        errno = 0;
        char* end = nullptr;
        unsigned long long v = std::strtoull(item.c_str(), &end, 10);
        if (end != item.c_str() + item.size() || errno == ERANGE || v == 0)
            throw std::invalid_argument("--epsilons: bad value '" + item + "'");
        eps.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return eps;
}

} // namespace

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args) {
    CLI::App app{"prime walk simulator and statistics toolkit"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    // ---- run ----
    RunConfig run_config;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a walk and write its outputs");
    run_cmd->add_option("--mode", run_config.mode, "walk kind")
        ->required()
        ->check(CLI::IsMember({"pw", "prw"}));
    run_cmd->add_option("--limit", run_config.limit, "last integer to assign")
        ->required()
        ->check(CLI::Range(uint64_t(1), UINT64_MAX));
    run_cmd->add_option("--cadence", run_config.cadence, "snapshot every this many integers")
        ->check(CLI::Range(uint64_t(1), UINT64_MAX));
    run_cmd->add_option("--seed", run_config.seed, "PRNG seed (prw only)");
    run_cmd->add_option("--checkpoint", run_config.checkpoint_path,
                        "resume from this checkpoint file");
    run_cmd->add_option("--out", run_config.output_dir, "output directory")
        ->envname("PRIMEWALK_OUT");
    run_cmd->add_option("--count-mode", run_config.count_mode,
                        "dwell counts only, or arrival counts alongside")
        ->check(CLI::IsMember({"dwell", "arrival", "both"}));
    run_cmd->add_option("--segment-size", run_config.segment_size, "sieve window size")
        ->envname("PRIMEWALK_SEGMENT_SIZE")
        ->check(CLI::Range(uint64_t(2), UINT64_MAX));

    // ---- stats ----
    CLI::App* stats_cmd = app.add_subcommand("stats", "compute tables from existing outputs");
    stats_cmd->require_subcommand(1);

    std::string ckpt_path, output_path;
    bool axis_only = false, use_arrival = false;

    CLI::App* benford = stats_cmd->add_subcommand("benford", "leading-digit histogram of cell counts");
    benford->add_option("checkpoint", ckpt_path, "grid checkpoint")->required();
    benford->add_flag("--axis-only", axis_only, "only cells on the y = 0 line");
    benford->add_flag("--arrival", use_arrival, "use arrival counts");
    benford->add_option("-o,--output", output_path, "output file (default stdout)");

    std::optional<uint64_t> fit_lo, fit_hi;
    CLI::App* zhist = stats_cmd->add_subcommand("zhist", "histogram of cell counts with log-linear fit");
    zhist->add_option("checkpoint", ckpt_path, "grid checkpoint")->required();
    zhist->add_option("--fit-lo", fit_lo, "lowest count included in the fit");
    zhist->add_option("--fit-hi", fit_hi, "highest count included in the fit");
    zhist->add_flag("--arrival", use_arrival, "use arrival counts");
    zhist->add_option("-o,--output", output_path, "output file (default stdout)");

    std::string epsilons_text;
    CLI::App* boxdim = stats_cmd->add_subcommand("boxdim", "box-counting dimension estimate");
    boxdim->add_option("checkpoint", ckpt_path, "grid checkpoint")->required();
    boxdim->add_option("--epsilons", epsilons_text,
                       "comma-separated box sides (default: powers of 2)");
    boxdim->add_flag("--arrival", use_arrival, "use arrival counts");
    boxdim->add_option("-o,--output", output_path, "output file (default stdout)");

    std::string pw_path;
    std::vector<std::string> prw_paths;
    CLI::App* ratios = stats_cmd->add_subcommand("ratios", "PW vs pRW ratio table");
    ratios->add_option("--pw", pw_path, "PW snapshots.csv")->required();
    ratios->add_option("--prw", prw_paths, "pRW snapshots.csv (repeatable)")->required();
    ratios->add_option("-o,--output", output_path, "output file (default stdout)");

    uint64_t gaps_limit = 0;
    uint64_t segment_size = SieveConfig::default_segment_size;
    CLI::App* gaps = stats_cmd->add_subcommand("gaps", "consecutive prime gap histogram");
    gaps->add_option("--limit", gaps_limit, "count gaps between primes up to this bound")
        ->required()
        ->check(CLI::Range(uint64_t(3), UINT64_MAX));
    gaps->add_option("--segment-size", segment_size, "sieve window size")
        ->envname("PRIMEWALK_SEGMENT_SIZE")
        ->check(CLI::Range(uint64_t(2), UINT64_MAX));
    gaps->add_option("-o,--output", output_path, "output file (default stdout)");

    uint64_t pairs_first = 0;
    CLI::App* pairs = stats_cmd->add_subcommand("pairs", "consecutive last-digit pair matrix");
    pairs->add_option("--first", pairs_first, "number of leading primes to pair up")
        ->required()
        ->check(CLI::Range(uint64_t(2), UINT64_MAX));
    pairs->add_option("--segment-size", segment_size, "sieve window size")
        ->envname("PRIMEWALK_SEGMENT_SIZE")
        ->check(CLI::Range(uint64_t(2), UINT64_MAX));
    pairs->add_option("-o,--output", output_path, "output file (default stdout)");

    std::string snapshots_path;
    uint64_t fit_from = 0, fit_to = UINT64_MAX;
    CLI::App* areafit = stats_cmd->add_subcommand("areafit", "through-origin fit of area vs n");
    areafit->add_option("--snapshots", snapshots_path, "snapshots.csv")->required();
    areafit->add_option("--from", fit_from, "lowest n included");
    areafit->add_option("--to", fit_to, "highest n included");
    areafit->add_option("-o,--output", output_path, "output file (default stdout)");

    // ---- export-raster ----
    std::string scale_text = "log";
    bool plain = false;
    CLI::App* raster_cmd = app.add_subcommand("export-raster", "write the grid as a PGM image");
    raster_cmd->add_option("checkpoint", ckpt_path, "grid checkpoint")->required();
    raster_cmd->add_option("--scale", scale_text, "pixel scaling")
        ->check(CLI::IsMember({"binary", "linear", "log"}));
    raster_cmd->add_flag("--plain", plain, "plain-text P2 instead of binary P5");
    raster_cmd->add_flag("--arrival", use_arrival, "use arrival counts");
    raster_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_config);

        if (benford->parsed()) {
            WalkState state = checkpoint_read_file(ckpt_path);
            emit(benford_csv(benford_histogram(select_view(state, use_arrival), axis_only)),
                 output_path);
            return exit_ok;
        }
        if (zhist->parsed()) {
            WalkState state = checkpoint_read_file(ckpt_path);
            std::optional<ZFitRange> range;
            if (fit_lo || fit_hi) {
                const VisitGrid& grid = select_view(state, use_arrival);
                ZFitRange r;
                r.z_lo = fit_lo.value_or(1);
                r.z_hi = fit_hi.value_or(grid.max_count());
                range = r;
            }
            emit(zhist_csv(z_histogram(select_view(state, use_arrival), range)), output_path);
            return exit_ok;
        }
        if (boxdim->parsed()) {
            WalkState state = checkpoint_read_file(ckpt_path);
            const VisitGrid& grid = select_view(state, use_arrival);
            std::vector<uint64_t> eps = epsilons_text.empty()
                                            ? default_epsilons(grid.bbox())
                                            : parse_epsilon_list(epsilons_text);
            emit(boxdim_csv(box_count(grid, std::move(eps))), output_path);
            return exit_ok;
        }
        if (ratios->parsed()) {
            std::vector<WalkSnapshot> pw = parse_snapshots_csv(read_text_file(pw_path));
            std::vector<std::vector<WalkSnapshot>> prw_sets;
            for (const std::string& path : prw_paths)
                prw_sets.push_back(parse_snapshots_csv(read_text_file(path)));
            emit(ratios_csv(ratio_series(pw, prw_sets)), output_path);
            return exit_ok;
        }
        if (gaps->parsed()) {
            emit(gaps_csv(gap_histogram(gaps_limit, segment_size)), output_path);
            return exit_ok;
        }
        if (pairs->parsed()) {
            emit(pairs_csv(pair_matrix(pairs_first, segment_size)), output_path);
            return exit_ok;
        }
        if (areafit->parsed()) {
            std::vector<WalkSnapshot> snapshots =
                parse_snapshots_csv(read_text_file(snapshots_path));
            emit(areafit_csv(area_slope_fit(snapshots, fit_from, fit_to), fit_from, fit_to),
                 output_path);
            return exit_ok;
        }
        if (raster_cmd->parsed()) {
            WalkState state = checkpoint_read_file(ckpt_path);
            RasterScale scale = scale_text == "binary"  ? RasterScale::binary
                                : scale_text == "linear" ? RasterScale::linear
                                                         : RasterScale::log;
            Raster raster = rasterize(select_view(state, use_arrival), scale);
            if (output_path.empty() || output_path == "-")
                std::cout << pgm_encode(raster, plain);
            else
                pgm_write_file(raster, output_path, plain);
            return exit_ok;
        }
    } catch (const CheckpointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace primewalk::cli
