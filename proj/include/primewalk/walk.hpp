#pragma once

// The prime walk and its seeded pseudo-random baseline.
//
// Integers are assigned to lattice cells in sequence: N = 1 starts at the
// origin, composites stay on the current cell, and each prime moves the
// walker one step chosen by its last decimal digit (1 up, 3 down, 7 left,
// 9 right; the exceptional primes 2 and 5 stay put). The random variant
// draws one of the four directions per prime from a seeded MT19937.
//
// Each cell's dwell count is the number of integers assigned to it, so the
// counts over all cells always sum to N. Arrival counts (one per actual
// move into a cell) can be tracked alongside.

#include <array>
#include <cstdint>
#include <vector>

#include "primewalk/grid.hpp"
#include "primewalk/mt19937.hpp"
#include "primewalk/primes.hpp"

namespace primewalk {

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

enum class Move : uint8_t { up, down, left, right, stay };

inline GridCoord apply_move(GridCoord c, Move m) {
    switch (m) {
        case Move::up: return {c.x, c.y + 1};
        case Move::down: return {c.x, c.y - 1};
        case Move::left: return {c.x - 1, c.y};
        case Move::right: return {c.x + 1, c.y};
        default: return c;
    }
}

// Digit-to-move map for the four possible last digits 1, 3, 7, 9.
// Remapping it by a rotation or reflection of the plane produces the
// correspondingly transformed walk.
struct MoveTable {
    std::array<Move, 4> by_digit;  // indexed like PairMatrix::digits

    static constexpr MoveTable canonical() {
        return {{Move::up, Move::down, Move::left, Move::right}};
    }
};

// Move for prime p under the given table; 2 and 5 stay.
// Precondition: p is prime (debug assertion).
Move step_for_prime(uint64_t p, const MoveTable& table = MoveTable::canonical());

// ---------------------------------------------------------------------------
// Random baseline
// ---------------------------------------------------------------------------

struct PrngSpec {
    // The one supported generator; recorded in manifests and checkpoints.
    static constexpr const char* algorithm = "mt19937";

    uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Snapshots
// ---------------------------------------------------------------------------

struct WalkSnapshot {
    uint64_t n = 0;               // integers assigned so far
    GridCoord position{};         // cell assigned to n
    uint64_t area = 0;            // distinct cells visited
    uint64_t z_max = 0;           // maximum dwell count
    Bbox bbox{};
    uint64_t interior_unvisited = 0;  // bbox cells minus area
    uint64_t prime_count = 0;     // exact pi(n)

    bool operator==(const WalkSnapshot&) const = default;
};

// ---------------------------------------------------------------------------
// Walk state and runner
// ---------------------------------------------------------------------------

enum class WalkMode : uint8_t { pw, prw };

struct WalkState {
    WalkMode mode = WalkMode::pw;
    bool track_arrival = false;

    uint64_t n = 0;            // last integer assigned; 0 = not started
    GridCoord position{};
    VisitGrid dwell;
    VisitGrid arrival;         // maintained only when track_arrival
    uint64_t z_max = 0;
    uint64_t interval_z_max = 0;  // max dwell count reached since the last snapshot
    uint64_t prime_count = 0;

    uint64_t seed = 0;         // prw only
    Mt19937 rng;               // prw only

    static WalkState fresh_pw(bool track_arrival = false);
    static WalkState fresh_prw(PrngSpec prng, bool track_arrival = false);
};

// Arrival-count view of a walk. Throws std::logic_error if the state was
// not tracking arrivals.
const VisitGrid& arrival_counts(const WalkState& state);

struct WalkParams {
    uint64_t limit = 0;
    uint64_t cadence = 1'000'000;  // snapshot every `cadence` integers
    uint64_t segment_size = SieveConfig::default_segment_size;
    MoveTable table = MoveTable::canonical();  // pw only
};

struct WalkSeries {
    std::vector<WalkSnapshot> snapshots;
    // Aligned with snapshots: max dwell count reached within each
    // inter-snapshot interval (the cumulative z_max never resets).
    std::vector<uint64_t> interval_z_max;
};

// Advance state to params.limit, emitting a snapshot at every multiple of
// params.cadence and at the limit. A fresh state assigns N = 1 to the
// origin first. Throws std::invalid_argument on limit = 0, cadence = 0,
// or limit <= an already-started state's n.
WalkSeries run_walk(WalkState& state, const WalkParams& params);

struct WalkResult {
    WalkState state;
    WalkSeries series;

    const VisitGrid& grid() const { return state.dwell; }
    const std::vector<WalkSnapshot>& snapshots() const { return series.snapshots; }
};

WalkResult run_pw(uint64_t limit, uint64_t cadence,
                  const WalkParams& extra = WalkParams{}, bool track_arrival = false);
WalkResult run_prw(uint64_t limit, PrngSpec prng, uint64_t cadence,
                   const WalkParams& extra = WalkParams{}, bool track_arrival = false);

} // namespace primewalk
