#include "primewalk/walk.hpp"

#include <cassert>
#include <stdexcept>

namespace primewalk {

Move step_for_prime(uint64_t p, const MoveTable& table) {
    LastDigit d = last_digit(p);
    if (is_exceptional(d)) return Move::stay;
    return table.by_digit[digit_index(d)];
}

WalkState WalkState::fresh_pw(bool track_arrival) {
    WalkState state;
    state.mode = WalkMode::pw;
    state.track_arrival = track_arrival;
    return state;
}

WalkState WalkState::fresh_prw(PrngSpec prng, bool track_arrival) {
    WalkState state;
    state.mode = WalkMode::prw;
    state.track_arrival = track_arrival;
    state.seed = prng.seed;
    state.rng.seed64(prng.seed);
    return state;
}

const VisitGrid& arrival_counts(const WalkState& state) {
    if (!state.track_arrival)
        throw std::logic_error("arrival_counts: state does not track arrivals");
    return state.arrival;
}

namespace {

WalkSnapshot make_snapshot(const WalkState& state) {
    const Bbox& box = state.dwell.bbox();
    WalkSnapshot snap;
    snap.n = state.n;
    snap.position = state.position;
    snap.area = state.dwell.area();
    snap.z_max = state.z_max;
    snap.bbox = box;
    snap.interior_unvisited = box.cell_count() - snap.area;
    snap.prime_count = state.prime_count;
    return snap;
}

// digit -> move-table index for primes above 5; -1 is unreachable
constexpr int index_of_digit[10] = {-1, 0, -1, 1, -1, -1, -1, 2, -1, 3};

constexpr Move random_moves[4] = {Move::up, Move::down, Move::left, Move::right};

} // namespace

WalkSeries run_walk(WalkState& state, const WalkParams& params) {
    if (params.limit == 0)
        throw std::invalid_argument("run_walk: limit must be >= 1 (no start cell defined)");
    if (params.cadence == 0)
        throw std::invalid_argument("run_walk: cadence must be >= 1");
    if (state.n != 0 && params.limit <= state.n)
        throw std::invalid_argument("run_walk: limit must exceed the resumed state's n");

    WalkSeries series;
    uint64_t last_emitted = 0;

    auto emit = [&] {
        series.snapshots.push_back(make_snapshot(state));
        series.interval_z_max.push_back(state.interval_z_max);
        state.interval_z_max = 0;
        last_emitted = state.n;
    };

    uint64_t* cur;
    if (state.n == 0) {
        cur = &state.dwell.touch({0, 0});
        *cur = 1;  // N = 1 starts at the origin
        if (state.track_arrival) state.arrival.add({0, 0}, 1);
        state.n = 1;
        state.z_max = 1;
        state.interval_z_max = 1;
        if (state.n % params.cadence == 0) emit();
    } else {
        cur = &state.dwell.touch(state.position);
    }

    // first multiple of cadence strictly after n
    uint64_t next_snap = (state.n / params.cadence + 1) * params.cadence;

    // Assign the composite run n+1..m (no primes inside) to the current
    // cell, stopping at snapshot points.
    auto advance_composites_to = [&](uint64_t m) {
        while (state.n < m) {
            uint64_t stop = next_snap < m ? next_snap : m;
            *cur += stop - state.n;
            state.n = stop;
            if (*cur > state.z_max) state.z_max = *cur;
            if (*cur > state.interval_z_max) state.interval_z_max = *cur;
            if (state.n == next_snap) {
                emit();
                next_snap += params.cadence;
            }
        }
    };

    PrimeStream stream(SieveConfig{params.limit, params.segment_size}, state.n + 1);
    uint64_t p;
    while (stream.next(p)) {
        advance_composites_to(p - 1);

        Move move;
        if (state.mode == WalkMode::pw) {
            move = (p == 2 || p == 5) ? Move::stay
                                      : params.table.by_digit[index_of_digit[p % 10]];
        } else {
            move = random_moves[state.rng.next_u32() >> 30];
        }
        if (move != Move::stay) {
            state.position = apply_move(state.position, move);
            cur = &state.dwell.touch(state.position);
            if (state.track_arrival) state.arrival.add(state.position, 1);
        }
        *cur += 1;
        state.n = p;
        ++state.prime_count;
        if (*cur > state.z_max) state.z_max = *cur;
        if (*cur > state.interval_z_max) state.interval_z_max = *cur;
        if (state.n == next_snap) {
            emit();
            next_snap += params.cadence;
        }
    }

    advance_composites_to(params.limit);
    if (last_emitted != params.limit) emit();
    return series;
}

WalkResult run_pw(uint64_t limit, uint64_t cadence, const WalkParams& extra,
                  bool track_arrival) {
    WalkResult result{WalkState::fresh_pw(track_arrival), {}};
    WalkParams params = extra;
    params.limit = limit;
    params.cadence = cadence;
    result.series = run_walk(result.state, params);
    return result;
}

WalkResult run_prw(uint64_t limit, PrngSpec prng, uint64_t cadence, const WalkParams& extra,
                   bool track_arrival) {
    WalkResult result{WalkState::fresh_prw(prng, track_arrival), {}};
    WalkParams params = extra;
    params.limit = limit;
    params.cadence = cadence;
    result.series = run_walk(result.state, params);
    return result;
}

} // namespace primewalk
