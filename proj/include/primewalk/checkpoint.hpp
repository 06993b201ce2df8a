#pragma once

// Versioned binary checkpoints for walk state. Resuming from a checkpoint
// reproduces the continuation of the original run bit for bit, including
// the MT19937 generator state of random walks.
//
// Format v1 (all integers little-endian), documented in full in
// docs/checkpoint_format.md:
//
//   magic "PWCK", version u16, flags u16 (bit0 = prw, bit1 = arrival
//   section present), n u64, position (i64 x, i64 y), bbox (i64 min_x,
//   max_x, min_y, max_y), z_max u64, interval_z_max u64, prime_count u64,
//   [prw only: seed u64, 624 x u32 state, index u32],
//   dwell cell count u64 followed by (x i64, y i64, count u64) triples
//   sorted by (x, y),
//   [arrival section: cell count u64 + triples, same layout],
//   FNV-1a 64 checksum u64 over all preceding bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "primewalk/walk.hpp"

namespace primewalk {

inline constexpr uint16_t checkpoint_version = 1;

// Thrown on corrupted, truncated or version-mismatched checkpoint data.
class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Serialize a started walk state (n >= 1). Throws std::logic_error for a
// state that has not assigned any integer yet.
std::vector<uint8_t> checkpoint_save(const WalkState& state);

WalkState checkpoint_load(const std::vector<uint8_t>& bytes);
WalkState checkpoint_load(const uint8_t* data, std::size_t size);

// File helpers; writes go to a temporary file first, then rename.
// Throw std::runtime_error on I/O failure, CheckpointError on bad content.
void checkpoint_write_file(const WalkState& state, const std::string& path);
WalkState checkpoint_read_file(const std::string& path);

} // namespace primewalk
