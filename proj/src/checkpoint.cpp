#include "primewalk/checkpoint.hpp"

#include <cstring>
#include <stdexcept>

#include "primewalk/io.hpp"

namespace primewalk {

namespace {

constexpr char magic[4] = {'P', 'W', 'C', 'K'};
constexpr uint16_t flag_prw = 1u << 0;
constexpr uint16_t flag_arrival = 1u << 1;

uint64_t fnv1a64(const uint8_t* data, std::size_t size, uint64_t hash = 14695981039346656037ull) {
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= data[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

struct ByteWriter {
    std::vector<uint8_t> bytes;

    void raw(const void* data, std::size_t size) {
        const uint8_t* p = static_cast<const uint8_t*>(data);
        bytes.insert(bytes.end(), p, p + size);
    }
    void u16(uint16_t v) {
        uint8_t b[2] = {uint8_t(v), uint8_t(v >> 8)};
        raw(b, 2);
    }
    void u32(uint32_t v) {
        uint8_t b[4];
        for (int i = 0; i < 4; ++i) b[i] = uint8_t(v >> (8 * i));
        raw(b, 4);
    }
    void u64(uint64_t v) {
        uint8_t b[8];
        for (int i = 0; i < 8; ++i) b[i] = uint8_t(v >> (8 * i));
        raw(b, 8);
    }
    void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
};

struct ByteReader {
    const uint8_t* data;
    std::size_t size;
    std::size_t pos = 0;

    void raw(void* out, std::size_t n) {
        if (pos + n > size) throw CheckpointError("checkpoint: truncated data");
        std::memcpy(out, data + pos, n);
        pos += n;
    }
    uint16_t u16() {
        uint8_t b[2];
        raw(b, 2);
        return uint16_t(b[0]) | uint16_t(b[1]) << 8;
    }
    uint32_t u32() {
        uint8_t b[4];
        raw(b, 4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(b[i]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        uint8_t b[8];
        raw(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
        return v;
    }
    int64_t i64() { return static_cast<int64_t>(u64()); }
};

void write_cells(ByteWriter& w, const VisitGrid& grid) {
    std::vector<GridCell> cells = grid.sorted_cells();
    w.u64(cells.size());
    for (const GridCell& cell : cells) {
        w.i64(cell.coord.x);
        w.i64(cell.coord.y);
        w.u64(cell.count);
    }
}

void read_cells(ByteReader& r, VisitGrid& grid) {
    uint64_t count = r.u64();
    for (uint64_t i = 0; i < count; ++i) {
        GridCoord c{r.i64(), r.i64()};
        uint64_t value = r.u64();
        if (value == 0) throw CheckpointError("checkpoint: zero cell count");
        uint64_t& slot = grid.touch(c);
        if (slot != 0) throw CheckpointError("checkpoint: duplicate cell");
        slot = value;
    }
}

} // namespace

std::vector<uint8_t> checkpoint_save(const WalkState& state) {
    if (state.n == 0)
        throw std::logic_error("checkpoint_save: state has not started");

    ByteWriter w;
    w.raw(magic, 4);
    w.u16(checkpoint_version);
    uint16_t flags = 0;
    if (state.mode == WalkMode::prw) flags |= flag_prw;
    if (state.track_arrival) flags |= flag_arrival;
    w.u16(flags);
    w.u64(state.n);
    w.i64(state.position.x);
    w.i64(state.position.y);
    const Bbox& box = state.dwell.bbox();
    w.i64(box.min_x);
    w.i64(box.max_x);
    w.i64(box.min_y);
    w.i64(box.max_y);
    w.u64(state.z_max);
    w.u64(state.interval_z_max);
    w.u64(state.prime_count);
    if (state.mode == WalkMode::prw) {
        w.u64(state.seed);
        for (uint32_t word : state.rng.state()) w.u32(word);
        w.u32(state.rng.index());
    }
    write_cells(w, state.dwell);
    if (state.track_arrival) write_cells(w, state.arrival);
    w.u64(fnv1a64(w.bytes.data(), w.bytes.size()));
    return w.bytes;
}

WalkState checkpoint_load(const uint8_t* data, std::size_t size) {
    if (size < 8 + 4)
        throw CheckpointError("checkpoint: truncated data");
    uint64_t stored_hash = 0;
    for (int i = 0; i < 8; ++i) stored_hash |= uint64_t(data[size - 8 + i]) << (8 * i);
    if (fnv1a64(data, size - 8) != stored_hash)
        throw CheckpointError("checkpoint: checksum mismatch");

    ByteReader r{data, size - 8};
    char m[4];
    r.raw(m, 4);
    if (std::memcmp(m, magic, 4) != 0)
        throw CheckpointError("checkpoint: bad magic");
    uint16_t version = r.u16();
    if (version != checkpoint_version)
        throw CheckpointError("checkpoint: unsupported format version " + std::to_string(version));
    uint16_t flags = r.u16();

    WalkState state;
    state.mode = (flags & flag_prw) ? WalkMode::prw : WalkMode::pw;
    state.track_arrival = (flags & flag_arrival) != 0;
    state.n = r.u64();
    state.position.x = r.i64();
    state.position.y = r.i64();
    Bbox box;
    box.min_x = r.i64();
    box.max_x = r.i64();
    box.min_y = r.i64();
    box.max_y = r.i64();
    state.z_max = r.u64();
    state.interval_z_max = r.u64();
    state.prime_count = r.u64();
    if (state.mode == WalkMode::prw) {
        state.seed = r.u64();
        std::array<uint32_t, Mt19937::state_size> words;
        for (uint32_t& word : words) word = r.u32();
        uint32_t index = r.u32();
        if (index > Mt19937::state_size)
            throw CheckpointError("checkpoint: invalid generator index");
        state.rng.restore(words, index);
    }
    read_cells(r, state.dwell);
    if (state.track_arrival) read_cells(r, state.arrival);
    if (r.pos != r.size)
        throw CheckpointError("checkpoint: trailing bytes");

    if (state.n == 0 || state.dwell.empty())
        throw CheckpointError("checkpoint: empty state");
    if (state.dwell.sum() != state.n)
        throw CheckpointError("checkpoint: cell counts do not sum to n");
    if (state.dwell.at(state.position) == 0)
        throw CheckpointError("checkpoint: position not among visited cells");
    if (!(state.dwell.bbox().min_x == box.min_x && state.dwell.bbox().max_x == box.max_x &&
          state.dwell.bbox().min_y == box.min_y && state.dwell.bbox().max_y == box.max_y))
        throw CheckpointError("checkpoint: bounding box does not match cells");
    return state;
}

WalkState checkpoint_load(const std::vector<uint8_t>& bytes) {
    return checkpoint_load(bytes.data(), bytes.size());
}

void checkpoint_write_file(const WalkState& state, const std::string& path) {
    std::vector<uint8_t> bytes = checkpoint_save(state);
    write_file_atomic(std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
                      path);
}

WalkState checkpoint_read_file(const std::string& path) {
    std::string bytes = read_file(path);
    return checkpoint_load(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size());
}

} // namespace primewalk
