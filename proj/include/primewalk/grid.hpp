#pragma once

// Sparse 2-d visit grid: lattice coordinate -> positive count.
//
// Backed by an open-addressing hash table with coordinates packed into a
// 64-bit key, sized for walks that touch tens of millions of cells. Cells
// are never removed and stored counts are strictly positive; a zero value
// marks an empty slot.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace primewalk {

struct GridCoord {
    int64_t x = 0;
    int64_t y = 0;

    bool operator==(const GridCoord&) const = default;
};

struct Bbox {
    int64_t min_x = 0;
    int64_t max_x = 0;
    int64_t min_y = 0;
    int64_t max_y = 0;

    uint64_t width() const { return static_cast<uint64_t>(max_x - min_x) + 1; }
    uint64_t height() const { return static_cast<uint64_t>(max_y - min_y) + 1; }
    uint64_t cell_count() const { return width() * height(); }
    bool contains(GridCoord c) const {
        return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
    }

    bool operator==(const Bbox&) const = default;
};

struct GridCell {
    GridCoord coord;
    uint64_t count = 0;
};

class VisitGrid {
public:
    VisitGrid() { rehash(1u << 10); }

    // Find-or-insert. A fresh cell starts at count 0 and must be
    // incremented by the caller before the grid is read. The returned
    // reference stays valid until the next touch().
    uint64_t& touch(GridCoord c) {
        if (size_ * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
        uint64_t key = pack(c);
        std::size_t i = probe(key);
        if (!slots_[i].used) {
            slots_[i].key = key;
            slots_[i].used = true;
            ++size_;
            if (size_ == 1) {
                bbox_ = {c.x, c.x, c.y, c.y};
            } else {
                if (c.x < bbox_.min_x) bbox_.min_x = c.x;
                if (c.x > bbox_.max_x) bbox_.max_x = c.x;
                if (c.y < bbox_.min_y) bbox_.min_y = c.y;
                if (c.y > bbox_.max_y) bbox_.max_y = c.y;
            }
        }
        return slots_[i].value;
    }

    // Insert-or-add convenience.
    void add(GridCoord c, uint64_t amount) { touch(c) += amount; }

    // Count at c, zero if unvisited.
    uint64_t at(GridCoord c) const {
        uint64_t key = pack(c);
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(hash(key)) & mask;
        while (slots_[i].used) {
            if (slots_[i].key == key) return slots_[i].value;
            i = (i + 1) & mask;
        }
        return 0;
    }

    uint64_t area() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Precondition: non-empty.
    const Bbox& bbox() const {
        if (empty()) throw std::logic_error("VisitGrid: bbox of empty grid");
        return bbox_;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (const Slot& s : slots_)
            if (s.used) fn(unpack(s.key), s.value);
    }

    uint64_t sum() const {
        uint64_t total = 0;
        for_each([&](GridCoord, uint64_t v) { total += v; });
        return total;
    }

    uint64_t max_count() const {
        uint64_t best = 0;
        for_each([&](GridCoord, uint64_t v) {
            if (v > best) best = v;
        });
        return best;
    }

    // All cells sorted by (x, y); the canonical serialization order.
    std::vector<GridCell> sorted_cells() const;

    bool operator==(const VisitGrid& other) const;

private:
    struct Slot {
        uint64_t key = 0;
        uint64_t value = 0;
        bool used = false;
    };

    // Coordinates are stored as packed 32-bit pairs. A walk of N steps
    // stays within |x|,|y| <= pi(N), so this cannot overflow below
    // N ~ 10^11; reject loudly rather than wrap.
    static uint64_t pack(GridCoord c) {
        if (c.x < INT32_MIN || c.x > INT32_MAX || c.y < INT32_MIN || c.y > INT32_MAX)
            throw std::overflow_error("VisitGrid: coordinate exceeds packed 32-bit range");
        return (static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(c.y))) << 32)
               | static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(c.x)));
    }

    static GridCoord unpack(uint64_t key) {
        return {static_cast<int32_t>(static_cast<uint32_t>(key & 0xffffffffu)),
                static_cast<int32_t>(static_cast<uint32_t>(key >> 32))};
    }

    static uint64_t hash(uint64_t key) {
        // splitmix64 finalizer
        key += 0x9e3779b97f4a7c15ull;
        key = (key ^ (key >> 30)) * 0xbf58476d1ce4e5b9ull;
        key = (key ^ (key >> 27)) * 0x94d049bb133111ebull;
        return key ^ (key >> 31);
    }

    std::size_t probe(uint64_t key) const {
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(hash(key)) & mask;
        while (slots_[i].used && slots_[i].key != key) i = (i + 1) & mask;
        return i;
    }

    void rehash(std::size_t new_capacity) {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(new_capacity, Slot{});
        for (const Slot& s : old) {
            if (!s.used) continue;
            std::size_t i = probe(s.key);
            slots_[i] = s;
        }
    }

    std::vector<Slot> slots_;
    std::size_t size_ = 0;
    Bbox bbox_{};
};

} // namespace primewalk
