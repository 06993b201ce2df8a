#pragma once

// Mersenne Twister MT19937 (32-bit) with direct access to the raw state,
// so generator state can be embedded in binary checkpoints and restored
// bit-exactly. Follows the reference algorithm (Matsumoto & Nishimura):
// init_genrand / init_by_array seeding, standard tempering.
//
// Output is identical on every platform for the same seed.

#include <array>
#include <cstdint>

namespace primewalk {

class Mt19937 {
public:
    static constexpr std::size_t state_size = 624;

    Mt19937() { seed32(5489u); }

    explicit Mt19937(uint64_t seed) { seed64(seed); }

    // Reference init_genrand.
    void seed32(uint32_t s) {
        state_[0] = s;
        for (uint32_t i = 1; i < state_size; ++i)
            state_[i] = 1812433253u * (state_[i - 1] ^ (state_[i - 1] >> 30)) + i;
        index_ = state_size;
    }

    // 64-bit seeds are split into two 32-bit words [low, high] and fed to
    // the reference init_by_array.
    void seed64(uint64_t seed) {
        const uint32_t key[2] = {static_cast<uint32_t>(seed),
                                 static_cast<uint32_t>(seed >> 32)};
        seed_by_array(key, 2);
    }

    void seed_by_array(const uint32_t* key, std::size_t key_length) {
        seed32(19650218u);
        std::size_t i = 1, j = 0;
        std::size_t k = state_size > key_length ? state_size : key_length;
        for (; k != 0; --k) {
            state_[i] = (state_[i] ^ ((state_[i - 1] ^ (state_[i - 1] >> 30)) * 1664525u))
                        + key[j] + static_cast<uint32_t>(j);
            ++i; ++j;
            if (i >= state_size) { state_[0] = state_[state_size - 1]; i = 1; }
            if (j >= key_length) j = 0;
        }
        for (k = state_size - 1; k != 0; --k) {
            state_[i] = (state_[i] ^ ((state_[i - 1] ^ (state_[i - 1] >> 30)) * 1566083941u))
                        - static_cast<uint32_t>(i);
            ++i;
            if (i >= state_size) { state_[0] = state_[state_size - 1]; i = 1; }
        }
        state_[0] = 0x80000000u;
        index_ = state_size;
    }

    uint32_t next_u32() {
        if (index_ >= state_size) twist();
        uint32_t y = state_[index_++];
        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c5680u;
        y ^= (y << 15) & 0xefc60000u;
        y ^= y >> 18;
        return y;
    }

    // Raw state, for checkpointing. index() may equal state_size (twist pending).
    const std::array<uint32_t, state_size>& state() const { return state_; }
    uint32_t index() const { return index_; }

    void restore(const std::array<uint32_t, state_size>& state, uint32_t index) {
        state_ = state;
        index_ = index;
    }

    bool operator==(const Mt19937& other) const {
        return index_ == other.index_ && state_ == other.state_;
    }

private:
    void twist() {
        constexpr uint32_t upper_mask = 0x80000000u;
        constexpr uint32_t lower_mask = 0x7fffffffu;
        for (std::size_t i = 0; i < state_size; ++i) {
            uint32_t y = (state_[i] & upper_mask) | (state_[(i + 1) % state_size] & lower_mask);
            uint32_t next = state_[(i + 397) % state_size] ^ (y >> 1);
            if (y & 1u) next ^= 0x9908b0dfu;
            state_[i] = next;
        }
        index_ = 0;
    }

    std::array<uint32_t, state_size> state_{};
    uint32_t index_ = state_size;
};

} // namespace primewalk
