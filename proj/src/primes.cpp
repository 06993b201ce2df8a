#include "primewalk/primes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace primewalk {

// ---------------------------------------------------------------------------
// Basics
// ---------------------------------------------------------------------------

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_prime_reference(uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n % 3 == 0) return false;
    for (uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0) return false;
        if (n % (d + 2) == 0) return false;
    }
    return true;
}

uint64_t nth_prime_upper_bound(uint64_t n) {
    if (n < 6) return 13;  // covers p_1..p_6 = 2..13
    double nd = static_cast<double>(n);
    double bound = nd * (std::log(nd) + std::log(std::log(nd)));
    return static_cast<uint64_t>(bound) + 16;
}

void SieveConfig::validate() const {
    if (segment_size < 2)
        throw std::invalid_argument("SieveConfig: segment_size must be >= 2");
}

// ---------------------------------------------------------------------------
// PrimeStream
// ---------------------------------------------------------------------------

// Windows cover [window_low_, window_low_ + segment_size) and only odd
// numbers are represented: composite_[i] corresponds to odd_base + 2*i.
// The marked set depends only on the base primes, so the emitted sequence
// is independent of how the range is cut into windows.

PrimeStream::PrimeStream(SieveConfig cfg, uint64_t first_candidate) : cfg_(cfg) {
    cfg_.validate();
    if (cfg_.limit < 2 || first_candidate > cfg_.limit) {
        done_ = true;
        return;
    }
    if (first_candidate < 2) first_candidate = 2;
    pending_two_ = (first_candidate == 2);

    uint64_t root = isqrt_u64(cfg_.limit);
    std::vector<uint8_t> small(root + 1, 0);
    for (uint64_t i = 3; i * i <= root; i += 2) {
        if (small[i]) continue;
        for (uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 1;
    }
    for (uint64_t i = 3; i <= root; i += 2)
        if (!small[i]) base_primes_.push_back(i);

    window_low_ = first_candidate;
    composite_.resize((cfg_.segment_size + 1) / 2);
}

void PrimeStream::fill_buffer() {
    buffer_.clear();
    buffer_pos_ = 0;
    if (pending_two_) {
        buffer_.push_back(2);
        pending_two_ = false;
    }
    while (buffer_.empty() && window_low_ <= cfg_.limit) {
        uint64_t low = window_low_;
        uint64_t high = std::min(low + cfg_.segment_size - 1, cfg_.limit);
        window_low_ = high + 1;

        uint64_t odd_base = low | 1;  // first odd candidate in the window
        if (odd_base > high) continue;
        std::size_t n_slots = static_cast<std::size_t>((high - odd_base) / 2) + 1;
        std::fill(composite_.begin(), composite_.begin() + n_slots, 0);

        for (uint64_t p : base_primes_) {
            uint64_t p2 = p * p;
            if (p2 > high) break;
            uint64_t first = p2;
            if (first < odd_base) {
                uint64_t k = (odd_base + p - 1) / p;
                if (k % 2 == 0) ++k;  // odd multiples only
                first = k * p;
            }
            for (uint64_t m = first; m <= high; m += 2 * p)
                composite_[static_cast<std::size_t>((m - odd_base) / 2)] = 1;
        }

        for (std::size_t i = 0; i < n_slots; ++i) {
            if (!composite_[i]) {
                uint64_t candidate = odd_base + 2 * i;
                if (candidate >= 3) buffer_.push_back(candidate);  // skip 1
            }
        }
    }
    if (buffer_.empty()) done_ = true;
}

bool PrimeStream::next(uint64_t& prime) {
    if (buffer_pos_ >= buffer_.size()) {
        if (done_) return false;
        fill_buffer();
        if (buffer_pos_ >= buffer_.size()) return false;
    }
    prime = buffer_[buffer_pos_++];
    return true;
}

std::vector<uint64_t> primes_up_to(const SieveConfig& cfg) {
    std::vector<uint64_t> out;
    PrimeStream stream(cfg);
    uint64_t p;
    while (stream.next(p)) out.push_back(p);
    return out;
}

uint64_t prime_count(uint64_t limit, uint64_t segment_size) {
    PrimeStream stream(SieveConfig{limit, segment_size});
    uint64_t count = 0, p;
    while (stream.next(p)) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Last digits
// ---------------------------------------------------------------------------

LastDigit last_digit(uint64_t p) {
    assert(is_prime_reference(p) && "last_digit: input must be prime");
    if (p == 2) return LastDigit::two;
    if (p == 5) return LastDigit::five;
    switch (p % 10) {
        case 1: return LastDigit::one;
        case 3: return LastDigit::three;
        case 7: return LastDigit::seven;
        default: return LastDigit::nine;
    }
}

bool is_exceptional(LastDigit d) {
    return d == LastDigit::two || d == LastDigit::five;
}

int digit_value(LastDigit d) {
    switch (d) {
        case LastDigit::one: return 1;
        case LastDigit::three: return 3;
        case LastDigit::seven: return 7;
        case LastDigit::nine: return 9;
        case LastDigit::two: return 2;
        default: return 5;
    }
}

int digit_index(LastDigit d) {
    assert(!is_exceptional(d) && "digit_index: exceptional digit has no index");
    switch (d) {
        case LastDigit::one: return 0;
        case LastDigit::three: return 1;
        case LastDigit::seven: return 2;
        default: return 3;
    }
}

// ---------------------------------------------------------------------------
// Gap histogram
// ---------------------------------------------------------------------------

uint64_t GapHistogram::total() const {
    uint64_t sum = 0;
    for (const auto& [gap, count] : counts) sum += count;
    return sum;
}

uint64_t GapHistogram::mode() const {
    assert(!counts.empty());
    uint64_t best_gap = 0, best_count = 0;
    for (const auto& [gap, count] : counts) {
        if (count > best_count) {
            best_gap = gap;
            best_count = count;
        }
    }
    return best_gap;
}

void GapHistogram::merge(const GapHistogram& other) {
    for (const auto& [gap, count] : other.counts) counts[gap] += count;
    max_gap = std::max(max_gap, other.max_gap);
}

GapHistogram gap_histogram(uint64_t limit, uint64_t segment_size) {
    if (limit < 3)
        throw std::invalid_argument("gap_histogram: limit must be >= 3");
    GapHistogram hist;
    PrimeStream stream(SieveConfig{limit, segment_size});
    uint64_t prev = 0, p;
    while (stream.next(p)) {
        if (prev != 0) {
            uint64_t gap = p - prev;
            ++hist.counts[gap];
            hist.max_gap = std::max(hist.max_gap, gap);
        }
        prev = p;
    }
    return hist;
}

// ---------------------------------------------------------------------------
// Consecutive last-digit pairs
// ---------------------------------------------------------------------------

void PairMatrix::merge(const PairMatrix& other) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            counts[i][j] += other.counts[i][j];
    total += other.total;
}

PairMatrix pair_matrix(uint64_t first_m_primes, uint64_t segment_size) {
    if (first_m_primes < 2)
        throw std::invalid_argument("pair_matrix: need at least 2 primes");
    PairMatrix matrix;
    PrimeStream stream(SieveConfig{nth_prime_upper_bound(first_m_primes), segment_size});
    uint64_t seen = 0, p;
    int prev_index = -1;
    // digit -> row/column index; -1 marks digits that cannot end a prime > 5
    static constexpr int index_of[10] = {-1, 0, -1, 1, -1, -1, -1, 2, -1, 3};
    while (seen < first_m_primes && stream.next(p)) {
        ++seen;
        if (p == 2 || p == 5) continue;
        int index = index_of[p % 10];
        if (prev_index >= 0) {
            ++matrix.counts[prev_index][index];
            ++matrix.total;
        }
        prev_index = index;
    }
    if (seen < first_m_primes)
        throw std::logic_error("pair_matrix: prime bound too small");
    return matrix;
}

} // namespace primewalk
