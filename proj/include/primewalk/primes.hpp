#pragma once

// Prime generation and prime-sequence statistics.
//
// Production generation is a segmented sieve of Eratosthenes streaming
// primes in increasing order with memory bounded by the segment size plus
// the base primes below sqrt(limit). is_prime_reference() is a plain
// 6k+-1 trial-division test kept as an independent cross-check; the two
// must agree everywhere.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace primewalk {

// ---------------------------------------------------------------------------
// Sieve configuration
// ---------------------------------------------------------------------------

struct SieveConfig {
    static constexpr uint64_t default_segment_size = uint64_t(1) << 22;

    uint64_t limit = 0;                            // inclusive upper bound
    uint64_t segment_size = default_segment_size;  // integers per window

    // Throws std::invalid_argument if segment_size < 2.
    void validate() const;
};

// ---------------------------------------------------------------------------
// PrimeStream: ordered, segment-buffered prime generator
// ---------------------------------------------------------------------------

// Emits every prime p with first_candidate <= p <= cfg.limit, in strictly
// increasing order. The emitted sequence is identical for every valid
// segment_size. limit < 2 yields an empty stream.
class PrimeStream {
public:
    explicit PrimeStream(SieveConfig cfg, uint64_t first_candidate = 2);

    // Fetch the next prime. Returns false when the stream is exhausted.
    bool next(uint64_t& prime);

private:
    void fill_buffer();

    SieveConfig cfg_;
    std::vector<uint64_t> base_primes_;  // odd primes <= sqrt(limit)
    std::vector<uint8_t> composite_;     // odd slots of the current window
    std::vector<uint64_t> buffer_;
    std::size_t buffer_pos_ = 0;
    uint64_t window_low_ = 0;            // start of the next window
    bool pending_two_ = false;
    bool done_ = false;
};

// Materialize all primes <= cfg.limit. Convenience for small limits.
std::vector<uint64_t> primes_up_to(const SieveConfig& cfg);

// Exact count of primes <= limit, by full enumeration.
uint64_t prime_count(uint64_t limit,
                     uint64_t segment_size = SieveConfig::default_segment_size);

// Trial division by 2, 3, then 6k+-1 candidates up to sqrt(n).
// Independent of the sieve; the test oracle.
bool is_prime_reference(uint64_t n);

// Integer square root, rounding down.
uint64_t isqrt_u64(uint64_t n);

// Upper bound B with at least n primes <= B. Used to size sieves when the
// first n primes are requested.
uint64_t nth_prime_upper_bound(uint64_t n);

// ---------------------------------------------------------------------------
// Last digits
// ---------------------------------------------------------------------------

// Last decimal digit of a prime. Every prime ends in 1, 3, 7 or 9 except
// the two exceptional primes 2 and 5.
enum class LastDigit : uint8_t { one, three, seven, nine, two, five };

// Classify p's last digit. Precondition: p is prime (debug assertion).
LastDigit last_digit(uint64_t p);

bool is_exceptional(LastDigit d);

// Decimal value of the classified digit (1, 3, 7, 9, 2 or 5).
int digit_value(LastDigit d);

// Index 0..3 for digits 1, 3, 7, 9. Precondition: not exceptional.
int digit_index(LastDigit d);

// ---------------------------------------------------------------------------
// Gap histogram
// ---------------------------------------------------------------------------

struct GapHistogram {
    std::map<uint64_t, uint64_t> counts;  // gap -> occurrences
    uint64_t max_gap = 0;

    uint64_t total() const;

    // Most frequent gap; the smallest gap wins ties.
    // Precondition: non-empty.
    uint64_t mode() const;

    // Cell-wise accumulation. Gaps that bridge two ranges are the
    // caller's responsibility.
    void merge(const GapHistogram& other);
};

// Gaps p_{i+1} - p_i over all consecutive primes <= limit.
// Precondition: limit >= 3 (throws std::invalid_argument below).
GapHistogram gap_histogram(uint64_t limit,
                           uint64_t segment_size = SieveConfig::default_segment_size);

// ---------------------------------------------------------------------------
// Consecutive last-digit pairs
// ---------------------------------------------------------------------------

// 4x4 matrix of consecutive last-digit pairs over digits {1,3,7,9}.
// Primes 2 and 5 are skipped entirely: the pair sequence is formed over
// the remaining primes, so e.g. 3 and 7 pair up across the removed 5.
struct PairMatrix {
    std::array<std::array<uint64_t, 4>, 4> counts{};  // [first][second]
    uint64_t total = 0;

    double expected_uniform() const { return static_cast<double>(total) / 16.0; }
    double deviation(int i, int j) const {
        return static_cast<double>(counts[i][j]) - expected_uniform();
    }

    // Decimal digit for row/column index 0..3.
    static constexpr int digits[4] = {1, 3, 7, 9};

    void merge(const PairMatrix& other);
};

// Pairs over the first m primes (m >= 2, throws std::invalid_argument below).
PairMatrix pair_matrix(uint64_t first_m_primes,
                       uint64_t segment_size = SieveConfig::default_segment_size);

} // namespace primewalk
