#pragma once

#include <cstdint>
#include <string_view>

namespace gridrel {

// Counter-based pseudo-random generator (Philox-style 2x64, 10 rounds).
// Stateless: the output at (key, counter) never depends on call order, so
// parallel workers can draw independent substreams and still produce results
// that are bit-identical to a serial run.
struct CounterBlock {
    std::uint64_t lane0;
    std::uint64_t lane1;
};

CounterBlock counter_block(std::uint64_t key, std::uint64_t ctr0, std::uint64_t ctr1);

// Uniform double in [0, 1) from the top 53 bits.
inline double u01_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// j-th uniform draw of replica substream `replica` under `seed`.
double replica_u01(std::uint64_t seed, std::uint64_t replica, std::uint32_t draw);

// Stable 64-bit FNV-1a hash; used to derive per-case seeds from case ids.
std::uint64_t fnv1a64(std::string_view text);

// Deterministic child seed for a named purpose ("split:0", "order3", a case
// id, ...). Stable across platforms and runs.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);

// Sequential stream over the counter generator, for shuffles and rejection
// sampling. Cheap to construct; never shared across threads.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : key_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    double next_u01() { return u01_from_bits(next_u64()); }

    // Uniform integer in [0, n); n must be > 0. Multiply-shift mapping: the
    // bias of ~n/2^64 is far below anything observable and the result is
    // platform-stable, unlike std::uniform_int_distribution.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t pending_ = 0;
    bool has_pending_ = false;
};

}  // namespace gridrel
