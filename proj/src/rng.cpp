#include "gridrel/rng.hpp"

namespace gridrel {
namespace {

constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(product >> 64);
    lo = static_cast<std::uint64_t>(product);
}

}  // namespace

CounterBlock counter_block(std::uint64_t key, std::uint64_t ctr0, std::uint64_t ctr1) {
    std::uint64_t x0 = ctr0;
    std::uint64_t x1 = ctr1;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi, lo;
        mul_hi_lo(kMultiplier, x0, hi, lo);
        x0 = hi ^ key ^ x1;
        x1 = lo;
        key += kWeyl;
    }
    return {x0, x1};
}

double replica_u01(std::uint64_t seed, std::uint64_t replica, std::uint32_t draw) {
    CounterBlock block = counter_block(seed, replica, draw >> 1);
    return u01_from_bits((draw & 1u) ? block.lane1 : block.lane0);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    // Counter lane 1 marks this as the seed-derivation stream so derived
    // seeds cannot collide with replica substreams of the same master seed.
    return counter_block(master, fnv1a64(tag), 0x5EEDDE51ULL).lane0;
}

std::uint64_t RngStream::next_u64() {
    if (has_pending_) {
        has_pending_ = false;
        return pending_;
    }
    CounterBlock block = counter_block(key_, stream_, counter_++);
    pending_ = block.lane1;
    has_pending_ = true;
    return block.lane0;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
    unsigned __int128 widened = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(widened >> 64);
}

}  // namespace gridrel
