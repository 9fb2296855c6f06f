#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spikegraph {

// Deterministic random streams.
//
// Every random decision in the engine draws from an RngStream addressed by
// (seed, a, b, c), where a/b/c identify the purpose, epoch, and node of the
// draw. Streams with different addresses are statistically independent, and
// the same address always replays the same sequence, on any platform. That
// is the whole reproducibility story: no global generator, no hidden state,
// and no std::shuffle / std::bernoulli_distribution, whose outputs are
// implementation-defined and would break bit-exact runs across toolchains.

// Finalizer from the splitmix64 generator. Bijective, strong avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Purpose tags. Keeping them in one place guarantees two subsystems never
// collide on the same stream address.
namespace stream_tag {
constexpr std::uint64_t split = 1;        // train/val/test node shuffles
constexpr std::uint64_t weight_init = 2;  // initial weight draw
constexpr std::uint64_t encode_train = 3; // per-epoch training spike trains
constexpr std::uint64_t encode_val = 4;   // per-epoch validation spike trains
constexpr std::uint64_t encode_eval = 5;  // held-out evaluation spike trains
constexpr std::uint64_t monte_carlo = 6;  // empirical tail estimates
constexpr std::uint64_t batch_order = 7;  // per-epoch mini-batch shuffles
} // namespace stream_tag

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t a = 0,
                       std::uint64_t b = 0, std::uint64_t c = 0) noexcept {
        std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
        h = hash_combine(h, a);
        h = hash_combine(h, b);
        h = hash_combine(h, c);
        state_ = h;
    }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return next_double() < p; }

    // Uniform integer in [0, n); n must be nonzero. Multiply-shift map; the
    // bias of ~n/2^64 is irrelevant here and the result is deterministic,
    // which rejection loops sensitive to call order would complicate.
    std::uint64_t next_below(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform double in [lo, hi).
    double next_range(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    // Fisher-Yates, one next_below per position from the back.
    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace spikegraph
