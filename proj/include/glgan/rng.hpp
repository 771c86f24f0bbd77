#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace glgan {

// xoshiro256** with splitmix64 seeding. Chosen over <random> engines because
// the distribution outputs must be identical across standard libraries and the
// full state has to round-trip through checkpoints as four 64-bit words.
class Rng {
public:
    Rng() : Rng(0) {}

    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
        gauss_cached_ = false;
        gauss_cache_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller (deterministic across platforms).
    double gaussian() {
        if (gauss_cached_) {
            gauss_cached_ = false;
            return gauss_cache_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        gauss_cache_ = r * std::sin(a);
        gauss_cached_ = true;
        return r * std::cos(a);
    }

    // Serializable state: four state words plus the gaussian cache.
    struct State {
        std::array<std::uint64_t, 4> words;
        bool gauss_cached;
        double gauss_cache;
    };

    State state() const { return State{state_, gauss_cached_, gauss_cache_}; }

    void set_state(const State& s) {
        state_ = s.words;
        gauss_cached_ = s.gauss_cached;
        gauss_cache_ = s.gauss_cache;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    bool gauss_cached_ = false;
    double gauss_cache_ = 0.0;
};

}  // namespace glgan
