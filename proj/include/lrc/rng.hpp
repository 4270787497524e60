#ifndef LRC_RNG_HPP
#define LRC_RNG_HPP

#include <cstdint>

namespace lrc {

// splitmix64; chosen over std::mt19937 so that seeded runs produce the
// same draws on every platform and standard library.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    // One stream per (seed, index) pair so trial outcomes depend only on
    // those two values, never on how many draws earlier trials made.
    static SplitMix64 for_trial(uint64_t seed, uint64_t index) {
        SplitMix64 mixer(seed ^ (index * 0x9E3779B97F4A7C15ull + 0xBF58476D1CE4E5B9ull));
        mixer.next();
        return mixer;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by the multiply-shift reduction.
    uint64_t below(uint64_t bound) {
        return uint64_t((unsigned __int128)next() * bound >> 64);
    }

  private:
    uint64_t state_;
};

}  // namespace lrc

#endif
