#pragma once

#include <cstdint>

namespace summand {

// splitmix64: tiny, fast, and identical on every platform. All randomness in
// the engine flows through this so that a seed pins every output bit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection keeps it exactly uniform
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    std::uint64_t state_;
};

// Deterministic child-seed derivation for recursion branches: results do not
// depend on evaluation order as long as branch indices are stable.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t branch) {
    Rng r(parent ^ (0x5851f42d4c957f2dULL + branch * 0x14057b7ef767814fULL));
    return r.next();
}

}  // namespace summand
