#pragma once

#include <cstdint>

#include "summand/errors.hpp"

namespace summand {

// The prime field F_p, p < 2^31. Elements are plain uint32_t residues in
// [0, p); this struct carries the modulus and the arithmetic. Products are
// formed in 64 bits, so no intermediate ever overflows.
class Fp {
  public:
    // Validates primality (deterministic Miller-Rabin) and the 2^31 bound.
    explicit Fp(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Inverse by extended Euclid; throws on a = 0.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const Fp&) const = default;

  private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace summand
