#include "summand/fp.hpp"

#include <string>

namespace summand {

namespace {

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = static_cast<__uint128_t>(r) * a % m;
        a = static_cast<__uint128_t>(a) * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; the bases {2, 7, 61} decide primality for all
// n < 4'759'123'141, which covers the whole uint32 range.
bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint32_t base : {2u, 7u, 61u}) {
        std::uint64_t x = pow_mod_u64(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<__uint128_t>(x) * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Fp::Fp(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31))
        throw ValidationError("modulus " + std::to_string(p) +
                              " exceeds 2^31 - 1");
    if (!is_prime_u32(p))
        throw ValidationError("modulus " + std::to_string(p) +
                              " is not prime");
}

std::uint32_t Fp::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    std::uint64_t b = a;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Fp::inv(std::uint32_t a) const {
    if (a == 0) throw ValidationError("inverse of zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

}  // namespace summand
