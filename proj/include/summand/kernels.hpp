#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Mod-p row kernels. Every dense operation in the engine (row reduction,
// matrix products, action composition) bottoms out in these two loops, so
// they exist once, in scalar reference form and in an AVX2 variant that is
// selected at runtime and equivalence-tested against the reference.
//
// Contract shared by all variants:
//   * p is prime and p < 2^31,
//   * every input value is already reduced into [0, p),
//   * outputs are reduced into [0, p).

namespace summand::kern {

// y[i] <- (y[i] + a*x[i]) mod p
using AxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                        std::uint32_t a, std::uint32_t p);

// y[i] <- (a*y[i]) mod p
using ScaleFn = void (*)(std::uint32_t* y, std::size_t n, std::uint32_t a,
                         std::uint32_t p);

struct Backend {
    const char* name;
    AxpyFn axpy;
    ScaleFn scale;
};

// Reference kernels: 64-bit widening multiply and a hardware remainder.
void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p);
void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t a,
                  std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
// AVX2 kernels, eight 32-bit lanes per step, Shoup multiplication with a
// per-call precomputed quotient estimate (no lane-wise division needed).
void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p);
void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t a,
                std::uint32_t p);
#endif

bool avx2_supported();

// The backend picked for this process (AVX2 when the CPU has it).
const Backend& backend();

// All backends usable on this machine, reference first. Tests walk this list
// to check that every variant computes the same rows.
const std::vector<Backend>& available_backends();

inline void axpy(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p) {
    backend().axpy(y, x, n, a, p);
}

inline void scale(std::uint32_t* y, std::size_t n, std::uint32_t a,
                  std::uint32_t p) {
    backend().scale(y, n, a, p);
}

}  // namespace summand::kern
