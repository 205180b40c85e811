#include "summand/kernels.hpp"

namespace summand::kern {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p) {
    if (a == 0) return;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>(
            (y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
}

void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t a,
                  std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * y[i]) % p);
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Backend& backend() {
    static const Backend selected = [] {
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) return Backend{"avx2", axpy_avx2, scale_avx2};
#endif
        return Backend{"scalar", axpy_scalar, scale_scalar};
    }();
    return selected;
}

const std::vector<Backend>& available_backends() {
    static const std::vector<Backend> list = [] {
        std::vector<Backend> v;
        v.push_back(Backend{"scalar", axpy_scalar, scale_scalar});
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) v.push_back(Backend{"avx2", axpy_avx2, scale_avx2});
#endif
        return v;
    }();
    return list;
}

}  // namespace summand::kern
