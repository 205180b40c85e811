#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "summand/fp.hpp"
#include "summand/matrix.hpp"

namespace summand {

// Univariate polynomials over F_p, coefficient c_[i] on x^i. The zero
// polynomial has an empty coefficient vector; otherwise the top coefficient
// is nonzero.
class Poly {
  public:
    explicit Poly(Fp fp) : fp_(fp) {}
    Poly(Fp fp, std::vector<std::uint32_t> coeffs)
        : fp_(fp), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(Fp fp) { return Poly(fp); }
    static Poly constant(Fp fp, std::uint32_t c) {
        return Poly(fp, {c});
    }
    static Poly one(Fp fp) { return constant(fp, 1); }
    static Poly x(Fp fp) { return Poly(fp, {0, 1}); }

    const Fp& field() const { return fp_; }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint32_t coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : 0;
    }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.fp_ == b.fp_ && a.c_ == b.c_;
    }

    Poly scaled(std::uint32_t c) const;

    std::uint32_t eval(std::uint32_t x) const;
    Matrix eval_matrix(const Matrix& m) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Fp fp_;
    std::vector<std::uint32_t> c_;
};

// quotient, remainder; divisor must be nonzero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

// monic gcd
Poly gcd(const Poly& a, const Poly& b);
// (g, s, t) with s a + t b = g, g monic
struct Egcd {
    Poly g, s, t;
};
Egcd egcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

struct PolyPower {
    Poly factor;  // monic irreducible
    std::size_t multiplicity;
};

struct Factorization {
    std::uint32_t lead;  // input = lead * prod factor^multiplicity
    std::vector<PolyPower> factors;
};

// Complete factorization into monic irreducibles. Squarefree part first,
// then distinct-degree splitting, then seeded equal-degree splitting
// (Cantor-Zassenhaus; trace variant for p = 2). Output order is canonical:
// by degree, then lexicographically by coefficients. Throws on the zero
// polynomial.
Factorization factor_poly(const Poly& f, std::uint64_t seed = 0);

// Deterministic irreducibility test via iterated Frobenius.
bool is_irreducible(const Poly& f);

// Least-degree monic f with f(m) = 0, via Krylov chains of the unit vectors;
// the result is verified by evaluation before returning.
Poly minimal_polynomial(const Matrix& m);

// Least-degree monic g with v g(m) = 0 (row convention: v acts by v -> v m).
Poly vector_annihilator(const Matrix& m, std::span<const std::uint32_t> v);

}  // namespace summand
