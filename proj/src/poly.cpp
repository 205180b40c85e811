#include "summand/poly.hpp"

#include <algorithm>
#include <map>

#include "summand/errors.hpp"
#include "summand/rng.hpp"

namespace summand {

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(fp_.inv(lead()));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero(fp_);
    std::vector<std::uint32_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = fp_.mul(c_[i], static_cast<std::uint32_t>(i % fp_.p()));
    return Poly(fp_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.fp_.add(a.coeff(i), b.coeff(i));
    return Poly(a.fp_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.fp_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.fp_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.fp_);
    std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = a.fp_.add(c[i + j], a.fp_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.fp_, std::move(c));
}

Poly Poly::scaled(std::uint32_t s) const {
    std::vector<std::uint32_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = fp_.mul(c_[i], s);
    return Poly(fp_, std::move(c));
}

std::uint32_t Poly::eval(std::uint32_t x) const {
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = fp_.add(fp_.mul(r, x), c_[i]);
    return r;
}

Matrix Poly::eval_matrix(const Matrix& m) const {
    if (!m.is_square()) throw ValidationError("eval_matrix: non-square");
    Matrix r(m.rows(), m.rows(), fp_);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * m;
        for (std::size_t d = 0; d < m.rows(); ++d)
            r(d, d) = fp_.add(r(d, d), c_[i]);
    }
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ValidationError("polynomial division by zero");
    const Fp fp = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(fp), a};
    std::vector<std::uint32_t> rem(a.coeffs());
    std::vector<std::uint32_t> quo(a.degree() - b.degree() + 1, 0);
    const std::uint32_t inv_lead = fp.inv(b.lead());
    for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(b.degree());) {
        std::uint32_t c = fp.mul(rem[i], inv_lead);
        if (c == 0) continue;
        quo[i - b.degree()] = c;
        for (int j = 0; j <= b.degree(); ++j) {
            std::size_t k = i - b.degree() + j;
            rem[k] = fp.sub(rem[k], fp.mul(c, b.coeff(j)));
        }
    }
    return {Poly(fp, std::move(quo)), Poly(fp, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Egcd egcd(const Poly& a, const Poly& b) {
    const Fp fp = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(fp), s1 = Poly::zero(fp);
    Poly t0 = Poly::zero(fp), t1 = Poly::one(fp);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::uint32_t c = fp.inv(r0.lead());
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::one(base.field()) % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

namespace {

// f = g(x^p) over the prime field means f = (g with the same coefficients)^p,
// because Frobenius fixes F_p pointwise.
Poly pth_root(const Poly& f) {
    const std::uint32_t p = f.field().p();
    std::vector<std::uint32_t> c(f.degree() / p + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeff(i * static_cast<std::size_t>(p));
    return Poly(f.field(), std::move(c));
}

// monic squarefree decomposition: input = prod part^multiplicity
void squarefree_decompose(const Poly& f, std::size_t outer_mult,
                          std::map<std::size_t, Poly>& out) {
    const Fp fp = f.field();
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * fp.p(), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = (f / c).monic();
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = (w / y).monic();
        if (!z.is_one()) {
            auto [it, fresh] = out.try_emplace(i * outer_mult, z);
            if (!fresh) it->second = (it->second * z).monic();
        }
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(c, outer_mult, out);
}

Poly random_poly(Fp fp, int max_deg, Rng& rng) {
    std::vector<std::uint32_t> c(max_deg + 1);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(fp.p()));
    return Poly(fp, std::move(c));
}

// x^(p^k) mod f by k successive Frobenius power maps
Poly frobenius_iterate(const Poly& start, std::size_t k, const Poly& mod) {
    Poly h = start % mod;
    for (std::size_t i = 0; i < k; ++i)
        h = pow_mod(h, mod.field().p(), mod);
    return h;
}

// equal-degree splitting of a monic squarefree product of degree-d factors
void equal_degree_split(const Poly& f, std::size_t d, Rng& rng,
                        std::vector<Poly>& out) {
    const Fp fp = f.field();
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly a = random_poly(fp, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        Poly t(fp);
        if (fp.p() == 2) {
            // trace map over F_{2^d}
            t = Poly::zero(fp);
            Poly b = a % f;
            for (std::size_t i = 0; i < d; ++i) {
                t = (t + b) % f;
                b = (b * b) % f;
            }
        } else {
            // norm to F_p, then a Legendre-style power; splits with
            // probability >= 1/2 per attempt
            Poly c = a % f;
            Poly acc = c;
            for (std::size_t i = 1; i < d; ++i) {
                c = pow_mod(c, fp.p(), f);
                acc = (acc * c) % f;
            }
            t = pow_mod(acc, (fp.p() - 1) / 2, f) - Poly::one(fp);
        }
        Poly g = gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((f / g).monic(), d, rng, out);
            return;
        }
    }
    throw RetryError("equal-degree splitting did not find a factor in 256 tries");
}

}  // namespace

Factorization factor_poly(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw ValidationError("factor_poly: zero polynomial");
    Factorization result{f.lead(), {}};
    if (f.degree() == 0) return result;

    std::map<std::size_t, Poly> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    Rng rng(seed);
    std::vector<std::pair<Poly, std::size_t>> irreducibles;
    for (const auto& [mult, part] : squarefree) {
        // distinct-degree splitting of the squarefree part
        Poly rest = part;
        Poly h = Poly::x(f.field()) % rest;
        std::size_t d = 0;
        while (rest.degree() > 0 &&
               static_cast<std::size_t>(rest.degree()) >= 2 * (d + 1)) {
            ++d;
            h = pow_mod(h, f.field().p(), rest);
            Poly g = gcd(h - Poly::x(f.field()), rest);
            if (g.degree() > 0) {
                std::vector<Poly> split;
                equal_degree_split(g, d, rng, split);
                for (auto& irr : split) irreducibles.emplace_back(irr, mult);
                rest = (rest / g).monic();
                h = h % rest;
            }
        }
        if (rest.degree() > 0) irreducibles.emplace_back(rest, mult);
    }

    std::sort(irreducibles.begin(), irreducibles.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  if (a.first.coeffs() != b.first.coeffs())
                      return a.first.coeffs() < b.first.coeffs();
                  return a.second < b.second;
              });
    for (auto& [poly, mult] : irreducibles)
        result.factors.push_back({std::move(poly), mult});
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Fp fp = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const Poly x = Poly::x(fp);
    Poly m = f.monic();
    // x^(p^n) must equal x mod f
    if (!(frobenius_iterate(x, n, m) - x % m).is_zero()) return false;
    // and x^(p^(n/q)) - x must be coprime to f for each prime q | n
    std::size_t nn = n;
    for (std::size_t q = 2; q * q <= nn; ++q) {
        if (nn % q) continue;
        while (nn % q == 0) nn /= q;
        if (gcd(frobenius_iterate(x, n / q, m) - x, m).degree() != 0)
            return false;
    }
    if (nn > 1 &&
        gcd(frobenius_iterate(x, n / nn, m) - x, m).degree() != 0)
        return false;
    return true;
}

namespace {

// Krylov chain from v with coefficient tracking: rows are
// [vector | combination], reduced incrementally. Returns the annihilator and
// the chain vectors (whose span is m-invariant).
std::pair<Poly, Matrix> krylov_annihilator(const Matrix& m,
                                           std::vector<std::uint32_t> v) {
    const Fp fp = m.field();
    const std::size_t n = m.rows();
    Matrix aug(0, 2 * n + 2, fp);
    std::vector<std::uint32_t> chain_coeffs;
    std::size_t step = 0;
    for (;;) {
        std::vector<std::uint32_t> row(2 * n + 2, 0);
        std::copy(v.begin(), v.end(), row.begin());
        row[n + step] = 1;
        Matrix stacked(aug.rows() + 1, 2 * n + 2, fp);
        for (std::size_t i = 0; i < aug.rows(); ++i)
            std::copy_n(aug.row(i), 2 * n + 2, stacked.row(i));
        std::copy(row.begin(), row.end(), stacked.row(aug.rows()));
        RrefResult rr = rref(stacked);
        // dependence shows as a row that is zero on the vector block
        bool dependent = false;
        for (std::size_t i = 0; i < rr.rank; ++i) {
            bool zero_vec = true;
            for (std::size_t j = 0; j < n; ++j)
                if (rr.mat(i, j) != 0) {
                    zero_vec = false;
                    break;
                }
            if (zero_vec) {
                chain_coeffs.assign(rr.mat.row(i) + n,
                                    rr.mat.row(i) + 2 * n + 2);
                dependent = true;
                break;
            }
        }
        if (dependent) break;
        aug = std::move(rr.mat);
        // advance the chain
        std::vector<std::uint32_t> next(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (v[i])
                for (std::size_t j = 0; j < n; ++j)
                    next[j] = fp.add(next[j], fp.mul(v[i], m(i, j)));
        v = std::move(next);
        ++step;
        if (step > n)
            throw InternalError("krylov chain exceeded dimension");
    }
    Matrix chain_rows(aug.rows(), n, fp);
    for (std::size_t i = 0; i < aug.rows(); ++i)
        std::copy_n(aug.row(i), n, chain_rows.row(i));
    return {Poly(fp, std::move(chain_coeffs)).monic(), std::move(chain_rows)};
}

}  // namespace

Poly vector_annihilator(const Matrix& m, std::span<const std::uint32_t> v) {
    if (!m.is_square()) throw ValidationError("vector_annihilator: non-square");
    return krylov_annihilator(m, {v.begin(), v.end()}).first;
}

Poly minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw ValidationError("minimal_polynomial: non-square");
    const Fp fp = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one(fp);

    Poly result = Poly::one(fp);
    // RREF of all Krylov vectors seen so far; their span is m-invariant, so
    // seed vectors inside it have annihilators dividing the running lcm
    Matrix seen(0, n, fp);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> v(n, 0);
        v[s] = 1;
        if (in_row_space(seen, v)) continue;
        auto [ann, chain] = krylov_annihilator(m, v);
        result = lcm(result, ann);
        seen = row_space(vstack(seen, chain));
        if (result.degree() == static_cast<int>(n)) break;
    }

    if (!result.eval_matrix(m).is_zero())
        throw InternalError("minimal_polynomial: verification failed");
    return result;
}

}  // namespace summand
