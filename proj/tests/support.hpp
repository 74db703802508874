#pragma once

// Test-side reference arithmetic. Nothing here calls the library routines
// under test; values are only converted to and from GradedPoly at the edges.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "sympswc/characters.hpp"
#include "sympswc/poly.hpp"

namespace oracle {

using sympswc::Degree;
using sympswc::Exponents;
using sympswc::GradedPoly;
using sympswc::RingPtr;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Dense-free schoolbook polynomial: exponent vector -> coefficient.
struct Naive {
    std::vector<unsigned> weights;
    bool mod2 = true;
    long cap = -1;  // -1: none
    std::map<Exponents, mpz_class> t;

    Degree degree(const Exponents& e) const {
        Degree d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += Degree(e[i]) * weights[i];
        return d;
    }
    bool keep(const Exponents& e) const { return cap < 0 || degree(e) <= Degree(cap); }

    void add(const Exponents& e, const mpz_class& c) {
        if (!keep(e)) return;
        mpz_class& slot = t[e];
        slot += c;
        if (mod2) slot = slot % 2 != 0 ? 1 : 0;
        if (slot == 0) t.erase(e);
    }
};

inline Naive naive_like(const Naive& a) { return Naive{a.weights, a.mod2, a.cap, {}}; }

inline Naive naive_one(std::vector<unsigned> weights, bool mod2, long cap) {
    Naive p{std::move(weights), mod2, cap, {}};
    p.add(Exponents(p.weights.size(), 0), 1);
    return p;
}

inline Naive naive_mul(const Naive& a, const Naive& b) {
    Naive r = naive_like(a);
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

inline Naive naive_pow(Naive base, mpz_class n) {
    Naive r = naive_one(base.weights, base.mod2, base.cap);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = naive_mul(r, base);
        n >>= 1;
        if (n > 0) base = naive_mul(base, base);
    }
    return r;
}

inline Naive from_poly(const GradedPoly& p, long cap = -1) {
    Naive r{p.ring().weights(), p.domain() == sympswc::Domain::GF2, cap, {}};
    for (const auto& [key, c] : p.terms()) r.add(key.exps, c);
    return r;
}

inline std::map<Exponents, mpz_class> term_map(const GradedPoly& p) {
    std::map<Exponents, mpz_class> m;
    for (const auto& [key, c] : p.terms()) m[key.exps] = c;
    return m;
}

inline bool same(const GradedPoly& p, const Naive& n) { return term_map(p) == n.t; }

// Product of (1 + sum_{i in S} x_i) over all subsets S of {0..n-1} with |S| in `sizes`.
inline Naive subset_product(std::size_t n, const std::vector<std::size_t>& sizes, unsigned weight, long cap) {
    Naive r = naive_one(std::vector<unsigned>(n, weight), true, cap);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::size_t pc = __builtin_popcount(mask);
        if (std::find(sizes.begin(), sizes.end(), pc) == sizes.end()) continue;
        Naive f = naive_one(r.weights, true, cap);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                Exponents e(n, 0);
                e[i] = 1;
                f.add(e, 1);
            }
        r = naive_mul(r, f);
    }
    return r;
}

// GF(2)[t] / (t^64 + t^4 + t^3 + t + 1). Evaluation into any commutative ring
// of characteristic 2 is a homomorphism, so equal GF(2) polynomials always
// evaluate equally here.
struct F64 {
    std::uint64_t v = 0;
    friend F64 operator+(F64 a, F64 b) { return {a.v ^ b.v}; }
    friend F64 operator*(F64 a, F64 b) {
        std::uint64_t lo = 0, hi = 0;
        for (int i = 0; i < 64; ++i)
            if (b.v >> i & 1) {
                lo ^= a.v << i;
                if (i) hi ^= a.v >> (64 - i);
            }
        // fold hi * t^64 = hi * (t^4 + t^3 + t + 1)
        for (int round = 0; round < 2; ++round) {
            const std::uint64_t h = hi;
            hi = 0;
            for (int s : {0, 1, 3, 4}) {
                lo ^= h << s;
                if (s) hi ^= h >> (64 - s);
            }
        }
        return {lo};
    }
    friend bool operator==(F64 a, F64 b) { return a.v == b.v; }
};

inline F64 f64_pow(F64 a, std::uint64_t e) {
    F64 r{1};
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

inline F64 eval(const GradedPoly& p, const std::vector<F64>& x) {
    F64 s{0};
    for (const auto& [key, c] : p.terms()) {
        if (mpz_even_p(c.get_mpz_t())) continue;
        F64 m{1};
        for (std::size_t i = 0; i < x.size(); ++i) m = m * f64_pow(x[i], key.exps[i]);
        s = s + m;
    }
    return s;
}

inline mpz_class eval(const GradedPoly& p, const std::vector<mpz_class>& x) {
    mpz_class s = 0;
    for (const auto& [key, c] : p.terms()) {
        mpz_class m = c;
        for (std::size_t i = 0; i < x.size(); ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), key.exps[i]);
            m *= pw;
        }
        s += m;
    }
    return s;
}

// Elementary symmetric values e_0..e_n of the given numbers, from prod (1 + x_i t).
template <class T>
std::vector<T> elementary_values(const std::vector<T>& x, T zero, T one) {
    std::vector<T> e(x.size() + 1, zero);
    e[0] = one;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * x[i];
    return e;
}

inline mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// [x^i] (1-x)^k (1+x)^(n-k)
inline mpz_class sigma_coeff(long n, long i, long k) {
    mpz_class s = 0;
    for (long j = 0; j <= i; ++j) s += (j % 2 ? -1 : 1) * binom(k, j) * binom(n - k, i - j);
    return s;
}

// chi(g_i) = sum_k m_k [x^k] (1-x)^i (1+x)^(n-i)
inline sympswc::CharacterData character_of(const std::vector<mpz_class>& m) {
    const long n = long(m.size()) - 1;
    sympswc::CharacterData chi{std::size_t(n), std::vector<mpz_class>(n + 1)};
    for (long i = 0; i <= n; ++i)
        for (long k = 0; k <= n; ++k) chi.values[i] += m[k] * sigma_coeff(n, k, i);
    return chi;
}

// m_k = 2^-n sum_i [x^i](1-x)^k(1+x)^(n-k) chi(g_i), over Q.
inline std::vector<mpq_class> rational_multiplicities(const std::vector<mpz_class>& chi) {
    const long n = long(chi.size()) - 1;
    std::vector<mpq_class> m(n + 1);
    for (long k = 0; k <= n; ++k) {
        mpq_class s = 0;
        for (long i = 0; i <= n; ++i) s += mpq_class(sigma_coeff(n, i, k) * chi[i]);
        m[k] = s / mpq_class(mpz_class(1) << n);
        m[k].canonicalize();
    }
    return m;
}

// Random multiplicities with m_k (k >= 1) a multiple of `step`.
inline std::vector<mpz_class> random_multiplicities(Rng& rng, std::size_t n, long step, long max_units) {
    std::vector<mpz_class> m(n + 1);
    m[0] = uniform(rng, 0, 50);
    for (std::size_t k = 1; k <= n; ++k) m[k] = step * uniform(rng, 0, max_units);
    return m;
}

inline sympswc::CharacterData random_orthogonal(Rng& rng, std::size_t n, long max_units = 6) {
    return character_of(random_multiplicities(rng, n, 4, max_units));
}

inline GradedPoly random_poly(Rng& rng, const RingPtr& ring, int nterms, int maxexp, sympswc::Cap cap = {}) {
    GradedPoly p(ring, cap);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(ring->num_vars());
        for (auto& x : e) x = uniform(rng, 0, maxexp);
        p.add_term(e, ring->domain() == sympswc::Domain::GF2 ? 1 : uniform(rng, -9, 9));
    }
    return p;
}

}  // namespace oracle
