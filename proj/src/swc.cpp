#include "sympswc/swc.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "sympswc/symfunc.hpp"

namespace sympswc {

namespace {

mpz_class exact_quotient(const mpz_class& num, unsigned long den, const std::string& what) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), den))
        throw Error(ErrorKind::DivisibilityViolation,
                    what + " = " + num.get_str() + " is not divisible by " + std::to_string(den) +
                        ": input is not a valid orthogonal character");
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), den);
    return q;
}

mpz_class choose2(const mpz_class& r) { return r * (r - 1) / 2; }

bool odd(const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

void require_rank(const CharacterData& chi, std::size_t min_n, const char* what) {
    check_character(chi);
    if (chi.n < min_n)
        throw Error(ErrorKind::RankMismatch, std::string(what) + " needs n >= " + std::to_string(min_n));
}

std::vector<GradedPoly> e_elementary(std::size_t n, Cap cap) {
    std::vector<GradedPoly> images;
    for (std::size_t i = 1; i <= n; ++i) images.push_back(elementary_symmetric(e_ring(n), i, cap));
    return images;
}

}  // namespace

RingPtr e_ring(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, RingPtr> rings;
    std::lock_guard lock(mutex);
    auto& r = rings[n];
    if (!r) r = make_uniform_ring("e", n, 4, Domain::GF2);
    return r;
}

GradedPoly dickson_factor_e(std::size_t n, std::size_t k, Cap cap) {
    return substitute(dickson_factor(n, k), e_elementary(n, cap), e_ring(n), cap);
}

GradedPoly dickson_total_e(std::size_t n, Cap cap) {
    return substitute(dickson_total(n), e_elementary(n, cap), e_ring(n), cap);
}

SWClass::SWClass(std::size_t n, GradedPoly total, MultiplicityVector exponents)
    : n_(n), total_(std::move(total)), exponents_(std::move(exponents)) {
    if (total_.ring().num_vars() != n_ || total_.domain() != Domain::GF2)
        throw Error(ErrorKind::RingMismatch, "SWClass: total class must live in F_2[e_1..e_n]");
    if (total_.coefficient(Exponents(n_, 0)) != 1)
        throw Error(ErrorKind::DivisibilityViolation, "SWClass: w_0 must be 1");
    for (const auto& [key, c] : total_.terms())
        if (key.degree % 4 != 0)
            throw Error(ErrorKind::DivisibilityViolation,
                        "SWClass: nonzero w_" + std::to_string(key.degree) + " in a degree not divisible by 4");
    if (!is_symmetric(total_, 0, n_)) throw Error(ErrorKind::NotSymmetric, "SWClass: total class is not symmetric");
}

GradedPoly dickson_product(std::size_t n, const std::vector<mpz_class>& powers, Degree cap) {
    if (powers.size() != n + 1) throw Error(ErrorKind::RankMismatch, "dickson_product: need n+1 exponents");
    GradedPoly out = GradedPoly::one(e_ring(n), cap);
    for (std::size_t k = 1; k <= n; ++k) {
        if (powers[k] == 0) continue;
        out = mul(out, pow_big(dickson_factor_e(n, k, cap), powers[k]));
    }
    return out;
}

namespace {

SWClass from_orthogonal_multiplicities(const MultiplicityVector& mv, Degree cap) {
    std::vector<mpz_class> powers(mv.n + 1, 0);
    for (std::size_t k = 1; k <= mv.n; ++k)
        powers[k] = exact_quotient(mv.m[k], 4, "m_" + std::to_string(k));
    return SWClass(mv.n, dickson_product(mv.n, powers, cap), mv);
}

}  // namespace

SWClass total_swc(const CharacterData& chi, Degree cap) {
    return from_orthogonal_multiplicities(validate_orthogonal(chi), cap);
}

SWClass total_swc_gow_orthogonal(const CharacterData& chi, Degree cap) {
    check_character(chi);
    if (!is_gow_symmetric(chi))
        throw Error(ErrorKind::GowSymmetryViolation, "character is not palindromic: chi(g_i) != chi(g_{n-i})");
    return from_orthogonal_multiplicities(gow_multiplicities(chi), cap);
}

SWClass total_swc_symmetrized_symplectic(const CharacterData& chi_phi, Degree cap) {
    check_character(chi_phi);
    bool skew = true;
    for (std::size_t i = 0; i <= chi_phi.n; ++i)
        if (chi_phi.values[i] != -chi_phi.values[chi_phi.n - i]) skew = false;
    const MultiplicityVector mv = skew ? skew_gow_multiplicities(chi_phi) : multiplicities(chi_phi);

    std::vector<mpz_class> powers(mv.n + 1, 0);
    MultiplicityVector doubled = mv;
    for (std::size_t k = 0; k <= mv.n; ++k) {
        doubled.m[k] *= 2;
        if (k == 0) continue;
        if (odd(mv.m[k]))
            throw Error(ErrorKind::ParityViolation,
                        "m_" + std::to_string(k) + "(phi) = " + mv.m[k].get_str() + " is odd", k);
        powers[k] = mv.m[k] / 2;
    }
    return SWClass(mv.n, dickson_product(mv.n, powers, cap), doubled);
}

GradedPoly w_component(const SWClass& cls, Degree k) {
    if (cls.cap() && k > *cls.cap())
        throw Error(ErrorKind::CapExceeded,
                    "w_" + std::to_string(k) + " lies above the truncation cap " + std::to_string(*cls.cap()));
    return graded_component(cls.total(), k);
}

GradedPoly universal_w4(const CharacterData& chi) {
    require_rank(chi, 1, "w_4 formula");
    const mpz_class coeff = exact_quotient(chi.values[0] - chi.values[1], 8, "deg - chi(g_1)");
    const RingPtr ring = e_ring(chi.n);
    GradedPoly out(ring);
    if (odd(coeff)) out = elementary_symmetric(ring, 1);
    return out;
}

GradedPoly universal_w8(const CharacterData& chi) {
    require_rank(chi, 2, "w_8 formula");
    const mpz_class& deg = chi.values[0];
    const mpz_class r1 = exact_quotient(deg - chi.values[2], 16, "deg - chi(g_2)");
    const mpz_class r2 = exact_quotient(deg - 2 * chi.values[1] + chi.values[2], 16, "deg - 2chi(g_1) + chi(g_2)");
    const RingPtr ring = e_ring(chi.n);
    GradedPoly out(ring);
    if (odd(r1)) out = add(out, elementary_symmetric(ring, 2));
    if (odd(choose2(r1) + choose2(r2))) {
        const GradedPoly e1 = elementary_symmetric(ring, 1);
        out = add(out, mul(e1, e1));
    }
    return out;
}

SWClass sp4_closed_form(const CharacterData& chi, Degree cap) {
    check_character(chi);
    if (chi.n != 2) throw Error(ErrorKind::RankMismatch, "the Sp(4,q) closed form needs n = 2");
    const mpz_class r = exact_quotient(chi.values[0] - chi.values[2], 16, "chi(1) - chi(-1)");
    const mpz_class s = exact_quotient(chi.values[0] - 2 * chi.values[1] + chi.values[2], 16,
                                       "chi(1) - 2chi(g_1) + chi(-1)");
    if (r < 0 || s < 0) throw Error(ErrorKind::NegativeMultiplicity, "negative exponent in the Sp(4,q) closed form");

    const RingPtr ring = e_ring(2);
    const GradedPoly one = GradedPoly::one(ring, cap);
    const GradedPoly e1 = GradedPoly::variable(ring, 0, cap);
    const GradedPoly e2 = GradedPoly::variable(ring, 1, cap);
    const GradedPoly first = mul(one + e1, one + e2);
    const GradedPoly second = one + e1 + e2;
    GradedPoly total = mul(pow_big(first, r), pow_big(second, s));
    return SWClass(2, std::move(total), MultiplicityVector{2, {0, 4 * r, 4 * s}});
}

bool restriction_oracle(const CharacterData& chi, Degree cap) {
    const MultiplicityVector mv = validate_orthogonal(chi);
    const std::size_t n = chi.n;
    const RingPtr v = v_ring(n);

    std::vector<GradedPoly> fourth_powers;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 4;
        fourth_powers.push_back(GradedPoly::monomial(v, e, 1, cap));
    }
    const GradedPoly pulled_back = substitute(total_swc(chi, cap).total(), fourth_powers, v, cap);

    GradedPoly direct = GradedPoly::one(v, cap);
    for (std::size_t k = 1; k <= n; ++k)
        if (mv.m[k] != 0) direct = mul(direct, pow_big(orbit_product(n, k, cap), mv.m[k]));
    return pulled_back == direct;
}

}  // namespace sympswc
