#include "doctest.h"
#include "support.hpp"

#include "sympswc/render.hpp"
#include "sympswc/swc.hpp"
#include "sympswc/symfunc.hpp"

using namespace sympswc;

namespace {

CharacterData chi(std::size_t n, std::vector<long> v) {
    CharacterData c{n, {}};
    for (long x : v) c.values.emplace_back(x);
    return c;
}

GradedPoly E(std::size_t n, const std::string& s) { return parse_text(s, e_ring(n)); }

// prod_k prod_{|S|=k} (1 + sum_S e_i)^(m_k/4), schoolbook, truncated.
oracle::Naive naive_total(const std::vector<mpz_class>& m, long cap) {
    const std::size_t n = m.size() - 1;
    oracle::Naive r = oracle::naive_one(std::vector<unsigned>(n, 4), true, cap);
    for (std::size_t k = 1; k <= n; ++k) {
        if (m[k] == 0) continue;
        auto f = oracle::subset_product(n, {k}, 4, cap);
        r = oracle::naive_mul(r, oracle::naive_pow(f, m[k] / 4));
    }
    return r;
}

void check_vanishing(const SWClass& cls) {
    CHECK(cls.total().coefficient(Exponents(cls.n(), 0)) == 1);
    for (const auto& [key, c] : cls.total().terms()) CHECK(key.degree % 4 == 0);
}

}  // namespace

TEST_CASE("reweighted Dickson factors") {
    CHECK(dickson_factor_e(2, 2, 64) == E(2, "1 + e1 + e2"));
    CHECK(dickson_factor_e(2, 1, 64) == E(2, "1 + e1 + e2 + e1*e2"));
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(oracle::same(dickson_factor_e(n, k, 40), oracle::subset_product(n, {k}, 4, 40)));
}

TEST_CASE("total class examples") {
    CHECK(total_swc(chi(1, {6, -2}), 64).total() == E(1, "1 + e1"));
    CHECK(total_swc(chi(2, {8, 0, -8}), 64).total() == E(2, "1 + e1 + e2 + e1*e2"));
    CHECK(total_swc(chi(1, {24, 0}), 64).total() == E(1, "1 + e1 + e1^2 + e1^3"));
    CHECK_THROWS_AS(total_swc(chi(1, {2, 0}), 64), Error);
}

TEST_CASE("total class against schoolbook product") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = oracle::uniform(rng, 1, 4);
        const auto m = oracle::random_multiplicities(rng, n, 4, 9);
        const auto cls = total_swc(oracle::character_of(m), 24);
        CHECK(oracle::same(cls.total(), naive_total(m, 24)));
        CHECK(cls.exponents().m == m);
        check_vanishing(cls);
    }
}

TEST_CASE("components") {
    const auto cls = total_swc(chi(1, {6, -2}), 16);
    CHECK(w_component(cls, 4) == E(1, "e1"));
    CHECK(w_component(cls, 0) == E(1, "1"));
    CHECK(w_component(cls, 5).is_zero());
    CHECK_THROWS_AS(w_component(cls, 20), Error);
}

TEST_CASE("Gow-simplified total class") {
    const auto m3 = std::vector<mpz_class>{0, 0, 8, 0};
    const auto c3 = oracle::character_of(m3);
    const auto d2 = dickson_factor_e(3, 2, 32);
    CHECK(total_swc_gow_orthogonal(c3, 32).total() == (d2 * d2).truncated(32));

    const auto c2 = oracle::character_of({0, 0, 8});
    CHECK(total_swc_gow_orthogonal(c2, 64).total() == E(2, "1 + e1^2 + e2^2"));
    CHECK_THROWS_AS(total_swc_gow_orthogonal(chi(2, {8, 0, -8}), 64), Error);

    oracle::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = oracle::uniform(rng, 1, 5);
        auto m = oracle::random_multiplicities(rng, n, 4, 7);
        for (std::size_t k = 1; k <= n; k += 2) m[k] = 0;
        const auto c = oracle::character_of(m);
        const auto g = total_swc_gow_orthogonal(c, 32);
        CHECK(g.total() == total_swc(c, 32).total());
        check_vanishing(g);
    }
}

TEST_CASE("symmetrized symplectic total class") {
    const auto w1 = total_swc_symmetrized_symplectic(chi(1, {3, -1}), 64);
    CHECK(w1.total() == E(1, "1 + e1"));

    const auto w2 = total_swc_symmetrized_symplectic(chi(2, {9, -3, 1}), 16);
    const auto g = E(2, "1 + e1 + e2");
    CHECK(w2.total() == (E(2, "1 + e1") * E(2, "1 + e2") * g * g).truncated(16));

    CHECK_THROWS_AS(total_swc_symmetrized_symplectic(chi(1, {2, 0}), 16), Error);

    oracle::Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = oracle::uniform(rng, 1, 5);
        auto m = oracle::random_multiplicities(rng, n, 2, 12);
        if (trial % 2)
            for (std::size_t k = 0; k <= n; k += 2) m[k] = 0;
        const auto phi = oracle::character_of(m);
        const auto s = total_swc_symmetrized_symplectic(phi, 32);
        CHECK(s.total() == total_swc(symmetrize(phi), 32).total());
        check_vanishing(s);
    }
}

TEST_CASE("universal formulas") {
    const auto sw = chi(2, {18, -6, 2});
    CHECK(universal_w4(sw) == E(2, "e1 + e2"));
    CHECK(universal_w8(sw) == E(2, "e1*e2 + e1^2 + e2^2"));
    const auto full = total_swc(sw, 16);
    CHECK(graded_component(full.total(), 8) == E(2, "e1*e2 + e1^2 + e2^2"));

    CHECK(universal_w4(chi(1, {6, -2})) == E(1, "e1"));
    CHECK(universal_w4(chi(2, {16, 16, 16})).is_zero());
    CHECK(universal_w8(regular_character(2, 3)).is_zero());
    CHECK_THROWS_AS(universal_w4(chi(1, {6, 2})), Error);
    CHECK_THROWS_AS(universal_w8(chi(1, {6, -2})), Error);

    oracle::Rng rng(44);
    for (std::size_t n = 2; n <= 5; ++n) {
        auto e = e_ring(n);
        GradedPoly E1(e);
        for (std::size_t i = 0; i < n; ++i) E1 = E1 + GradedPoly::variable(e, i);
        for (int trial = 0; trial < 40; ++trial) {
            const auto c = oracle::random_orthogonal(rng, n, 9);
            const auto cls = total_swc(c, 16);
            CHECK(universal_w4(c) == w_component(cls, 4));
            // The printed w_8 omits the cross term r_1 r_2 E_1^2 of the product expansion.
            const mpz_class r1 = (c.values[0] - c.values[2]) / 16;
            const mpz_class r2 = (c.values[0] - 2 * c.values[1] + c.values[2]) / 16;
            const bool cross = mpz_odd_p(mpz_class(r1 * r2).get_mpz_t());
            const GradedPoly gap = cross ? E1 * E1 : GradedPoly(e);
            CHECK(universal_w8(c) + w_component(cls, 8) == gap);
        }
    }
}

TEST_CASE("Sp(4,q) closed form") {
    const auto pi1 = sp4_closed_form(symmetrize(sp4_pi1_character(3)), 32);
    const auto r = E(2, "1 + e1") * E(2, "1 + e2");
    CHECK(pi1.total() == pow_big(r.truncated(32), 10));
    CHECK(sp4_closed_form(chi(2, {8, 0, -8}), 64).total() == r);
    CHECK(sp4_closed_form(chi(2, {8, -8, 8}), 64).total() == E(2, "1 + e1^2 + e2^2"));
    CHECK_THROWS_AS(sp4_closed_form(chi(1, {6, -2}), 64), Error);
    CHECK_THROWS_AS(sp4_closed_form(chi(2, {8, 0, 0}), 64), Error);

    oracle::Rng rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_orthogonal(rng, 2, 40);
        CHECK(sp4_closed_form(c, 32).total() == total_swc(c, 32).total());
    }
}

TEST_CASE("Sp(4,q) generator parity") {
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
        const auto w1 = total_swc(symmetrize(sp4_pi1_character(q)), 16);
        const auto w2 = total_swc(symmetrize(sp4_pi2_character(q)), 16);
        const bool odd1 = mpz_odd_p(mpz_class(w1.exponents().m[1] / 4).get_mpz_t());
        const bool odd2 = mpz_odd_p(mpz_class(w2.exponents().m[1] / 4).get_mpz_t());
        CHECK(odd1 == (q % 4 == 1));
        CHECK(odd2 == (q % 4 == 3));
        CHECK((w_component(w1, 4) == E(2, "e1 + e2")) == odd1);
        CHECK((w_component(w2, 4) == E(2, "e1 + e2")) == odd2);
        CHECK(w_component(w1, 8).coefficient({1, 1}) == (odd1 ? 1 : 0));
    }
}

TEST_CASE("restriction oracle") {
    CHECK(restriction_oracle(chi(1, {6, -2}), 32));
    CHECK(restriction_oracle(regular_character(2, 3), 32));
    oracle::Rng rng(46);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = oracle::uniform(rng, 1, 4);
        CHECK(restriction_oracle(oracle::random_orthogonal(rng, n, 30), 32));
    }
}

TEST_CASE("regular representation") {
    const std::pair<std::size_t, std::uint64_t> cases[] = {{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 3}};
    for (auto [n, q] : cases) {
        const auto cls = total_swc(regular_character(n, q), 32);
        const mpz_class N = group_order_sp(n, q) >> (n + 2);
        auto all = oracle::subset_product(n, {1, 2, 3}, 4, 32);
        CHECK(oracle::same(cls.total(), oracle::naive_pow(all, N)));
        CHECK(cls.total() == pow_big(dickson_total_e(n, 32), N));
    }
}

TEST_CASE("class invariants are enforced") {
    auto r = e_ring(2);
    MultiplicityVector mv{2, {0, 0, 0}};
    CHECK_THROWS_AS(SWClass(2, E(2, "e1"), mv), Error);
    CHECK_THROWS_AS(SWClass(2, E(2, "1 + e1"), mv), Error);
    CHECK_NOTHROW(SWClass(2, E(2, "1 + e1 + e2"), mv));
    auto v = make_uniform_ring("e", 2, 1, Domain::GF2);
    CHECK_THROWS_AS(SWClass(2, GradedPoly::one(v) + GradedPoly::variable(v, 0) + GradedPoly::variable(v, 1), mv), Error);
}
