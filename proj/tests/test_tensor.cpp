#include "doctest.h"
#include "support.hpp"

#include "sympswc/render.hpp"
#include "sympswc/symfunc.hpp"
#include "sympswc/tensor.hpp"

using namespace sympswc;

namespace {

std::vector<GradedPoly> vars(const RingPtr& r, std::size_t first, std::size_t count) {
    std::vector<GradedPoly> out;
    for (std::size_t i = first; i < first + count; ++i) out.push_back(GradedPoly::variable(r, i));
    return out;
}

oracle::Naive direct_product(const RingPtr& r, std::size_t m, std::size_t n, bool mod2) {
    oracle::Naive p = oracle::naive_one(r->weights(), mod2, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            oracle::Naive f = oracle::naive_one(r->weights(), mod2, -1);
            Exponents a(r->num_vars(), 0), b(r->num_vars(), 0);
            a[i] = 1;
            b[m + j] = 1;
            f.add(a, 1);
            f.add(b, 1);
            p = oracle::naive_mul(p, f);
        }
    return p;
}

}  // namespace

TEST_CASE("tensor with a trivial factor") {
    auto r = make_uniform_ring("v", 3, 1, Domain::GF2);
    auto a = ClassVector::from_roots(vars(r, 0, 3));
    ClassVector b;
    auto t = tensor_class(a, b, Domain::GF2);
    CHECK(t == GradedPoly::one(r));
    // a trivial line (w_1 = 0) leaves the class unchanged
    ClassVector line{1, {GradedPoly(r)}};
    auto total = GradedPoly::one(r);
    for (const auto& c : a.components) total = total + c;
    CHECK(tensor_class(a, line, Domain::GF2) == total);
}

TEST_CASE("line tensor line") {
    auto r = make_uniform_ring("v", 2, 1, Domain::GF2);
    ClassVector a{1, {GradedPoly::variable(r, 0)}};
    ClassVector b{1, {GradedPoly::variable(r, 1)}};
    CHECK(to_text(tensor_class(a, b, Domain::GF2)) == "1 + v1 + v2");
}

TEST_CASE("split classes match the direct product") {
    for (Domain d : {Domain::GF2, Domain::Integer})
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t n = 1; n <= 4; ++n) {
                if (m * n > 9 && d == Domain::Integer) continue;
                auto r = make_uniform_ring("v", m + n, 1, d);
                auto a = ClassVector::from_roots(vars(r, 0, m));
                auto b = ClassVector::from_roots(vars(r, m, n));
                CHECK(oracle::same(tensor_class(a, b, d), direct_product(r, m, n, d == Domain::GF2)));
            }
}

TEST_CASE("random split classes") {
    oracle::Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const Domain d = trial % 2 ? Domain::GF2 : Domain::Integer;
        const std::size_t m = oracle::uniform(rng, 1, 3), n = oracle::uniform(rng, 1, 3);
        auto r = make_uniform_ring("t", 2, 1, d);
        std::vector<GradedPoly> xa, yb;
        // roots are random linear forms in t1, t2
        auto lin = [&] {
            GradedPoly p(r);
            p.add_term({1, 0}, oracle::uniform(rng, -2, 2));
            p.add_term({0, 1}, oracle::uniform(rng, -2, 2));
            return p;
        };
        for (std::size_t i = 0; i < m; ++i) xa.push_back(lin());
        for (std::size_t j = 0; j < n; ++j) yb.push_back(lin());
        GradedPoly direct = GradedPoly::one(r);
        for (auto& x : xa)
            for (auto& y : yb) direct = direct * (GradedPoly::one(r) + x + y);
        auto got = tensor_class(ClassVector::from_roots(xa), ClassVector::from_roots(yb), d);
        CHECK(got == direct);
        auto swapped = tensor_class(ClassVector::from_roots(yb), ClassVector::from_roots(xa), d);
        CHECK(swapped == got);
    }
}

TEST_CASE("tensor guards") {
    auto r = make_uniform_ring("v", 2, 1, Domain::GF2);
    auto a = ClassVector::from_roots(vars(r, 0, 1));
    CHECK_THROWS_AS(tensor_class(a, a, Domain::Integer), Error);
    ClassVector none;
    CHECK_THROWS_AS(tensor_class(none, none, Domain::GF2), Error);
    ClassVector big{5, std::vector<GradedPoly>(5, GradedPoly(r))};
    CHECK_THROWS_AS(tensor_class(big, big, Domain::GF2), Error);
    ClassVector bad{1, {GradedPoly::one(r)}};
    CHECK_THROWS_AS(bad.check(), Error);
    ClassVector wide{1, {GradedPoly::variable(make_uniform_ring("u", 3, 1, Domain::GF2), 0)}};
    CHECK_THROWS_AS(tensor_class(a, wide, Domain::GF2), Error);
}

TEST_CASE("slicing a total class") {
    auto r = make_uniform_ring("v", 3, 1, Domain::GF2);
    auto roots = vars(r, 0, 3);
    GradedPoly total = GradedPoly::one(r);
    for (auto& x : roots) total = total * (GradedPoly::one(r) + x);
    auto cv = ClassVector::from_total(total, 3);
    auto ref = ClassVector::from_roots(roots);
    for (std::size_t i = 0; i < 3; ++i) CHECK(cv.components[i] == ref.components[i]);
    CHECK_THROWS_AS(ClassVector::from_total(total, 2), Error);
}

TEST_CASE("iterated products fold left to right") {
    auto r = make_uniform_ring("v", 3, 1, Domain::GF2);
    std::vector<ClassVector> f{ClassVector::from_roots(vars(r, 0, 1)), ClassVector::from_roots(vars(r, 1, 1)),
                               ClassVector::from_roots(vars(r, 2, 1))};
    auto got = tensor_fold(f, Domain::GF2);
    CHECK(to_text(got) == "1 + v1 + v2 + v3");
    // two-dimensional factors: roots {v1, v2} and {v3}; then with {v3} again
    auto r4 = make_uniform_ring("v", 4, 1, Domain::GF2);
    std::vector<ClassVector> g{ClassVector::from_roots(vars(r4, 0, 2)), ClassVector::from_roots(vars(r4, 2, 1)),
                               ClassVector::from_roots(vars(r4, 3, 1))};
    GradedPoly direct = GradedPoly::one(r4);
    for (std::size_t i = 0; i < 2; ++i)
        direct = direct * (GradedPoly::one(r4) + GradedPoly::variable(r4, i) + GradedPoly::variable(r4, 2) +
                           GradedPoly::variable(r4, 3));
    CHECK(tensor_fold(g, Domain::GF2) == direct);
}

TEST_CASE("mod-2 Chern classes") {
    auto w = mod2_chern(weil_character(2, 3), 16);
    auto e = e_ring(2);
    auto E = [&](const std::string& s) { return parse_text(s, e); };
    auto g = E("1 + e1 + e2");
    CHECK(w.total() == (E("1 + e1") * E("1 + e2") * g * g).truncated(16));
    CHECK(w.exponents().m[1] == 4);
    CHECK(w.exponents().m[2] == 8);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t q : {3, 5, 7}) {
            auto a = mod2_chern(weil_character(n, q), 32);
            auto b = mod2_chern(weil_prime_character(n, q), 32);
            CHECK(a.total() == b.total());
            const auto closed = weil_multiplicities_closed_form(n, q);
            std::vector<mpz_class> pw(n + 1, 0);
            for (std::size_t k = 1; k <= n; ++k) pw[k] = closed.m[k] / 4;
            CHECK(a.total() == dickson_product(n, pw, 32));
        }
}
