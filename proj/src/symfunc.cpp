#include "sympswc/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

namespace sympswc {

namespace {

// Read-mostly memo table; concurrent fills compute the same value, the
// first insertion wins.
template <class Key, class Value>
class MemoTable {
   public:
    template <class Fn>
    Value get(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

   private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct AlphabetKey {
    std::uint64_t degree;
    Exponents exps;
    auto operator<=>(const AlphabetKey&) const = default;
};

}  // namespace

GradedPoly elementary_symmetric(const RingPtr& ring, std::size_t k, std::size_t first, std::size_t count, Cap cap) {
    if (first + count > ring->num_vars())
        throw Error(ErrorKind::IndexOutOfRange, "elementary_symmetric: alphabet exceeds ring");
    GradedPoly out(ring, cap);
    for_each_subset(count, k, [&](const std::vector<std::size_t>& s) {
        Exponents e(ring->num_vars(), 0);
        for (std::size_t i : s) e[first + i] = 1;
        out.add_term(e, 1);
    });
    return out;
}

GradedPoly elementary_symmetric(const RingPtr& ring, std::size_t k, Cap cap) {
    return elementary_symmetric(ring, k, 0, ring->num_vars(), cap);
}

GradedPoly elementary_symmetric(std::size_t num_vars, std::size_t k, Domain domain) {
    return elementary_symmetric(make_uniform_ring("x", num_vars, 1, domain), k);
}

RingPtr v_ring(std::size_t n) {
    static MemoTable<std::size_t, RingPtr> rings;
    return rings.get(n, [&] { return make_uniform_ring("v", n, 1, Domain::GF2); });
}

GradedPoly orbit_product(std::size_t n, std::size_t k, Cap cap) {
    if (k > n) throw Error(ErrorKind::IndexOutOfRange, "orbit_product: weight exceeds rank", k);
    const RingPtr ring = v_ring(n);
    GradedPoly out = GradedPoly::one(ring, cap);
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
        if (s.empty()) return;
        GradedPoly factor = GradedPoly::one(ring, cap);
        for (std::size_t i : s) factor = add(factor, GradedPoly::variable(ring, i, cap));
        out = mul(out, factor);
    });
    return out;
}

bool is_symmetric(const GradedPoly& p, std::size_t first, std::size_t count) {
    if (count < 2) return true;
    const std::size_t nv = p.ring().num_vars();
    // S_count is generated by the transposition (0 1) and the cycle (0 1 .. count-1).
    std::vector<std::size_t> swap(nv), cycle(nv);
    std::iota(swap.begin(), swap.end(), 0);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::swap(swap[first], swap[first + 1]);
    for (std::size_t i = 0; i < count; ++i) cycle[first + i] = first + (i + 1) % count;
    return permute_variables(p, swap) == p && permute_variables(p, cycle) == p;
}

GradedPoly reduce_alphabet(const GradedPoly& p, std::size_t first, std::size_t count, const std::string& prefix) {
    const Ring& ring = p.ring();
    const std::size_t nv = ring.num_vars();
    if (first + count > nv) throw Error(ErrorKind::IndexOutOfRange, "reduce_alphabet: alphabet exceeds ring");
    const Domain domain = ring.domain();

    unsigned w = count ? ring.weights()[first] : 1;
    for (std::size_t i = 0; i < count; ++i)
        if (ring.weights()[first + i] != w)
            throw Error(ErrorKind::NotSymmetric, "reduce_alphabet: alphabet variables carry different weights");
    if (!is_symmetric(p, first, count))
        throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric in the reduced variables");

    std::vector<std::string> names = ring.names();
    std::vector<unsigned> weights = ring.weights();
    for (std::size_t i = 0; i < count; ++i) {
        names[first + i] = prefix + std::to_string(i + 1);
        weights[first + i] = w * static_cast<unsigned>(i + 1);
    }
    const RingPtr out_ring = make_ring(std::move(names), std::move(weights), domain);
    GradedPoly out(out_ring, p.cap());

    // Split every term into its alphabet part (bucket key) and the rest.
    using RestMap = std::map<Exponents, mpz_class>;
    std::map<AlphabetKey, RestMap> buckets;
    auto bump = [domain](RestMap& m, const Exponents& rest, const mpz_class& c) {
        auto [it, inserted] = m.try_emplace(rest, domain == Domain::GF2 ? mpz_class(1) : c);
        if (inserted) return;
        if (domain == Domain::GF2) {
            m.erase(it);
        } else {
            it->second += c;
            if (it->second == 0) m.erase(it);
        }
    };
    for (const auto& [key, c] : p.terms()) {
        AlphabetKey ak{0, Exponents(key.exps.begin() + first, key.exps.begin() + first + count)};
        for (auto e : ak.exps) ak.degree += e;
        Exponents rest = key.exps;
        std::fill(rest.begin() + first, rest.begin() + first + count, 0);
        bump(buckets[ak], rest, c);
    }

    // Products of elementary polynomials in the bare alphabet, cached by exponent.
    const RingPtr aux = make_uniform_ring("t", count, 1, domain);
    std::vector<GradedPoly> elem;
    for (std::size_t i = 0; i <= count; ++i) elem.push_back(elementary_symmetric(aux, i));
    std::map<Exponents, GradedPoly> products;
    auto product_of = [&](const Exponents& b) -> const GradedPoly& {
        if (auto it = products.find(b); it != products.end()) return it->second;
        GradedPoly prod = GradedPoly::one(aux);
        for (std::size_t i = 0; i < count; ++i)
            for (std::uint32_t r = 0; r < b[i]; ++r) prod = mul(prod, elem[i + 1]);
        return products.emplace(b, std::move(prod)).first->second;
    };

    while (!buckets.empty()) {
        auto lead = std::prev(buckets.end());
        if (lead->second.empty()) {
            buckets.erase(lead);
            continue;
        }
        const Exponents a = lead->first.exps;
        const RestMap coeff = lead->second;
        Exponents b(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint32_t next = i + 1 < count ? a[i + 1] : 0;
            if (a[i] < next) throw Error(ErrorKind::NotSymmetric, "leading monomial is not a partition");
            b[i] = a[i] - next;
        }

        for (const auto& [key, ct] : product_of(b).terms()) {
            RestMap& target = buckets[AlphabetKey{key.degree, key.exps}];
            for (const auto& [rest, c] : coeff) bump(target, rest, -(c * ct));
        }
        for (const auto& [rest, c] : coeff) {
            Exponents e = rest;
            std::copy(b.begin(), b.end(), e.begin() + first);
            out.add_term(e, c);
        }
        if (!lead->second.empty())
            throw Error(ErrorKind::NotSymmetric, "symmetric reduction failed to cancel its leading term");
        buckets.erase(lead);
    }
    return out;
}

GradedPoly symmetric_to_elementary(const GradedPoly& p) { return reduce_alphabet(p, 0, p.ring().num_vars()); }

GradedPoly expand_elementary(const GradedPoly& in_e_basis, const RingPtr& roots_ring, Cap cap) {
    std::vector<GradedPoly> images;
    for (std::size_t i = 1; i <= in_e_basis.ring().num_vars(); ++i)
        images.push_back(elementary_symmetric(roots_ring, i, cap));
    return substitute(in_e_basis, images, roots_ring, cap);
}

GradedPoly dickson_factor(std::size_t n, std::size_t k) {
    if (k < 1 || k > n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "dickson_factor: class " + std::to_string(k) + " outside 1.." + std::to_string(n), k);
    static MemoTable<std::pair<std::size_t, std::size_t>, GradedPoly> cache;
    return cache.get({n, k}, [&] { return symmetric_to_elementary(orbit_product(n, k)); });
}

GradedPoly dickson_total(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "dickson_total: rank must be at least 1");
    GradedPoly out = dickson_factor(n, 1);
    for (std::size_t k = 2; k <= n; ++k) out = mul(out, dickson_factor(n, k));
    return out;
}

GradedPoly q_mn(std::size_t m, std::size_t n, Domain domain) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
    const RingPtr ring = make_ring(std::move(names), std::vector<unsigned>(m + n, 1), domain);
    GradedPoly out = GradedPoly::one(ring);
    const GradedPoly one = GradedPoly::one(ring);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out = mul(out, one + GradedPoly::variable(ring, i) + GradedPoly::variable(ring, m + j));
    return out;
}

PmnPolynomial compute_pmn(std::size_t m, std::size_t n, Domain domain) {
    static MemoTable<std::tuple<std::size_t, std::size_t, Domain>, GradedPoly> cache;
    GradedPoly body = cache.get({m, n, domain}, [&] {
        GradedPoly x_reduced = reduce_alphabet(q_mn(m, n, domain), 0, m, "Ex");
        return reduce_alphabet(x_reduced, m, n, "Ey");
    });
    return PmnPolynomial{m, n, domain, std::move(body)};
}

}  // namespace sympswc
