#include "sympswc/poly.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace sympswc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::CapRequired: return "CapRequired";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidFieldOrder: return "InvalidFieldOrder";
        case ErrorKind::MalformedCharacter: return "MalformedCharacter";
        case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
        case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::GowSymmetryViolation: return "GowSymmetryViolation";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::RankLimit: return "RankLimit";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

const char* to_string(Domain d) noexcept { return d == Domain::GF2 ? "GF2" : "Integer"; }

Ring::Ring(std::vector<std::string> names, std::vector<unsigned> weights, Domain domain)
    : names_(std::move(names)), weights_(std::move(weights)), domain_(domain) {
    if (names_.size() != weights_.size())
        throw Error(ErrorKind::RingMismatch, "ring: names and weights differ in length");
    for (unsigned w : weights_)
        if (w == 0) throw Error(ErrorKind::RingMismatch, "ring: variable weights must be positive");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error(ErrorKind::RingMismatch, "ring: duplicate variable name");
}

Degree Ring::degree_of(std::span<const std::uint32_t> exps) const noexcept {
    Degree d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += Degree(exps[i]) * weights_[i];
    return d;
}

bool Ring::compatible(const Ring& other) const noexcept {
    return domain_ == other.domain_ && weights_ == other.weights_;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<unsigned> weights, Domain domain) {
    return std::make_shared<const Ring>(std::move(names), std::move(weights), domain);
}

RingPtr make_uniform_ring(const std::string& prefix, std::size_t n, unsigned weight, Domain domain) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make_ring(std::move(names), std::vector<unsigned>(n, weight), domain);
}

Cap min_cap(Cap a, Cap b) noexcept {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

bool within_cap(Degree d, Cap cap) noexcept { return !cap || d <= *cap; }

namespace {

void require_same_ring(const GradedPoly& a, const GradedPoly& b, const char* op) {
    if (a.ring_ptr() == b.ring_ptr()) return;
    if (!a.ring().compatible(b.ring()) || a.ring().num_vars() != b.ring().num_vars()) {
        std::ostringstream os;
        os << op << ": ring mismatch (" << a.ring().num_vars() << " vars, " << to_string(a.domain()) << " vs "
           << b.ring().num_vars() << " vars, " << to_string(b.domain()) << ")";
        throw Error(ErrorKind::RingMismatch, os.str());
    }
}

// Accumulates into a term map without the per-call cap/domain checks.
void accumulate(GradedPoly::TermMap& terms, Monomial&& key, const mpz_class& c, Domain domain) {
    if (domain == Domain::GF2) {
        auto [it, inserted] = terms.try_emplace(std::move(key), 1);
        if (!inserted) terms.erase(it);
        return;
    }
    auto [it, inserted] = terms.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace

GradedPoly::GradedPoly(RingPtr ring, Cap cap) : ring_(std::move(ring)), cap_(cap) {
    if (!ring_) throw Error(ErrorKind::RingMismatch, "polynomial without a ring");
}

GradedPoly GradedPoly::constant(RingPtr ring, const mpz_class& c, Cap cap) {
    GradedPoly p(std::move(ring), cap);
    p.add_term(Exponents(p.ring().num_vars(), 0), c);
    return p;
}

GradedPoly GradedPoly::variable(RingPtr ring, std::size_t i, Cap cap) {
    if (i >= ring->num_vars()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range", i);
    Exponents e(ring->num_vars(), 0);
    e[i] = 1;
    return monomial(std::move(ring), std::move(e), 1, cap);
}

GradedPoly GradedPoly::monomial(RingPtr ring, Exponents exps, const mpz_class& c, Cap cap) {
    GradedPoly p(std::move(ring), cap);
    p.add_term(exps, c);
    return p;
}

mpz_class GradedPoly::coefficient(const Exponents& exps) const {
    if (exps.size() != ring_->num_vars()) return 0;
    auto it = terms_.find(Monomial{ring_->degree_of(exps), exps});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

Degree GradedPoly::max_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::IndexOutOfRange, "degree of the zero polynomial");
    return terms_.rbegin()->first.degree;
}

void GradedPoly::add_term(const Exponents& exps, const mpz_class& c) {
    if (exps.size() != ring_->num_vars())
        throw Error(ErrorKind::RingMismatch, "monomial length does not match ring");
    add_term(Monomial{ring_->degree_of(exps), exps}, c);
}

void GradedPoly::add_term(Monomial key, const mpz_class& c) {
    if (!within_cap(key.degree, cap_)) return;
    if (domain() == Domain::GF2) {
        if (mpz_odd_p(c.get_mpz_t())) accumulate(terms_, std::move(key), 1, Domain::GF2);
        return;
    }
    if (c != 0) accumulate(terms_, std::move(key), c, Domain::Integer);
}

GradedPoly GradedPoly::truncated(Cap cap) const {
    GradedPoly out(ring_, min_cap(cap_, cap));
    for (const auto& [key, c] : terms_)
        if (within_cap(key.degree, out.cap_)) out.terms_.emplace_hint(out.terms_.end(), key, c);
    return out;
}

GradedPoly GradedPoly::rebased(RingPtr ring) const {
    if (!ring->compatible(*ring_) || ring->num_vars() != ring_->num_vars())
        throw Error(ErrorKind::RingMismatch, "rebase into an incompatible ring");
    GradedPoly out(std::move(ring), cap_);
    out.terms_ = terms_;
    return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    if (a.ring_ != b.ring_ && (!a.ring_->compatible(*b.ring_) || a.ring_->num_vars() != b.ring_->num_vars()))
        return false;
    return a.terms_ == b.terms_;
}

GradedPoly add(const GradedPoly& a, const GradedPoly& b) {
    require_same_ring(a, b, "add");
    GradedPoly out = a.truncated(b.cap());
    for (const auto& [key, c] : b.terms()) out.add_term(key, c);
    return out;
}

GradedPoly negate(const GradedPoly& a) {
    if (a.domain() == Domain::GF2) return a;
    GradedPoly out(a.ring_ptr(), a.cap());
    for (const auto& [key, c] : a.terms()) out.add_term(key, -c);
    return out;
}

GradedPoly sub(const GradedPoly& a, const GradedPoly& b) { return add(a, negate(b)); }

GradedPoly scale(const GradedPoly& a, const mpz_class& c) {
    GradedPoly out(a.ring_ptr(), a.cap());
    for (const auto& [key, v] : a.terms()) out.add_term(key, v * c);
    return out;
}

GradedPoly mul(const GradedPoly& a, const GradedPoly& b) {
    require_same_ring(a, b, "mul");
    const Cap cap = min_cap(a.cap(), b.cap());
    GradedPoly out(a.ring_ptr(), cap);
    if (a.is_zero() || b.is_zero()) return out;

    const Domain domain = a.domain();
    const std::size_t nv = a.ring().num_vars();
    GradedPoly::TermMap acc;
    // Terms are sorted by degree, so the inner loop stops at the first
    // partner that overshoots the cap.
    for (const auto& [ka, ca] : a.terms()) {
        if (!within_cap(ka.degree, cap)) break;
        for (const auto& [kb, cb] : b.terms()) {
            const Degree d = ka.degree + kb.degree;
            if (!within_cap(d, cap)) break;
            Monomial key{d, Exponents(nv)};
            for (std::size_t i = 0; i < nv; ++i) key.exps[i] = ka.exps[i] + kb.exps[i];
            if (domain == Domain::GF2)
                accumulate(acc, std::move(key), 1, domain);
            else
                accumulate(acc, std::move(key), ca * cb, domain);
        }
    }
    for (auto& [key, c] : acc) out.add_term(key, c);
    return out;
}

GradedPoly frobenius_power(const GradedPoly& a, unsigned j) {
    if (a.domain() != Domain::GF2)
        throw Error(ErrorKind::DomainMismatch, "frobenius_power requires GF(2) coefficients");
    if (j == 0) return a;
    GradedPoly out(a.ring_ptr(), a.cap());
    for (const auto& [key, c] : a.terms()) {
        if (key.degree == 0) {
            out.add_term(key, 1);
            continue;
        }
        // degree * 2^j must stay within the cap (if any) and within 64 bits.
        if (j >= 63 || key.degree > (std::numeric_limits<Degree>::max() >> j)) {
            if (a.cap()) continue;
            throw Error(ErrorKind::ExponentOverflow, "frobenius_power: degree overflow without a cap");
        }
        const Degree d = key.degree << j;
        if (!within_cap(d, a.cap())) continue;
        Monomial k{d, key.exps};
        for (auto& e : k.exps) {
            if (j >= 32 || e > (std::numeric_limits<std::uint32_t>::max() >> j))
                throw Error(ErrorKind::ExponentOverflow, "frobenius_power: exponent overflow");
            e <<= j;
        }
        out.add_term(std::move(k), 1);
    }
    return out;
}

GradedPoly pow_big(const GradedPoly& a, const mpz_class& n) {
    if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "pow_big: negative exponent");
    const bool nonconstant = !a.is_zero() && a.max_degree() > 0;
    if (!a.cap() && nonconstant && n > kSmallExponentThreshold)
        throw Error(ErrorKind::CapRequired, "exponent " + n.get_str() + " needs a truncation cap");

    GradedPoly result = GradedPoly::one(a.ring_ptr(), a.cap());
    if (n == 0) return result;

    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (a.domain() == Domain::GF2) {
        // a^n = prod over set bits j of a^(2^j); each factor is one pass.
        Degree min_positive = 0;
        for (const auto& [key, c] : a.terms())
            if (key.degree > 0) {
                min_positive = key.degree;
                break;
            }
        const bool has_constant = a.coefficient(Exponents(a.ring().num_vars(), 0)) != 0;
        for (std::size_t j = 0; j < bits; ++j) {
            if (!mpz_tstbit(n.get_mpz_t(), j)) continue;
            // Past this bit every nonconstant term of a^(2^j) exceeds the
            // cap, so the remaining factors all equal the constant term.
            if (a.cap() && min_positive > 0 && (j >= 63 || min_positive > (*a.cap() >> j)))
                return has_constant ? result : GradedPoly(a.ring_ptr(), a.cap());
            result = mul(result, frobenius_power(a, static_cast<unsigned>(j)));
        }
        return result;
    }

    GradedPoly base = a;
    for (std::size_t j = 0; j < bits; ++j) {
        if (mpz_tstbit(n.get_mpz_t(), j)) result = mul(result, base);
        if (j + 1 < bits) base = mul(base, base);
    }
    return result;
}

GradedPoly graded_component(const GradedPoly& a, Degree d) {
    GradedPoly out(a.ring_ptr(), a.cap());
    for (const auto& [key, c] : a.terms())
        if (key.degree == d) out.add_term(key, c);
    return out;
}

GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images, const RingPtr& target, Cap cap) {
    const std::size_t nv = a.ring().num_vars();
    if (images.size() != nv) {
        throw Error(ErrorKind::RingMismatch, "substitute: expected " + std::to_string(nv) + " images, got " +
                                                 std::to_string(images.size()));
    }
    for (const auto& img : images) {
        if (!img.ring().compatible(*target) || img.ring().num_vars() != target->num_vars())
            throw Error(ErrorKind::RingMismatch, "substitute: images must share the target ring");
        cap = min_cap(cap, img.cap());
    }
    if (a.domain() == Domain::GF2 && target->domain() == Domain::Integer)
        throw Error(ErrorKind::DomainMismatch, "substitute: GF(2) coefficients cannot map into Z");

    // powers[i][e] = images[i]^e, built on demand.
    std::vector<std::vector<GradedPoly>> powers(nv);
    auto power = [&](std::size_t i, std::uint32_t e) -> const GradedPoly& {
        auto& row = powers[i];
        if (row.empty()) row.push_back(GradedPoly::one(target, cap));
        while (row.size() <= e) row.push_back(mul(row.back(), images[i].truncated(cap)));
        return row[e];
    };

    GradedPoly out(target, cap);
    for (const auto& [key, c] : a.terms()) {
        GradedPoly term = GradedPoly::constant(target, c, cap);
        for (std::size_t i = 0; i < nv && !term.is_zero(); ++i)
            if (key.exps[i] != 0) term = mul(term, power(i, key.exps[i]));
        for (const auto& [k, v] : term.terms()) out.add_term(k, v);
    }
    return out;
}

GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images, Cap cap) {
    if (images.empty()) throw Error(ErrorKind::RingMismatch, "substitute: no images to infer the target ring from");
    return substitute(a, images, images.front().ring_ptr(), cap);
}

GradedPoly permute_variables(const GradedPoly& a, std::span<const std::size_t> perm) {
    const std::size_t nv = a.ring().num_vars();
    if (perm.size() != nv) throw Error(ErrorKind::RingMismatch, "permutation length does not match ring");
    GradedPoly out(a.ring_ptr(), a.cap());
    for (const auto& [key, c] : a.terms()) {
        Exponents e(nv, 0);
        for (std::size_t i = 0; i < nv; ++i) e.at(perm[i]) = key.exps[i];
        out.add_term(e, c);
    }
    return out;
}

GradedPoly reduce_mod2(const GradedPoly& a, const RingPtr& gf2_ring) {
    if (gf2_ring->domain() != Domain::GF2 || gf2_ring->num_vars() != a.ring().num_vars() ||
        gf2_ring->weights() != a.ring().weights())
        throw Error(ErrorKind::RingMismatch, "reduce_mod2: target must be the GF(2) twin of the source ring");
    GradedPoly out(gf2_ring, a.cap());
    for (const auto& [key, c] : a.terms()) out.add_term(key, c);
    return out;
}

}  // namespace sympswc
