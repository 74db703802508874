#pragma once

// Sparse multivariate polynomials over GF(2) or Z with weighted (cohomological)
// grading and optional degree truncation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympswc/error.hpp"

namespace sympswc {

enum class Domain { GF2, Integer };

const char* to_string(Domain d) noexcept;

using Degree = std::uint64_t;
using Cap = std::optional<Degree>;
using Exponents = std::vector<std::uint32_t>;

class Ring {
   public:
    Ring(std::vector<std::string> names, std::vector<unsigned> weights, Domain domain);

    std::size_t num_vars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<unsigned>& weights() const noexcept { return weights_; }
    Domain domain() const noexcept { return domain_; }

    Degree degree_of(std::span<const std::uint32_t> exps) const noexcept;

    // Structural compatibility: same variable count, weights and domain.
    // Display names do not take part.
    bool compatible(const Ring& other) const noexcept;

   private:
    std::vector<std::string> names_;
    std::vector<unsigned> weights_;
    Domain domain_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<unsigned> weights, Domain domain);

// Ring with variables prefix1..prefixN, all of the same weight.
RingPtr make_uniform_ring(const std::string& prefix, std::size_t n, unsigned weight, Domain domain);

// Canonical key: weighted degree first, then lexicographic exponent order.
// The largest key of a polynomial is its graded-lex leading monomial.
struct Monomial {
    Degree degree = 0;
    Exponents exps;

    auto operator<=>(const Monomial&) const = default;
};

class GradedPoly {
   public:
    using TermMap = std::map<Monomial, mpz_class>;

    explicit GradedPoly(RingPtr ring, Cap cap = std::nullopt);

    static GradedPoly constant(RingPtr ring, const mpz_class& c, Cap cap = std::nullopt);
    static GradedPoly one(RingPtr ring, Cap cap = std::nullopt) { return constant(std::move(ring), 1, cap); }
    static GradedPoly variable(RingPtr ring, std::size_t i, Cap cap = std::nullopt);
    static GradedPoly monomial(RingPtr ring, Exponents exps, const mpz_class& c = 1, Cap cap = std::nullopt);

    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    Domain domain() const noexcept { return ring_->domain(); }
    Cap cap() const noexcept { return cap_; }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    mpz_class coefficient(const Exponents& exps) const;

    // Highest weighted degree present. Undefined on the zero polynomial.
    Degree max_degree() const;

    // Adds c * x^exps in place, honouring domain and cap.
    void add_term(const Exponents& exps, const mpz_class& c);
    void add_term(Monomial key, const mpz_class& c);

    // Copy with cap lowered to min(current, cap); higher terms dropped.
    GradedPoly truncated(Cap cap) const;

    // Same terms viewed in another compatible ring (e.g. renamed variables).
    GradedPoly rebased(RingPtr ring) const;

    // Equality of term sets in compatible rings; caps are not compared.
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

   private:
    RingPtr ring_;
    Cap cap_;
    TermMap terms_;
};

Cap min_cap(Cap a, Cap b) noexcept;
bool within_cap(Degree d, Cap cap) noexcept;

GradedPoly add(const GradedPoly& a, const GradedPoly& b);
GradedPoly sub(const GradedPoly& a, const GradedPoly& b);
GradedPoly negate(const GradedPoly& a);
GradedPoly scale(const GradedPoly& a, const mpz_class& c);
GradedPoly mul(const GradedPoly& a, const GradedPoly& b);

inline GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) { return add(a, b); }
inline GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return sub(a, b); }
inline GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return mul(a, b); }

// a^(2^j) over GF(2): every exponent vector is multiplied by 2^j.
GradedPoly frobenius_power(const GradedPoly& a, unsigned j);

// Exponents above this need a cap on anything nonconstant.
inline constexpr unsigned long kSmallExponentThreshold = 64;

GradedPoly pow_big(const GradedPoly& a, const mpz_class& n);

GradedPoly graded_component(const GradedPoly& a, Degree d);

// Ring homomorphism x_i -> images[i]. The result lives in `target`, truncated
// at min(cap, caps of the images).
GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images, const RingPtr& target,
                      Cap cap = std::nullopt);
GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images, Cap cap = std::nullopt);

// Reindex variables: variable i of `a` becomes variable perm[i].
GradedPoly permute_variables(const GradedPoly& a, std::span<const std::size_t> perm);

// Coefficient reduction Z -> GF(2) into the given GF(2) ring.
GradedPoly reduce_mod2(const GradedPoly& a, const RingPtr& gf2_ring);

}  // namespace sympswc
