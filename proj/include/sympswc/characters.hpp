#pragma once

// Character-level model of Sp(2n, q), q odd: values at the involutions
// g_0..g_n (g_i has eigenvalue -1 with multiplicity 2i), the transform to
// the multiplicities m_k of the orbit representations sigma_k of the diagonal
// {+-1} subgroup, and a small catalog of representations.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympswc/error.hpp"

namespace sympswc {

struct CharacterData {
    std::size_t n = 0;
    std::vector<mpz_class> values;  // values[i] = chi(g_i); values[0] is the degree

    const mpz_class& degree() const { return values.at(0); }
    bool operator==(const CharacterData&) const = default;
};

struct MultiplicityVector {
    std::size_t n = 0;
    std::vector<mpz_class> m;  // m[k] = multiplicity of sigma_k

    bool operator==(const MultiplicityVector&) const = default;
};

// Throws MalformedCharacter unless there are n+1 values, the degree is
// nonnegative and |chi(g_i)| <= deg for all i.
void check_character(const CharacterData& chi);

using SigmaTable = std::vector<std::vector<mpz_class>>;

// table[k][i] = coefficient of x^i in (1-x)^k (1+x)^(n-k) = chi_{sigma_i}(g_k).
std::shared_ptr<const SigmaTable> sigma_table(std::size_t n);

mpz_class sigma_char(std::size_t n, std::size_t i, std::size_t k);

// m_k = 2^-n sum_i chi_{sigma_i}(g_k) chi(g_i).
MultiplicityVector multiplicities(const CharacterData& chi);

// chi(g_i) = sum_k m_k chi_{sigma_k}(g_i).
CharacterData character_from_multiplicities(const MultiplicityVector& mv);

// Multiplicities of an orthogonal character: every m_k with k >= 1 must be a
// multiple of 4. Throws DivisibilityViolation naming the first bad k.
MultiplicityVector validate_orthogonal(const CharacterData& chi);

bool is_gow_symmetric(const CharacterData& chi);

// Half-range sums valid for palindromic characters (chi(g_i) = chi(g_{n-i})):
// odd k vanish, even k use only i <= n/2. Throws GowSymmetryViolation.
MultiplicityVector gow_multiplicities(const CharacterData& chi);

// Half-range sums valid for skew-palindromic characters (chi(g_i) = -chi(g_{n-i})),
// as for irreducible symplectic representations: even k vanish.
MultiplicityVector skew_gow_multiplicities(const CharacterData& chi);

// Character of pi + dual(pi) at the involutions: values double.
CharacterData symmetrize(const CharacterData& chi);

// Throws InvalidFieldOrder unless q = p^e with p an odd prime.
void check_odd_prime_power(std::uint64_t q);

mpz_class group_order_sp(std::size_t n, std::uint64_t q);

CharacterData regular_character(std::size_t n, std::uint64_t q);

// chi_W(g_i) = (-1)^(i (q-1)/2) q^(n-i).
CharacterData weil_character(std::size_t n, std::uint64_t q);

// The second Weil representation agrees with the first at every g_i.
CharacterData weil_prime_character(std::size_t n, std::uint64_t q);

// m_k(S(W)) for k >= 1 from the closed forms
//   q = 1 mod 4: (q-1)^k (q+1)^(n-k) / 2^(n-1)
//   q = 3 mod 4: (q-1)^(n-k) (q+1)^k / 2^(n-1)
// with m_0 taken from the general transform.
MultiplicityVector weil_multiplicities_closed_form(std::size_t n, std::uint64_t q);

// Sp(4, q): parabolically induced pi_1 of degree (q+1)(q^2+1) and pi_2 induced
// from SL(2,q) x SL(2,q) of degree q^2(q-1)(q^2+1); both odd at -1, zero at g_1.
CharacterData sp4_pi1_character(std::uint64_t q);
CharacterData sp4_pi2_character(std::uint64_t q);

// Catalog lookup: "regular", "weil", "weil-prime", "sp4-pi1", "sp4-pi2".
CharacterData catalog_character(const std::string& name, std::size_t n, std::uint64_t q);
const std::vector<std::string>& catalog_names();

}  // namespace sympswc
