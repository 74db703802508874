#pragma once

// Total Stiefel-Whitney classes of orthogonal representations of Sp(2n, q)
// from their character values at the involutions g_0..g_n.
//
// Classes live in F_2[e_1..e_n] with deg e_i = 4 (e_i restricts to v_i^4 on
// the diagonal {+-1} subgroup); a total class is the truncated product
//
//     w(pi) = prod_{k=1..n} D^[k](e_1..e_n)^(m_k(pi)/4).

#include <cstddef>

#include "sympswc/characters.hpp"
#include "sympswc/poly.hpp"

namespace sympswc {

// e1..en, weight 4, GF(2).
RingPtr e_ring(std::size_t n);

// D^[k] with E_i replaced by the i-th elementary symmetric polynomial in e.
GradedPoly dickson_factor_e(std::size_t n, std::size_t k, Cap cap);

// Full Dickson product D(e) = prod_k D^[k](e).
GradedPoly dickson_total_e(std::size_t n, Cap cap);

class SWClass {
   public:
    // Checks w_0 = 1, w_d = 0 for 4 not dividing d and symmetry in e_1..e_n.
    SWClass(std::size_t n, GradedPoly total, MultiplicityVector exponents);

    std::size_t n() const noexcept { return n_; }
    const GradedPoly& total() const noexcept { return total_; }
    Cap cap() const noexcept { return total_.cap(); }
    // Multiplicities m_k of the orthogonal representation; the factor D^[k]
    // appears to the power m_k / 4.
    const MultiplicityVector& exponents() const noexcept { return exponents_; }

   private:
    std::size_t n_;
    GradedPoly total_;
    MultiplicityVector exponents_;
};

// prod_k D^[k](e)^(powers[k]) for k = 1..n; powers[0] is ignored.
GradedPoly dickson_product(std::size_t n, const std::vector<mpz_class>& powers, Degree cap);

SWClass total_swc(const CharacterData& chi, Degree cap);

// Palindromic (Gow-symmetric) input: only even k contribute and the
// multiplicities use the half-range sums.
SWClass total_swc_gow_orthogonal(const CharacterData& chi, Degree cap);

// w(S(phi)) = prod_k D^[k](e)^(m_k(phi)/2); m_k(phi) must be even for k >= 1.
SWClass total_swc_symmetrized_symplectic(const CharacterData& chi_phi, Degree cap);

GradedPoly w_component(const SWClass& cls, Degree k);

// w_4 = (deg - chi(g_1))/8 * E_1.
GradedPoly universal_w4(const CharacterData& chi);

// w_8 = r_1 E_2 + (C(r_1,2) + C(r_2,2)) E_1^2 with
// r_1 = (deg - chi(g_2))/16, r_2 = (deg - 2 chi(g_1) + chi(g_2))/16.
GradedPoly universal_w8(const CharacterData& chi);

// Sp(4,q): ((1+e_1)(1+e_2))^r (1+e_1+e_2)^s with
// r = (chi(1) - chi(-1))/16, s = (chi(1) - 2 chi(g_1) + chi(-1))/16.
SWClass sp4_closed_form(const CharacterData& chi, Degree cap);

// Compares total_swc pulled back along e_i -> v_i^4 with the product
// prod_k orbit_product(n, k)^(m_k) computed directly in F_2[v_1..v_n].
bool restriction_oracle(const CharacterData& chi, Degree cap);

}  // namespace sympswc
