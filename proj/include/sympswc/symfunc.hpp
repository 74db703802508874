#pragma once

// Symmetric-function machinery: elementary symmetric polynomials, orbit
// products over F_2-vectors of fixed Hamming weight, reduction of symmetric
// polynomials to the elementary basis, Dickson factors and P_{m,n}.

#include <cstddef>

#include "sympswc/poly.hpp"

namespace sympswc {

// e_k in variables [first, first + count) of `ring`. Zero when k > count, 1 when k = 0.
GradedPoly elementary_symmetric(const RingPtr& ring, std::size_t k, std::size_t first, std::size_t count,
                                Cap cap = std::nullopt);
GradedPoly elementary_symmetric(const RingPtr& ring, std::size_t k, Cap cap = std::nullopt);

// e_k in a fresh ring x1..x_num_vars of weight 1.
GradedPoly elementary_symmetric(std::size_t num_vars, std::size_t k, Domain domain = Domain::GF2);

// v-ring: v1..vn, weight 1, GF(2).
RingPtr v_ring(std::size_t n);

// prod over v in F_2^n with |v| = k of (1 + sum_{i in supp v} v_i).
GradedPoly orbit_product(std::size_t n, std::size_t k, Cap cap = std::nullopt);

// True when `p` is invariant under every permutation of variables
// [first, first + count).
bool is_symmetric(const GradedPoly& p, std::size_t first, std::size_t count);

// Rewrites `p`, symmetric in variables [first, first + count), as a
// polynomial in E1..E_count (named prefix1..) with the remaining variables
// kept as coefficients. E_i gets weight i * w where w is the common weight
// of the alphabet. The E-variables replace the alphabet in place.
GradedPoly reduce_alphabet(const GradedPoly& p, std::size_t first, std::size_t count,
                           const std::string& prefix = "E");

// Unique polynomial in E1..En whose expansion is `p`.
GradedPoly symmetric_to_elementary(const GradedPoly& p);

// Expands a polynomial in E-variables back through E_i -> e_i(roots ring).
GradedPoly expand_elementary(const GradedPoly& in_e_basis, const RingPtr& roots_ring, Cap cap = std::nullopt);

// D^[k] in the E-basis (E_i of weight i), memoized per (n, k).
GradedPoly dickson_factor(std::size_t n, std::size_t k);

// prod_{k=1..n} D^[k]; its homogeneous parts are the Dickson invariants.
GradedPoly dickson_total(std::size_t n);

struct PmnPolynomial {
    std::size_t m = 0;
    std::size_t n = 0;
    Domain domain = Domain::Integer;
    // Variables Ex1..Exm, Ey1..Eyn; Ex_i and Ey_j carry weights i and j.
    GradedPoly body;
};

// q_{m,n} = prod_{i,j} (1 + x_i + y_j) expanded in x1..xm, y1..yn (weight 1).
GradedPoly q_mn(std::size_t m, std::size_t n, Domain domain);

// P_{m,n} with q_{m,n}(x, y) = P_{m,n}(e(x), e(y)). Memoized.
PmnPolynomial compute_pmn(std::size_t m, std::size_t n, Domain domain);

}  // namespace sympswc
