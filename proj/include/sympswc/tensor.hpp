#pragma once

// Characteristic classes of external tensor products through the universal
// polynomial P_{m,n}, and the mod-2 Chern class of a representation.

#include <cstddef>
#include <vector>

#include "sympswc/characters.hpp"
#include "sympswc/poly.hpp"
#include "sympswc/swc.hpp"

namespace sympswc {

// Classes w_1..w_rank (or c_1..c_rank) of one factor, pulled back into a
// shared target ring.
struct ClassVector {
    std::size_t rank = 0;
    std::vector<GradedPoly> components;

    // Component i (1-based) must be zero or homogeneous of degree i * unit.
    void check(unsigned unit = 1) const;

    // Split class: components are the elementary symmetric polynomials of
    // the given roots.
    static ClassVector from_roots(const std::vector<GradedPoly>& roots);

    // Slices a total class 1 + c_1 + c_2 + ... by degree (slot i = degree i * unit).
    static ClassVector from_total(const GradedPoly& total, std::size_t rank, unsigned unit = 1);
};

// Largest m * n accepted by tensor_class.
inline constexpr std::size_t kTensorRankLimit = 16;

GradedPoly tensor_class(const ClassVector& a, const ClassVector& b, Domain domain, Cap cap = std::nullopt,
                        std::size_t rank_limit = kTensorRankLimit);

// Left fold of tensor_class over several factors. Each intermediate class is
// re-sliced by degree (in steps of `unit`) into the next rank-(m*n) vector.
GradedPoly tensor_fold(const std::vector<ClassVector>& factors, Domain domain, Cap cap = std::nullopt,
                       unsigned unit = 1, std::size_t rank_limit = kTensorRankLimit);

// Mod-2 total Chern class: w(S(pi)).
SWClass mod2_chern(const CharacterData& chi, Degree cap);

}  // namespace sympswc
