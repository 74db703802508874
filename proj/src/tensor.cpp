#include "sympswc/tensor.hpp"

#include "sympswc/symfunc.hpp"

namespace sympswc {

void ClassVector::check(unsigned unit) const {
    if (components.size() != rank)
        throw Error(ErrorKind::RankMismatch, "class vector of rank " + std::to_string(rank) + " has " +
                                                 std::to_string(components.size()) + " components");
    for (std::size_t i = 0; i < components.size(); ++i) {
        const GradedPoly& c = components[i];
        if (i > 0 && (!c.ring().compatible(components[0].ring()) ||
                      c.ring().num_vars() != components[0].ring().num_vars()))
            throw Error(ErrorKind::RingMismatch, "class components live in different rings");
        const Degree want = Degree(i + 1) * unit;
        for (const auto& [key, v] : c.terms())
            if (key.degree != want)
                throw Error(ErrorKind::RankMismatch,
                            "component " + std::to_string(i + 1) + " is not homogeneous of degree " +
                                std::to_string(want),
                            i + 1);
    }
}

ClassVector ClassVector::from_roots(const std::vector<GradedPoly>& roots) {
    ClassVector out{roots.size(), {}};
    if (roots.empty()) return out;
    const RingPtr& ring = roots.front().ring_ptr();
    // Coefficients of prod (1 + r_i t), built one root at a time.
    std::vector<GradedPoly> elem{GradedPoly::one(ring)};
    for (const auto& r : roots) {
        elem.push_back(GradedPoly(ring));
        for (std::size_t i = elem.size() - 1; i > 0; --i) elem[i] = add(elem[i], mul(elem[i - 1], r));
    }
    out.components.assign(elem.begin() + 1, elem.end());
    return out;
}

ClassVector ClassVector::from_total(const GradedPoly& total, std::size_t rank, unsigned unit) {
    ClassVector out{rank, {}};
    for (std::size_t i = 1; i <= rank; ++i) out.components.push_back(graded_component(total, Degree(i) * unit));
    for (const auto& [key, c] : total.terms())
        if (key.degree > Degree(rank) * unit)
            throw Error(ErrorKind::RankMismatch, "total class has a nonzero part above its rank", rank);
    return out;
}

GradedPoly tensor_class(const ClassVector& a, const ClassVector& b, Domain domain, Cap cap,
                        std::size_t rank_limit) {
    if (a.components.size() != a.rank || b.components.size() != b.rank)
        throw Error(ErrorKind::RankMismatch, "class vector rank does not match its component count");
    if (a.rank * b.rank > rank_limit)
        throw Error(ErrorKind::RankLimit, "tensor product of ranks " + std::to_string(a.rank) + " and " +
                                              std::to_string(b.rank) + " exceeds the expansion limit " +
                                              std::to_string(rank_limit));
    std::vector<GradedPoly> images = a.components;
    images.insert(images.end(), b.components.begin(), b.components.end());
    if (images.empty()) throw Error(ErrorKind::RankMismatch, "tensor_class: both factors have rank 0");

    const RingPtr target = images.front().ring_ptr();
    if (target->domain() != domain)
        throw Error(ErrorKind::DomainMismatch, std::string("tensor_class: classes are over ") +
                                                   to_string(target->domain()) + ", requested " + to_string(domain));
    const PmnPolynomial p = compute_pmn(a.rank, b.rank, domain);
    return substitute(p.body, images, target, cap);
}

GradedPoly tensor_fold(const std::vector<ClassVector>& factors, Domain domain, Cap cap, unsigned unit,
                       std::size_t rank_limit) {
    if (factors.empty()) throw Error(ErrorKind::RankMismatch, "tensor_fold: no factors");
    if (factors.size() == 1) {
        const ClassVector& only = factors.front();
        if (only.components.empty()) throw Error(ErrorKind::RankMismatch, "tensor_fold: rank-0 single factor");
        GradedPoly total = GradedPoly::one(only.components.front().ring_ptr(), cap);
        for (const auto& c : only.components) total = add(total, c);
        return total;
    }
    ClassVector acc = factors.front();
    GradedPoly total = tensor_class(acc, factors[1], domain, cap, rank_limit);
    for (std::size_t i = 2; i < factors.size(); ++i) {
        acc = ClassVector::from_total(total, acc.rank * factors[i - 1].rank, unit);
        total = tensor_class(acc, factors[i], domain, cap, rank_limit);
    }
    return total;
}

SWClass mod2_chern(const CharacterData& chi, Degree cap) { return total_swc(symmetrize(chi), cap); }

}  // namespace sympswc
