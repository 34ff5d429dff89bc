#include "flatdepth/dual.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flatdepth {

ArrangementFunctional dual_of_point(std::span<const Rat> p) {
    RatVector c(p.begin(), p.end());
    c.emplace_back(1);
    return ArrangementFunctional(std::move(c));
}

ArrangementFunctional functional_of_affine_hyperplane(std::span<const Rat> a, const Rat& b) {
    if (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); })) {
        throw std::invalid_argument("hyperplane normal must be nonzero");
    }
    RatVector c(a.begin(), a.end());
    c.push_back(-b);
    return ArrangementFunctional(std::move(c));
}

ProjectiveFlat vertical_infinity_flat(std::size_t d, std::size_t k) {
    if (d == 0 || k >= d) {
        throw std::invalid_argument("vertical infinity flat needs 0 <= k <= d-1, got d=" + std::to_string(d) +
                                    " k=" + std::to_string(k));
    }
    std::vector<HomogeneousPoint> responses;
    for (std::size_t i = k; i < d; ++i) {
        RatVector e(d + 1, Rat(0));
        e[i] = Rat(1);
        responses.emplace_back(std::move(e));
    }
    return orthogonal_complement(ProjectiveFlat(std::move(responses)));
}

ProjectiveFlat dual_flat_of_line(const HomogeneousPoint& a, const HomogeneousPoint& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("line points have different dimensions");
    }
    if (same_projective_point(a, b)) {
        throw std::invalid_argument("line needs two distinct points");
    }
    return orthogonal_complement(ProjectiveFlat({a, b}));
}

} // namespace flatdepth
