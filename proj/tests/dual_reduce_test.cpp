#include <gtest/gtest.h>

#include "flatdepth/dual.hpp"
#include "flatdepth/instance.hpp"
#include "test_util.hpp"

using namespace flatdepth;
using flatdepth::testing::Rng;

namespace {

RatVector ints(std::initializer_list<long> v) { return RatVector(v.begin(), v.end()); }

ProjectiveFlat flat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<HomogeneousPoint> basis;
    for (auto r : rows) {
        basis.emplace_back(ints(r));
    }
    return ProjectiveFlat(std::move(basis));
}

CoveringInstance as_instance(const std::variant<CoveringInstance, IntersectingFlats>& v) {
    return std::get<CoveringInstance>(v);
}

} // namespace

TEST(DualOfPoint, Examples) {
    EXPECT_EQ(dual_of_point(ints({0, 0, 0})).coeffs(), ints({0, 0, 0, 1}));
    EXPECT_EQ(dual_of_point(ints({1, 2})).coeffs(), ints({1, 2, 1}));
}

TEST(DualOfPoint, PolarityIsSymmetric) {
    Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        const RatVector p = rng.vec(3, 20);
        const RatVector q = rng.vec(3, 20);
        EXPECT_EQ(evaluate(dual_of_point(p), lift_affine(q)), evaluate(dual_of_point(q), lift_affine(p)));
    }
}

TEST(AffineHyperplane, Examples) {
    const Rat two(2);
    EXPECT_EQ(functional_of_affine_hyperplane(ints({0, 1, 0}), two).coeffs(), ints({0, 1, 0, -2}));
    EXPECT_EQ(functional_of_affine_hyperplane(ints({1, 1}), Rat(0)).coeffs(), ints({1, 1, 0}));
    EXPECT_THROW(functional_of_affine_hyperplane(ints({0, 0}), Rat(1)), std::invalid_argument);
}

TEST(AffineHyperplane, SolutionsAreZeros) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const RatVector a = rng.nonzero_vec(3, 9);
        std::size_t k = 0;
        while (a[k].is_zero()) {
            ++k;
        }
        const Rat b = rng.rat(9);
        // Pick free coordinates at random and solve for coordinate k.
        RatVector x = rng.vec(3, 9);
        Rat rest(0);
        for (std::size_t j = 0; j < 3; ++j) {
            if (j != k) {
                rest += a[j] * x[j];
            }
        }
        x[k] = (b - rest) / a[k];
        EXPECT_EQ(sign_of(functional_of_affine_hyperplane(a, b), lift_affine(x)), 0);
    }
}

TEST(VerticalInfinityFlat, Examples) {
    const auto f31 = vertical_infinity_flat(3, 1);
    ASSERT_EQ(f31.hdim(), 2u);
    EXPECT_EQ(f31.basis()[0].coords(), ints({1, 0, 0, 0}));
    EXPECT_EQ(f31.basis()[1].coords(), ints({0, 0, 0, 1}));
    const auto f21 = vertical_infinity_flat(2, 1);
    EXPECT_EQ(f21.basis()[0].coords(), ints({1, 0, 0}));
    EXPECT_EQ(f21.basis()[1].coords(), ints({0, 0, 1}));
    const auto f20 = vertical_infinity_flat(2, 0);
    ASSERT_EQ(f20.hdim(), 1u);
    EXPECT_EQ(f20.basis()[0].coords(), ints({0, 0, 1}));
    EXPECT_THROW(vertical_infinity_flat(2, 2), std::invalid_argument);
}

TEST(DualFlatOfLine, XAxisInR3) {
    const auto f = dual_flat_of_line(HomogeneousPoint(ints({0, 0, 0, 1})), HomogeneousPoint(ints({1, 0, 0, 0})));
    ASSERT_EQ(f.hdim(), 2u);
    EXPECT_EQ(f.basis()[0].coords(), ints({0, 1, 0, 0}));
    EXPECT_EQ(f.basis()[1].coords(), ints({0, 0, 1, 0}));
}

TEST(DualFlatOfLine, DiagonalInR2) {
    const auto f = dual_flat_of_line(lift_affine(ints({0, 0})), lift_affine(ints({1, 1})));
    ASSERT_EQ(f.hdim(), 1u);
    EXPECT_TRUE(dot(f.basis()[0].coords(), ints({0, 0, 1})).is_zero());
    EXPECT_TRUE(dot(f.basis()[0].coords(), ints({1, 1, 1})).is_zero());
    EXPECT_TRUE(same_projective_point(f.basis()[0], HomogeneousPoint(ints({1, -1, 0}))));
    EXPECT_THROW(dual_flat_of_line(lift_affine(ints({1, 1})), HomogeneousPoint(ints({2, 2, 2}))),
                 std::invalid_argument);
}

TEST(DualFlatOfLine, IncidencePreserved) {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const RatVector p = rng.vec(3, 9);
        RatVector q = rng.vec(3, 9);
        if (p == q) {
            continue;
        }
        const auto f = dual_flat_of_line(lift_affine(p), lift_affine(q));
        for (int k = 0; k < 5; ++k) {
            // A point p + t (q - p) on the line.
            const Rat t = rng.fraction(5);
            RatVector r(3);
            for (std::size_t j = 0; j < 3; ++j) {
                r[j] = p[j] + t * (q[j] - p[j]);
            }
            const RatVector c = {rng.fraction(5), rng.fraction(5)};
            if (c[0].is_zero() && c[1].is_zero()) {
                continue;
            }
            EXPECT_TRUE(dot(dual_of_point(r).coeffs(), f.combine(c)).is_zero());
        }
    }
}

TEST(BuildInstance, RestrictionExample) {
    const auto x_axis = flat({{0, 0, 0, 1}, {1, 0, 0, 0}});
    const auto line = flat({{0, 1, 0, 1}, {0, 0, 1, 0}});
    const auto built = build_instance({ArrangementFunctional(ints({0, 1, 0, -2}))}, x_axis, line);
    const auto inst = as_instance(built);
    ASSERT_EQ(inst.active().size(), 1u);
    const auto& r = inst.active()[0].factor[1];
    EXPECT_EQ(r.a, Rat(-1));
    EXPECT_EQ(r.b, Rat(0));
    EXPECT_EQ(inst.incident_count(), 0u);
}

TEST(BuildInstance, IntersectingFlats) {
    const auto x_axis = flat({{0, 0, 0, 1}, {1, 0, 0, 0}});
    const auto y_axis = flat({{0, 0, 0, 1}, {0, 1, 0, 0}});
    const auto built = build_instance({}, x_axis, y_axis);
    ASSERT_TRUE(std::holds_alternative<IntersectingFlats>(built));
    const auto& meet = std::get<IntersectingFlats>(built).common;
    EXPECT_TRUE(x_axis.contains(meet));
    EXPECT_TRUE(y_axis.contains(meet));
}

TEST(BuildInstance, IncidentFunctional) {
    const auto x_axis = flat({{0, 0, 0, 1}, {1, 0, 0, 0}});
    const auto line = flat({{0, 1, 0, 1}, {0, 0, 1, 0}});
    // y = 0 contains the x-axis.
    const std::vector<ArrangementFunctional> hs = {ArrangementFunctional(ints({0, 1, 0, 0})),
                                                   ArrangementFunctional(ints({0, 1, 0, -2}))};
    const auto inst = as_instance(build_instance(hs, x_axis, line));
    EXPECT_EQ(inst.incident_count(), 1u);
    EXPECT_EQ(inst.active().size(), 1u);
    EXPECT_EQ(inst.active()[0].index, 1u);
    EXPECT_EQ(inst.active().size() + inst.incident_count(), inst.n_total());
}

TEST(BuildInstance, UnsupportedFlatDimension) {
    const auto plane = flat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    const auto line = flat({{0, 1, 0, 1}, {0, 0, 1, 0}});
    EXPECT_THROW(build_instance({}, plane, line), UnsupportedFlat);
}

TEST(BuildInstance, IncidenceClassification) {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto f1 = flatdepth::testing::random_line(rng, 3, 3);
        const auto f2 = flatdepth::testing::random_line(rng, 3, 3);
        auto hs = flatdepth::testing::random_functionals(rng, 10, 3, 2);
        const auto built = build_instance(hs, f1, f2);
        if (!std::holds_alternative<CoveringInstance>(built)) {
            continue;
        }
        const auto& inst = std::get<CoveringInstance>(built);
        for (const auto& h : inst.incident()) {
            const bool zero1 = sign_of(h.original, f1.basis()[0]) == 0 && sign_of(h.original, f1.basis()[1]) == 0;
            const bool zero2 = sign_of(h.original, f2.basis()[0]) == 0 && sign_of(h.original, f2.basis()[1]) == 0;
            EXPECT_TRUE(zero1 || zero2);
        }
        for (const auto& h : inst.active()) {
            EXPECT_FALSE(h.factor[0].identically_zero);
            EXPECT_FALSE(h.factor[1].identically_zero);
        }
    }
}

TEST(StrictCrossingCount, SameSide) {
    const auto x_axis = flat({{0, 0, 0, 1}, {1, 0, 0, 0}});
    const auto line = flat({{0, 1, 0, 1}, {0, 0, 1, 0}});
    // x3 = -5 is positive where x3 > -5... (0,0,1,5) evaluates to 5 on e4.
    const auto inst = as_instance(build_instance({ArrangementFunctional(ints({0, 0, 1, 5}))}, x_axis, line));
    // u1 = e4 (value 5), u2 = (0,1,0,1) (value 5): both strictly positive.
    EXPECT_EQ(strict_crossing_count(inst, CircleVector(1, 0), CircleVector(1, 0)), 0u);
    EXPECT_EQ(strict_crossing_count(inst, CircleVector(1, 0), CircleVector(-1, 0)), 1u);
}

namespace {

struct RandomInstanceCase {
    std::size_t h1;
    std::size_t h2;
};

} // namespace

TEST(StrictCrossingCount, AntipodalAndComplementIdentities) {
    Rng rng(14);
    for (const auto& shape : {RandomInstanceCase{2, 2}, RandomInstanceCase{1, 2}, RandomInstanceCase{2, 1},
                              RandomInstanceCase{1, 1}}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t d = 3;
            auto make = [&](std::size_t h) {
                return h == 2 ? flatdepth::testing::random_line(rng, d, 4)
                              : flatdepth::testing::random_point_flat(rng, d, 4);
            };
            const auto f1 = make(shape.h1);
            const auto f2 = make(shape.h2);
            const auto built = build_instance(flatdepth::testing::random_functionals(rng, 12, d, 3), f1, f2);
            if (!std::holds_alternative<CoveringInstance>(built)) {
                continue;
            }
            const auto& inst = std::get<CoveringInstance>(built);
            const CircleVector u1 = flatdepth::testing::random_factor_point(rng, f1, 4);
            const CircleVector u2 = flatdepth::testing::random_factor_point(rng, f2, 4);
            const auto c = strict_crossing_count(inst, u1, u2);
            EXPECT_EQ(c, strict_crossing_count(inst, u1.antipode(), u2.antipode()));
            std::size_t nonvanishing = 0;
            for (const auto& h : inst.active()) {
                nonvanishing += (h.sign_at(0, u1) != 0 && h.sign_at(1, u2) != 0) ? 1 : 0;
            }
            EXPECT_EQ(c + strict_crossing_count(inst, u1, u2.antipode()), nonvanishing);
        }
    }
}

TEST(StrictCrossingCount, RejectsBadPointForPointFactor) {
    const auto p = flat({{0, 0, 0, 1}});
    const auto line = flat({{0, 1, 0, 1}, {0, 0, 1, 0}});
    const auto inst = as_instance(build_instance({}, p, line));
    EXPECT_THROW(strict_crossing_count(inst, CircleVector(1, 1), CircleVector(1, 0)), std::invalid_argument);
}
