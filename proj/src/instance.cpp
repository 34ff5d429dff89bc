#include "flatdepth/instance.hpp"

#include <utility>

namespace flatdepth {

namespace {

void check_factor(const ProjectiveFlat& f) {
    if (f.hdim() != 1 && f.hdim() != 2) {
        throw UnsupportedFlat("unsupported flat dimension " + std::to_string(f.hdim() - 1) +
                              ": only points and lines are supported");
    }
}

void check_point(const ProjectiveFlat& f, const CircleVector& u) {
    if (f.hdim() == 1 && (u.beta() != 0)) {
        throw std::invalid_argument("point of a 0-dimensional factor must be (+-1, 0)");
    }
}

} // namespace

FactorRestriction restrict_to(const ArrangementFunctional& h, const ProjectiveFlat& f) {
    FactorRestriction r;
    r.a = evaluate(h, f.basis()[0]);
    r.b = f.hdim() > 1 ? evaluate(h, f.basis()[1]) : Rat(0);
    r.identically_zero = r.a.is_zero() && r.b.is_zero();
    if (!r.identically_zero) {
        const Rat pair[2] = {r.a, r.b};
        auto ints = linalg::primitive_integers(pair);
        r.int_a = std::move(ints[0]);
        r.int_b = std::move(ints[1]);
    }
    return r;
}

CoveringInstance::CoveringInstance(ProjectiveFlat f1, ProjectiveFlat f2, std::vector<RestrictedFunctional> active,
                                   std::vector<RestrictedFunctional> incident)
    : factors_{std::move(f1), std::move(f2)}, active_(std::move(active)), incident_(std::move(incident)) {}

HomogeneousPoint CoveringInstance::embed(std::size_t i, const CircleVector& u) const {
    const ProjectiveFlat& f = factors_[i];
    check_point(f, u);
    if (f.hdim() == 1) {
        const Rat c[1] = {Rat(u.alpha())};
        return HomogeneousPoint(f.combine(c));
    }
    const Rat c[2] = {Rat(u.alpha()), Rat(u.beta())};
    return HomogeneousPoint(f.combine(c));
}

std::variant<CoveringInstance, IntersectingFlats> build_instance(
    const std::vector<ArrangementFunctional>& functionals, const ProjectiveFlat& f1, const ProjectiveFlat& f2) {
    check_factor(f1);
    check_factor(f2);
    if (f1.ambient_size() != f2.ambient_size()) {
        throw std::invalid_argument("flats live in different ambient dimensions");
    }
    if (auto meet = common_vector(f1, f2)) {
        return IntersectingFlats{*meet};
    }
    std::vector<RestrictedFunctional> active;
    std::vector<RestrictedFunctional> incident;
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        const auto& h = functionals[i];
        if (h.size() != f1.ambient_size()) {
            throw std::invalid_argument("hyperplane " + std::to_string(i) + " has wrong dimension");
        }
        RestrictedFunctional r{i, h, {restrict_to(h, f1), restrict_to(h, f2)}};
        if (r.factor[0].identically_zero || r.factor[1].identically_zero) {
            incident.push_back(std::move(r));
        } else {
            active.push_back(std::move(r));
        }
    }
    return CoveringInstance(f1, f2, std::move(active), std::move(incident));
}

std::size_t strict_crossing_count(const CoveringInstance& inst, const CircleVector& u1, const CircleVector& u2) {
    check_point(inst.factor(0), u1);
    check_point(inst.factor(1), u2);
    std::size_t count = 0;
    for (const auto& h : inst.active()) {
        if (h.sign_at(0, u1) * h.sign_at(1, u2) < 0) {
            ++count;
        }
    }
    return count;
}

DepthResult intersecting_result(const IntersectingFlats& meet) {
    DepthResult r{0, 0, 0, 0, "intersecting", Witness{std::nullopt, std::nullopt, meet.common, meet.common, true}};
    return r;
}

DepthResult make_result(const CoveringInstance& inst, std::size_t strict_min, const CircleVector& c1,
                        const CircleVector& c2, std::string solver) {
    DepthResult r{strict_min + inst.incident_count(),
                  strict_min,
                  inst.incident_count(),
                  inst.active().size(),
                  std::move(solver),
                  Witness{c1, c2, inst.embed(0, c1), inst.embed(1, c2), false}};
    return r;
}

} // namespace flatdepth
