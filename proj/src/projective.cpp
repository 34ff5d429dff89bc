#include "flatdepth/projective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flatdepth {

namespace {

bool all_zero(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

RatVector to_rats(const std::vector<BigInt>& v) {
    return RatVector(v.begin(), v.end());
}

// In-place reduced row echelon form; returns pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        const Rat inv = Rat(1) / m[row][col];
        for (auto& x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) {
                continue;
            }
            const Rat factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

namespace linalg {

std::size_t rank(std::vector<RatVector> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t ncols = rows.front().size();
    return rref(rows, ncols).size();
}

std::vector<RatVector> nullspace(std::vector<RatVector> rows, std::size_t ncols) {
    const auto pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(ncols, Rat(0));
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -rows[r][free];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BigInt> primitive_integers(std::span<const Rat> v) {
    BigInt l = 1;
    for (const auto& x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt n = x.numerator() * (l / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.push_back(std::move(n));
    }
    if (g == 0) {
        throw std::invalid_argument("zero vector has no primitive form");
    }
    for (auto& n : out) {
        n /= g;
    }
    return out;
}

} // namespace linalg

HomogeneousPoint::HomogeneousPoint(RatVector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw std::invalid_argument("homogeneous point needs at least 2 coordinates");
    }
    if (all_zero(coords_)) {
        throw std::invalid_argument("homogeneous point must be nonzero");
    }
}

HomogeneousPoint HomogeneousPoint::primitive() const {
    return HomogeneousPoint(to_rats(linalg::primitive_integers(coords_)));
}

HomogeneousPoint HomogeneousPoint::canonical() const {
    auto ints = linalg::primitive_integers(coords_);
    const auto first = std::find_if(ints.begin(), ints.end(), [](const BigInt& x) { return x != 0; });
    if (*first < 0) {
        for (auto& x : ints) {
            x = -x;
        }
    }
    return HomogeneousPoint(to_rats(ints));
}

HomogeneousPoint HomogeneousPoint::negated() const {
    RatVector c = coords_;
    for (auto& x : c) {
        x = -x;
    }
    return HomogeneousPoint(std::move(c));
}

bool same_projective_point(const HomogeneousPoint& a, const HomogeneousPoint& b) {
    return a.size() == b.size() && a.canonical() == b.canonical();
}

ArrangementFunctional::ArrangementFunctional(RatVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw std::invalid_argument("functional needs at least 2 coefficients");
    }
    if (all_zero(coeffs_)) {
        throw std::invalid_argument("arrangement functional must be nonzero");
    }
}

ArrangementFunctional ArrangementFunctional::negated() const {
    RatVector c = coeffs_;
    for (auto& x : c) {
        x = -x;
    }
    return ArrangementFunctional(std::move(c));
}

HomogeneousPoint lift_affine(std::span<const Rat> p) {
    RatVector c(p.begin(), p.end());
    c.emplace_back(1);
    return HomogeneousPoint(std::move(c));
}

HomogeneousPoint lift_direction(std::span<const Rat> v) {
    RatVector c(v.begin(), v.end());
    c.emplace_back(0);
    return HomogeneousPoint(std::move(c));
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i].raw() * b[i].raw();
    }
    return Rat(BigInt(acc.get_num()), BigInt(acc.get_den()));
}

Rat evaluate(const ArrangementFunctional& h, const HomogeneousPoint& u) {
    return dot(h.coeffs(), u.coords());
}

int sign_of(const ArrangementFunctional& h, const HomogeneousPoint& u) {
    return evaluate(h, u).sign();
}

ProjectiveFlat::ProjectiveFlat(std::vector<HomogeneousPoint> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) {
        throw std::invalid_argument("flat needs at least one basis vector");
    }
    const std::size_t n = basis_.front().size();
    std::vector<RatVector> rows;
    for (const auto& b : basis_) {
        if (b.size() != n) {
            throw std::invalid_argument("flat basis vectors have different lengths");
        }
        rows.push_back(b.coords());
    }
    if (basis_.size() > n || linalg::rank(std::move(rows)) != basis_.size()) {
        throw std::invalid_argument("flat basis is linearly dependent");
    }
}

bool ProjectiveFlat::contains(const RatVector& v) const {
    if (v.size() != ambient_size()) {
        throw std::invalid_argument("dimension mismatch in flat membership");
    }
    if (all_zero(v)) {
        return true;
    }
    std::vector<RatVector> rows;
    for (const auto& b : basis_) {
        rows.push_back(b.coords());
    }
    rows.push_back(v);
    return linalg::rank(std::move(rows)) == hdim();
}

RatVector ProjectiveFlat::combine(std::span<const Rat> c) const {
    if (c.size() != hdim()) {
        throw std::invalid_argument("wrong number of coefficients for flat combination");
    }
    RatVector out(ambient_size(), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += c[i] * basis_[i][j];
        }
    }
    return out;
}

bool same_span(const ProjectiveFlat& a, const ProjectiveFlat& b) {
    if (a.ambient_size() != b.ambient_size() || a.hdim() != b.hdim()) {
        return false;
    }
    return std::all_of(b.basis().begin(), b.basis().end(),
                       [&](const HomogeneousPoint& v) { return a.contains(v); }) &&
           std::all_of(a.basis().begin(), a.basis().end(),
                       [&](const HomogeneousPoint& v) { return b.contains(v); });
}

ProjectiveFlat orthogonal_complement(const ProjectiveFlat& f) {
    std::vector<RatVector> rows;
    for (const auto& b : f.basis()) {
        rows.push_back(b.coords());
    }
    auto null = linalg::nullspace(std::move(rows), f.ambient_size());
    if (null.empty()) {
        throw std::invalid_argument("complement of the whole space is the zero subspace");
    }
    std::vector<HomogeneousPoint> basis;
    for (auto& v : null) {
        basis.emplace_back(to_rats(linalg::primitive_integers(v)));
    }
    return ProjectiveFlat(std::move(basis));
}

bool flats_intersect(const ProjectiveFlat& a, const ProjectiveFlat& b) {
    if (a.ambient_size() != b.ambient_size()) {
        throw std::invalid_argument("flats live in different ambient dimensions");
    }
    std::vector<RatVector> rows;
    for (const auto& v : a.basis()) {
        rows.push_back(v.coords());
    }
    for (const auto& v : b.basis()) {
        rows.push_back(v.coords());
    }
    return linalg::rank(std::move(rows)) < a.hdim() + b.hdim();
}

std::optional<HomogeneousPoint> common_vector(const ProjectiveFlat& a, const ProjectiveFlat& b) {
    if (a.ambient_size() != b.ambient_size()) {
        throw std::invalid_argument("flats live in different ambient dimensions");
    }
    // Solve sum_i x_i a_i - sum_j y_j b_j = 0, one equation per coordinate.
    const std::size_t ha = a.hdim();
    const std::size_t ncols = ha + b.hdim();
    std::vector<RatVector> rows(a.ambient_size(), RatVector(ncols, Rat(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < ha; ++i) {
            rows[r][i] = a.basis()[i][r];
        }
        for (std::size_t j = 0; j < b.hdim(); ++j) {
            rows[r][ha + j] = -b.basis()[j][r];
        }
    }
    auto null = linalg::nullspace(std::move(rows), ncols);
    if (null.empty()) {
        return std::nullopt;
    }
    const RatVector& x = null.front();
    auto v = a.combine(std::span<const Rat>(x.data(), ha));
    return HomogeneousPoint(to_rats(linalg::primitive_integers(v)));
}

} // namespace flatdepth
