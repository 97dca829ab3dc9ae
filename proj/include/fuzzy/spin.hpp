#pragma once

#include <array>
#include <cmath>
#include <string>

#include "fuzzy/linalg.hpp"

namespace fuzzy {

/// Spin j stored as the integer 2j. Carries N = 2j + 1.
class SpinLabel {
public:
    explicit SpinLabel(int twice_j) : twice_j_(twice_j)
    {
        if (twice_j == 0)
            throw DegenerateRepresentationError("spin j = 0 gives a one-dimensional algebra");
        if (twice_j < 0) throw DomainError("spin: 2j must be non-negative");
    }

    static SpinLabel from_dimension(int n) { return SpinLabel(n - 1); }

    int twice_j() const { return twice_j_; }
    int dimension() const { return twice_j_ + 1; }
    bool half_integer() const { return twice_j_ % 2 == 1; }

    friend bool operator==(const SpinLabel&, const SpinLabel&) = default;

private:
    int twice_j_;
};

/// j(j+1), the Casimir eigenvalue.
template <typename Real = double>
Real casimir(const SpinLabel& spin)
{
    const Real j = Real(spin.twice_j()) / 2;
    return j * (j + 1);
}

/// Noncommutativity scale kappa = 1 / sqrt(j(j+1)).
template <typename Real = double>
Real kappa(const SpinLabel& spin)
{
    using std::sqrt;
    return Real(1) / sqrt(casimir<Real>(spin));
}

/// Generators J_1, J_2, J_3 of the spin-j irrep in the |j, m> basis, m = j down to -j,
/// with Condon-Shortley phases. Satisfies [J_a, J_b] = i eps_abc J_c.
template <typename Real = double>
std::array<ComplexArray<Real>, 3> build_irrep(const SpinLabel& spin)
{
    using std::sqrt;
    const Index n = spin.dimension();
    const Real j = Real(spin.twice_j()) / 2;
    const Real jj = casimir<Real>(spin);

    ComplexArray<Real> raise = ComplexArray<Real>::Zero(n, n);
    ComplexArray<Real> j3 = ComplexArray<Real>::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        const Real m = j - Real(i);
        j3(i, i) = m;
        // <m+1| J+ |m> sits one row above the column of |m>.
        if (i > 0) raise(i - 1, i) = sqrt(jj - m * (m + 1));
    }
    const ComplexArray<Real> lower = raise.adjoint();

    return {(raise + lower) / Real(2),
            (raise - lower) / (Real(2) * imag_unit<Real>),
            j3};
}

/// The fuzzy-sphere generators X_a = kappa J_a.
template <typename Real = double>
struct FuzzyCoordinates {
    SpinLabel spin;
    std::array<ComplexArray<Real>, 3> X;

    Index dimension() const { return spin.dimension(); }
    Real kappa() const { return fuzzy::kappa<Real>(spin); }
};

template <typename Real = double>
FuzzyCoordinates<Real> fuzzy_coordinates(const SpinLabel& spin)
{
    auto generators = build_irrep<Real>(spin);
    const Real k = kappa<Real>(spin);
    for (auto& g : generators) g *= k;
    return {spin, std::move(generators)};
}

/// max over (a, b) of |[X_a, X_b] - scale i eps_abc X_c|. scale = kappa for coordinates, 1 for J.
template <typename Real>
Real commutation_residual(const std::array<ComplexArray<Real>, 3>& x, Real scale)
{
    Real worst = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexArray<Real> rhs = ComplexArray<Real>::Zero(x[0].rows(), x[0].cols());
            for (int c = 0; c < 3; ++c)
                if (int e = levi_civita(a, b, c)) rhs += (Real(e) * scale) * imag_unit<Real> * x[c];
            worst = std::max(worst, max_abs(commutator(x[a], x[b]) - rhs));
        }
    return worst;
}

/// max |X_1^2 + X_2^2 + X_3^2 - I|.
template <typename Real>
Real sphere_residual(const FuzzyCoordinates<Real>& coords)
{
    ComplexArray<Real> sum = -identity<Real>(coords.dimension());
    for (const auto& x : coords.X) sum += x * x;
    return max_abs(sum);
}

}  // namespace fuzzy
