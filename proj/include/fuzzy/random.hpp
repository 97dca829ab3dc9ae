#pragma once

#include <random>

#include "fuzzy/bundles.hpp"

namespace fuzzy {

/// Array with independent standard-normal real and imaginary parts.
template <typename Real = double, typename Rng>
ComplexArray<Real> random_array(Index rows, Index cols, Rng& rng)
{
    std::normal_distribution<Real> normal;
    ComplexArray<Real> a(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) a(i, j) = Complex<Real>(normal(rng), normal(rng));
    return a;
}

/// Uniformly distributed point on the unit sphere.
template <typename Real = double, typename Rng>
PointOnSphere<Real> random_point(Rng& rng)
{
    using std::sqrt;
    std::normal_distribution<Real> normal;
    Real v[3];
    Real r = 0;
    do {
        for (auto& c : v) c = normal(rng);
        r = sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    } while (r < Real(1e-3));
    return PointOnSphere<Real>(v[0] / r, v[1] / r, v[2] / r);
}

}  // namespace fuzzy
