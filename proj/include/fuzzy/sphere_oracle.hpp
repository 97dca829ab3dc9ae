#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "fuzzy/bundles.hpp"

namespace fuzzy {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
template <typename Real = double>
std::pair<std::vector<Real>, std::vector<Real>> gauss_legendre(int n)
{
    using std::abs;
    using std::cos;
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    std::vector<Real> nodes(n), weights(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        Real z = cos(pi_v<Real> * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p1 = 1, p2 = 0;
            for (int j = 1; j <= n; ++j) {
                const Real p3 = p2;
                p2 = p1;
                p1 = ((Real(2 * j - 1)) * z * p2 - Real(j - 1) * p3) / Real(j);
            }
            derivative = Real(n) * (z * p1 - p2) / (z * z - Real(1));
            const Real step = p1 / derivative;
            z -= step;
            if (abs(step) <= Real(4) * std::numeric_limits<Real>::epsilon()) break;
        }
        // Refresh the derivative at the converged node.
        Real p1 = 1, p2 = 0;
        for (int j = 1; j <= n; ++j) {
            const Real p3 = p2;
            p2 = p1;
            p1 = ((Real(2 * j - 1)) * z * p2 - Real(j - 1) * p3) / Real(j);
        }
        derivative = Real(n) * (z * p1 - p2) / (z * z - Real(1));
        const Real w = Real(2) / ((Real(1) - z * z) * derivative * derivative);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    return {nodes, weights};
}

template <typename Real = double>
struct QuadratureNode {
    Real theta;
    Real phi;
    Real weight;  // includes the sin(theta) of the area element
};

/// Gauss-Legendre in cos(theta) crossed with the uniform periodic rule in phi.
template <typename Real = double>
struct QuadratureGrid {
    int n_polar;
    int n_azimuthal;
    std::vector<QuadratureNode<Real>> nodes;
};

template <typename Real = double>
QuadratureGrid<Real> build_quadrature(int n_polar, int n_azimuthal)
{
    using std::acos;
    if (n_polar < 2) throw DomainError("build_quadrature: n_polar must be at least 2");
    if (n_azimuthal < 4) throw DomainError("build_quadrature: n_azimuthal must be at least 4");
    const auto [cos_nodes, cos_weights] = gauss_legendre<Real>(n_polar);
    QuadratureGrid<Real> grid{n_polar, n_azimuthal, {}};
    grid.nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuthal);
    const Real dphi = Real(2) * pi_v<Real> / Real(n_azimuthal);
    for (int i = 0; i < n_polar; ++i)
        for (int j = 0; j < n_azimuthal; ++j)
            grid.nodes.push_back({acos(cos_nodes[i]), dphi * Real(j), cos_weights[i] * dphi});
    return grid;
}

/// Integral over the unit sphere of f(theta, phi) against the area element.
template <typename Real, typename F>
auto integrate(const QuadratureGrid<Real>& grid, F&& f)
{
    using Value = decltype(f(Real(0), Real(0)));
    Value sum{};
    for (const auto& node : grid.nodes) sum += node.weight * f(node.theta, node.phi);
    return sum;
}

/// Embedding x(theta, phi) and its coordinate derivatives.
template <typename Real>
struct SphereChart {
    std::array<Real, 3> x, d_theta, d_phi;

    static SphereChart at(Real theta, Real phi)
    {
        using std::cos;
        using std::sin;
        const Real st = sin(theta), ct = cos(theta), sp = sin(phi), cp = cos(phi);
        return {{st * cp, st * sp, ct}, {ct * cp, ct * sp, -st}, {-st * sp, st * cp, Real(0)}};
    }
};

/// Coefficient F_{theta phi} of tr p_k (dp_k)(dp_k) = F_{theta phi} dtheta ^ dphi,
/// where p_k is the k-th Kronecker power of the Bott projector (transposed pointwise
/// when `transpose` is set). Derivatives are exact since p is affine in x.
///
/// The trace is taken factor by factor: with P = p, A = d_theta p, B = d_phi p,
///   d p_k = sum_i P (x) .. (x) dP (x) .. (x) P   (dP at slot i)
/// and tr(M_1 (x) .. (x) M_k) = prod tr M_l, so
///   tr p_k A_k B_k = k tr(PAB) t^{k-1} + k(k-1) tr(PAP) tr(PPB) t^{k-2},  t = tr(PPP),
/// which keeps k up to 12 affordable at every quadrature node.
template <typename Real = double>
Complex<Real> curvature_density(int k, bool transpose, Real theta, Real phi)
{
    using std::abs;
    using std::pow;
    using std::sin;
    if (k < 1 || k > max_tensor_power) throw DomainError("curvature_density: k must lie in 1..12");

    if (abs(sin(theta)) < Real(1e-12)) {
        const Real orientation = transpose ? Real(-1) : Real(1);
        return orientation * Real(k) * imag_unit<Real> / Real(2) * sin(theta);
    }

    const auto chart = SphereChart<Real>::at(theta, phi);
    ComplexArray<Real> p = pauli_combination(chart.x, true);
    ComplexArray<Real> a = pauli_combination(chart.d_theta, false);
    ComplexArray<Real> b = pauli_combination(chart.d_phi, false);
    if (transpose) {
        p.transposeInPlace();
        a.transposeInPlace();
        b.transposeInPlace();
    }

    const auto tr = [](const ComplexArray<Real>& m) { return m.trace(); };
    const Complex<Real> t = tr(p * p * p);
    const Real kk = Real(k);
    const auto power = [&](int e) { return e <= 0 ? Complex<Real>(1) : pow(t, e); };

    const Complex<Real> theta_phi = kk * tr(p * a * b) * power(k - 1)
                                    + kk * (kk - 1) * tr(p * a * p) * tr(p * p * b) * power(k - 2);
    const Complex<Real> phi_theta = kk * tr(p * b * a) * power(k - 1)
                                    + kk * (kk - 1) * tr(p * b * p) * tr(p * p * a) * power(k - 2);
    return theta_phi - phi_theta;
}

template <typename Real = double>
struct CommutativeCharge {
    Real c1;
    Real imaginary_residue;
};

template <typename Real>
inline constexpr Real quadrature_imaginary_threshold = Real(1e-9);

/// (1 / 2 pi i) int_{S^2} F_k, evaluated as int (F_{theta phi} / sin theta) dA.
template <typename Real>
CommutativeCharge<Real> chern_number_commutative(int k, bool transpose, const QuadratureGrid<Real>& grid)
{
    using std::abs;
    using std::sin;
    if (k < 1 || k > max_tensor_power) throw DomainError("chern_number_commutative: k must lie in 1..12");
    const Complex<Real> total = integrate(grid, [&](Real theta, Real phi) {
        return curvature_density<Real>(k, transpose, theta, phi) / sin(theta);
    });
    const Complex<Real> charge = total / (Real(2) * pi_v<Real> * imag_unit<Real>);
    if (abs(charge.imag()) > quadrature_imaginary_threshold<Real>)
        throw NumericalIntegrityError("chern_number_commutative: imaginary residue above tolerance");
    return {charge.real(), abs(charge.imag())};
}

/// int_{S^2} eps_abc x_a dx_b ^ dx_c / (8 pi); equals 1.
template <typename Real>
Real volume_check(const QuadratureGrid<Real>& grid)
{
    using std::sin;
    return integrate(grid, [](Real theta, Real phi) {
        const auto chart = SphereChart<Real>::at(theta, phi);
        Real coefficient = 0;  // of dtheta ^ dphi
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    if (int e = levi_civita(a, b, c))
                        coefficient += Real(e) * chart.x[a]
                                       * (chart.d_theta[b] * chart.d_phi[c] - chart.d_phi[b] * chart.d_theta[c]);
        return coefficient / (Real(8) * pi_v<Real>) / sin(theta);
    });
}

}  // namespace fuzzy
