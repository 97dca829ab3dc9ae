#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fuzzy;
using namespace fuzzy::test;

namespace {

const double pi = pi_v<double>;

// F_{theta phi} from full 2^k x 2^k arrays: p_k from tensor_power_projector, and its
// coordinate derivatives supplied by the caller.
C density_from_arrays(const Array& pk, const Array& dt, const Array& dp)
{
    return (pk * (dt * dp - dp * dt)).trace();
}

// Analytic derivatives of p_k by the Kronecker product rule on dense arrays.
C dense_density(int k, bool transpose, double theta, double phi)
{
    const auto chart = SphereChart<double>::at(theta, phi);
    Array p = pauli_combination(chart.x, true);
    Array a = pauli_combination(chart.d_theta, false);
    Array b = pauli_combination(chart.d_phi, false);
    if (transpose) {
        p.transposeInPlace();
        a.transposeInPlace();
        b.transposeInPlace();
    }
    auto power_with = [&](const Array& d) {
        Array sum = Array::Zero(1 << k, 1 << k);
        for (int slot = 0; slot < k; ++slot) {
            Array term = slot == 0 ? d : p;
            for (int l = 1; l < k; ++l) term = kron(term, l == slot ? d : p);
            sum += term;
        }
        return sum;
    };
    Array pk = p;
    for (int l = 1; l < k; ++l) pk = kron(pk, p);
    return density_from_arrays(pk, power_with(a), power_with(b));
}

// Central differences of tensor_power_projector in theta and phi.
C finite_difference_density(int k, bool transpose, double theta, double phi, double h)
{
    auto pk = [&](double t, double f) {
        Array m = tensor_power_projector(PointOnSphere<double>::from_angles(t, f), k);
        if (transpose) m.transposeInPlace();
        return m;
    };
    const Array dt = (pk(theta + h, phi) - pk(theta - h, phi)) / (2.0 * h);
    const Array dp = (pk(theta, phi + h) - pk(theta, phi - h)) / (2.0 * h);
    return density_from_arrays(pk(theta, phi), dt, dp);
}

}  // namespace

TEST_CASE("gauss_legendre")
{
    // integral of x^m over [-1, 1] is exact up to degree 2n - 1
    for (int n : {2, 3, 7, 20, 64}) {
        const auto [x, w] = gauss_legendre<double>(n);
        for (int m = 0; m < 2 * n; ++m) {
            double sum = 0;
            for (int i = 0; i < n; ++i) sum += w[i] * std::pow(x[i], m);
            const double exact = m % 2 ? 0.0 : 2.0 / (m + 1);
            CHECK(std::abs(sum - exact) < 1e-13);
        }
        for (int i = 0; i < n; ++i) CHECK(std::abs(std::legendre(n, x[i])) < 1e-12);
    }
}

TEST_CASE("build_quadrature")
{
    const auto grid = build_quadrature<double>(16, 32);
    CHECK(grid.nodes.size() == 16u * 32u);
    double total = 0;
    for (const auto& node : grid.nodes) total += node.weight;
    CHECK(std::abs(total - 4.0 * pi) <= 1e-12 * 4.0 * pi);

    CHECK(integrate(grid, [](double, double) { return 1.0; }) == doctest::Approx(4.0 * pi).epsilon(1e-12));
    CHECK(std::abs(integrate(grid, [](double t, double) { return std::cos(t); })) < 1e-13);
    CHECK(integrate(grid, [](double t, double) { return std::cos(t) * std::cos(t); })
          == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-12));
    // x_1^2 exercises the periodic rule in phi
    CHECK(integrate(grid, [](double t, double f) { return std::pow(std::sin(t) * std::cos(f), 2); })
          == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(build_quadrature<double>(1, 8), DomainError);
    CHECK_THROWS_AS(build_quadrature<double>(4, 3), DomainError);
}

TEST_CASE("curvature_density")
{
    // (i/4) eps x dx dx = (i/2) sin(theta) dtheta dphi
    const C equator = curvature_density<double>(1, false, pi / 2, 0.0);
    CHECK(std::abs(equator - 0.5 * I) < 1e-15);
    for (double t : {0.1, 0.7, 2.0, 3.0}) CHECK(std::abs(curvature_density<double>(1, false, t, 1.3) - 0.5 * I * std::sin(t)) < 1e-14);

    auto g = rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double theta = std::acos(2 * unit(g) - 1), phi = 2 * pi * unit(g);
        const C base = curvature_density<double>(1, false, theta, phi);
        CHECK(std::abs(curvature_density<double>(2, false, theta, phi) - 2.0 * base) <= 1e-10);
        CHECK(std::abs(curvature_density<double>(1, true, theta, phi) + base) <= 1e-14);
        for (int k = 1; k <= 4; ++k)
            for (bool t : {false, true})
                CHECK(std::abs(curvature_density<double>(k, t, theta, phi) - dense_density(k, t, theta, phi)) < 1e-13);
    }

    SUBCASE("poles")
    {
        CHECK(std::abs(curvature_density<double>(3, false, 0.0, 0.4)) == 0.0);
        CHECK(std::abs(curvature_density<double>(3, true, pi, 0.4)) < 1e-15);
    }
    CHECK_THROWS_AS(curvature_density<double>(0, false, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(curvature_density<double>(13, false, 1.0, 1.0), DomainError);
}

TEST_CASE("chern_number_commutative")
{
    const auto grid = build_quadrature<double>(64, 128);
    const auto one = chern_number_commutative(1, false, grid);
    CHECK(std::abs(one.c1 - 1.0) <= 1e-10);
    CHECK(one.imaginary_residue <= 1e-9);
    CHECK(std::abs(chern_number_commutative(1, true, grid).c1 + 1.0) <= 1e-10);
    for (int k = 2; k <= 12; ++k) {
        CHECK(std::abs(chern_number_commutative(k, false, grid).c1 - k) <= 1e-8);
        CHECK(std::abs(chern_number_commutative(k, true, grid).c1 + k) <= 1e-8);
    }
    CHECK_THROWS_AS(chern_number_commutative(0, false, grid), DomainError);

    SUBCASE("coarse grids are already exact for the smooth integrand")
    {
        CHECK(std::abs(chern_number_commutative(1, false, build_quadrature<double>(2, 4)).c1 - 1.0) < 1e-12);
    }
}

TEST_CASE("finite-difference cross-check")
{
    const auto grid = build_quadrature<double>(24, 48);
    for (int k : {1, 2, 3})
        for (bool t : {false, true}) {
            const double analytic = chern_number_commutative(k, t, grid).c1;
            const C fd = integrate(grid, [&](double theta, double phi) {
                return finite_difference_density(k, t, theta, phi, 1e-5) / std::sin(theta);
            }) / (2.0 * pi * I);
            CHECK(std::abs(fd.real() - analytic) <= 1e-6);
            CHECK(std::abs(fd.imag()) <= 1e-6);
        }
}

TEST_CASE("volume_check")
{
    for (auto [np, na] : {std::pair{64, 128}, {2, 4}, {8, 8}, {3, 17}})
        CHECK(std::abs(volume_check(build_quadrature<double>(np, na)) - 1.0) <= 1e-12);
}

TEST_CASE("fuzzy charge approaches the commutative integers")
{
    const auto grid = build_quadrature<double>(64, 128);
    const double plus = chern_number_commutative(1, false, grid).c1;
    const double minus = chern_number_commutative(1, true, grid).c1;
    CHECK(std::abs(gamma_formula(64, Sign::plus) - plus) <= 0.032);
    CHECK(std::abs(gamma_formula(64, Sign::minus) - minus) <= 0.032);
}
