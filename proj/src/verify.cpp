#include "fuzzy/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "fuzzy/fuzzy.hpp"
#include "fuzzy/random.hpp"

namespace fuzzy {

namespace {

using Array = ComplexArray<double>;
using Rng = std::mt19937_64;

class Tally {
public:
    void check(const std::string& what, double value, double tolerance)
    {
        ++count_;
        if (!(value <= tolerance)) {
            if (failure_.empty()) failure_ = fmt::format("{}: {:.3e} exceeds {:.1e}", what, value, tolerance);
            return;
        }
        const double ratio = tolerance > 0 ? value / tolerance : 0.0;
        if (ratio >= worst_ratio_) {
            worst_ratio_ = ratio;
            worst_ = fmt::format("{} = {:.3e} (tol {:.1e})", what, value, tolerance);
        }
    }

    void require(const std::string& what, bool ok)
    {
        ++count_;
        if (!ok && failure_.empty()) failure_ = what;
    }

    SuiteResult finish(std::string name) const
    {
        if (!failure_.empty()) return {std::move(name), false, failure_};
        return {std::move(name), true, fmt::format("{} checks; worst {}", count_, worst_.empty() ? "n/a" : worst_)};
    }

private:
    int count_ = 0;
    double worst_ratio_ = -1.0;
    std::string worst_;
    std::string failure_;
};

double relative(std::complex<double> got, std::complex<double> want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

SuiteResult linalg_suite(Rng& rng)
{
    Tally t;
    for (int trial = 0; trial < 20; ++trial) {
        const Array a = random_array(8, 8, rng), b = random_array(8, 8, rng);
        t.check("tr(AB) - tr(BA)", relative((a * b).trace(), (b * a).trace()), 1e-12);
        const Array x = random_array(2, 2, rng), y = random_array(3, 3, rng), z = random_array(2, 3, rng);
        const Array left = kron(kron(x, y), z), right = kron(x, kron(y, z));
        t.check("kron associativity", max_abs((left - right).eval()) / max_abs(left), 1e-14);
        t.check("tr kron = tr tr", relative(kron(x, y).trace(), x.trace() * y.trace()), 1e-12);
        t.require("adjoint involution", a.adjoint().adjoint() == a);
    }
    return t.finish("linalg");
}

SuiteResult su2_suite(int max_n)
{
    Tally t;
    for (int twice_j = 1; twice_j < std::max(max_n, 2); ++twice_j) {
        const SpinLabel spin(twice_j);
        const auto coords = fuzzy_coordinates<double>(spin);
        const double k = coords.kappa();
        t.check(fmt::format("commutation residual (2j={})", twice_j), commutation_residual(coords.X, k), 1e-12);
        t.check(fmt::format("sphere residual (2j={})", twice_j), sphere_residual(coords), 1e-12);
        for (int a = 0; a < 3; ++a) t.check("tr_N X_a", std::abs(normalized_trace(coords.X[a])), 1e-12);
        for (Index i = 0; i < coords.dimension(); ++i) {
            const double m = twice_j / 2.0 - double(i);
            t.check("X_3 spectrum", std::abs(coords.X[2](i, i) - k * m), 1e-12);
        }
    }
    return t.finish("su2-repr");
}

SuiteResult calculus_suite(Rng& rng)
{
    Tally t;
    for (int n : {2, 3, 4, 8}) {
        const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
        for (int trial = 0; trial < 20; ++trial) {
            const Array f = random_array(n, n, rng), g = random_array(n, n, rng);
            t.check(fmt::format("d^2 (N={})", n), max_abs(d1(ctx, d0(ctx, f))) / f.norm(), 1e-12);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    Array lhs = ctx.apply(a, ctx.apply(b, f)) - ctx.apply(b, ctx.apply(a, f));
                    for (int c = 0; c < 3; ++c)
                        if (int e = levi_civita(a, b, c)) lhs -= double(e) * imag_unit<double> * ctx.apply(c, f);
                    t.check(fmt::format("derivation bracket (N={})", n), max_abs(lhs), 1e-12);
                }
            const auto leibniz = right_multiply(d0(ctx, f), g) + left_multiply(f, d0(ctx, g)) - d0(ctx, (f * g).eval());
            t.check("Leibniz", max_abs(leibniz), 1e-12);
        }
    }
    return t.finish("calculus");
}

SuiteResult params_suite(int max_n)
{
    Tally t;
    for (int n = 2; n <= max_n; ++n) {
        const double k = kappa<double>(SpinLabel::from_dimension(n));
        const auto params = solve_projector_params(k);
        int nontrivial = 0, trivial = 0;
        for (const auto& p : params) (p.trivial ? trivial : nontrivial)++;
        t.require(fmt::format("branch count (N={})", n), nontrivial == 2 && trivial == 2);
        const double beta = 1.0 / std::sqrt(4.0 + k * k);
        t.check("plus beta", std::abs(params[0].beta - beta), 1e-12);
        t.check("plus alpha", std::abs(params[0].alpha - (1.0 + beta * k) / 2.0), 1e-12);
        t.check("minus beta", std::abs(params[1].beta + beta), 1e-12);
        t.check("minus alpha", std::abs(params[1].alpha - (1.0 - beta * k) / 2.0), 1e-12);
        t.require("trivial pairs", params[2].alpha == 0.0 && params[2].beta == 0.0 && params[3].alpha == 1.0
                                       && params[3].beta == 0.0);
    }
    return t.finish("projector-params");
}

SuiteResult projector_suite(int max_n, double kappa_perturbation)
{
    Tally t;
    for (int n = 2; n <= max_n; ++n) {
        const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
        const double k = ctx.kappa() * (1.0 + kappa_perturbation);
        const auto params = solve_projector_params(k);
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto& branch = params[s == Sign::plus ? 0 : 1];
            const Array p = assemble_projector(ctx.coordinates(), branch.alpha, branch.beta);
            const double sv = sign_value(s);
            const auto label = fmt::format("N={} {}", n, to_string(s));
            t.check("idempotency " + label, idempotency_residual(p), 1e-12);
            t.check("self-adjointness " + label, adjoint_residual(p), 1e-12);
            t.check("Ch_0 " + label, std::abs(rank_character(p, n) - (1.0 + sv / n)), 1e-12);
            t.check("beta kappa " + label, std::abs(branch.beta * ctx.kappa() - sv / n), 1e-13);
            const auto dp = d0(ctx, p);
            for (int a = 0; a < 3; ++a) t.check("p (dp) p " + label, max_abs((p * dp[a] * p).eval()), 1e-12);
        }
    }
    return t.finish("projectors");
}

SuiteResult pipeline_suite(int max_n)
{
    Tally t;
    for (int n = 2; n <= max_n; ++n)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto r = fuzzy_chern_report<double>(n, s);
            const auto label = fmt::format("N={} {}", n, to_string(s));
            t.check("|c1 - gamma| " + label, r.abs_error, 1e-9);
            t.check("proportionality " + label, r.proportionality_residual, 1e-10);
        }
    return t.finish("chern-pipeline");
}

SuiteResult limit_suite(int max_n)
{
    Tally t;
    for (int n = 4; n <= std::max(max_n, 4); ++n)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const double target = sign_value(s);
            const double dev = std::abs(gamma_formula(n, s) - target);
            const double dev2 = std::abs(gamma_formula(2 * n, s) - target);
            t.check(fmt::format("|gamma - target| N={}", n), dev, 2.0 / n);
            t.require(fmt::format("deviation shrinks N={} -> {}", n, 2 * n), dev2 < dev);
        }
    return t.finish("commutative-limit");
}

SuiteResult oracle_suite(Rng& rng)
{
    Tally t;
    const auto grid = build_quadrature<double>(64, 128);
    t.check("c1(p) - 1", std::abs(chern_number_commutative(1, false, grid).c1 - 1.0), 1e-10);
    t.check("c1(p^t) + 1", std::abs(chern_number_commutative(1, true, grid).c1 + 1.0), 1e-10);
    for (int k : {2, 3}) {
        t.check(fmt::format("c1(p_{}) - {}", k, k), std::abs(chern_number_commutative(k, false, grid).c1 - k), 1e-8);
        t.check(fmt::format("c1(p_{}^t) + {}", k, k), std::abs(chern_number_commutative(k, true, grid).c1 + k),
                1e-8);
    }
    t.check("volume - 1", std::abs(volume_check(grid) - 1.0), 1e-12);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_point<double>(rng);
        const Array p = bott_projector(x);
        for (int a = 0; a < 3; ++a) {
            // dp along a tangent direction is sigma.v / 2 with v orthogonal to x.
            std::array<double, 3> v{0, 0, 0};
            v[a] = 1.0;
            const double dot = v[0] * x[0] + v[1] * x[1] + v[2] * x[2];
            for (int b = 0; b < 3; ++b) v[b] -= dot * x[b];
            const Array dp = pauli_combination(v, false);
            t.check("Bott p (dp) p", max_abs((p * dp * p).eval()), 1e-12);
        }
    }
    return t.finish("s2-oracle");
}

SuiteResult additivity_suite(Rng& rng)
{
    Tally t;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double theta = std::acos(2.0 * unit(rng) - 1.0), phi = 2.0 * pi_v<double> * unit(rng);
        const auto base = curvature_density<double>(1, false, theta, phi);
        for (int k : {2, 3, 12})
            t.check(fmt::format("density({}) - {} density(1)", k, k),
                    std::abs(curvature_density<double>(k, false, theta, phi) - double(k) * base), 1e-10);
        t.check("transposed density + density",
                std::abs(curvature_density<double>(1, true, theta, phi) + base), 1e-12);
    }
    return t.finish("additivity");
}

SuiteResult guarded(const std::string& name, const std::function<SuiteResult()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, fmt::format("exception: {}", e.what())};
    }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options)
{
    Rng rng(options.seed);
    const int max_n = std::max(options.max_n, 2);
    std::vector<SuiteResult> out;
    out.push_back(guarded("linalg", [&] { return linalg_suite(rng); }));
    out.push_back(guarded("su2-repr", [&] { return su2_suite(max_n); }));
    out.push_back(guarded("calculus", [&] { return calculus_suite(rng); }));
    out.push_back(guarded("projector-params", [&] { return params_suite(max_n); }));
    out.push_back(guarded("projectors", [&] { return projector_suite(max_n, options.kappa_perturbation); }));
    out.push_back(guarded("chern-pipeline", [&] { return pipeline_suite(max_n); }));
    out.push_back(guarded("commutative-limit", [&] { return limit_suite(max_n); }));
    out.push_back(guarded("s2-oracle", [&] { return oracle_suite(rng); }));
    out.push_back(guarded("additivity", [&] { return additivity_suite(rng); }));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace fuzzy
