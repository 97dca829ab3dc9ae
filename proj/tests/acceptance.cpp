// Acceptance gate: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace fuzzy;
using namespace fuzzy::test;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

class Worst {
public:
    void add(double value, double tolerance)
    {
        ok_ = ok_ && value <= tolerance;
        worst_ = std::max(worst_, value);
    }
    void require(bool cond) { ok_ = ok_ && cond; }
    bool ok() const { return ok_; }
    double worst() const { return worst_; }

private:
    bool ok_ = true;
    double worst_ = 0.0;
};

template <typename... Args>
std::string fmt_detail(const char* format, Args... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome fuzzy_charge_reproduction()
{
    const auto start = std::chrono::steady_clock::now();
    Worst w;
    for (int n = 2; n <= 32; ++n)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
            const auto report = chern_number(build_fuzzy_projector(ctx.coordinates(), s), ctx);
            w.add(std::abs(report.c1_computed - gamma_formula(n, s)), 1e-9);
        }
    const double t = seconds_since(start);
    w.require(t <= 10.0);
    return {w.ok(), fmt_detail("max |c1 - gamma| = %.3e, runtime %.2f s", w.worst(), t)};
}

Outcome curvature_proportionality()
{
    Worst w;
    for (int n = 2; n <= 32; ++n) {
        const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
        const auto omega = volume_form(ctx);
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto p = build_fuzzy_projector(ctx.coordinates(), s);
            w.add(extract_coefficient(module_trace(curvature(ctx, p.realization)), omega).residual, 1e-10);
        }
    }
    return {w.ok(), fmt_detail("max relative residual = %.3e", w.worst())};
}

Outcome projector_identities()
{
    Worst w;
    for (int n = 2; n <= 64; ++n) {
        const auto coords = fuzzy_coordinates<double>(SpinLabel::from_dimension(n));
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto branch = solve_projector_params(coords.kappa())[s == Sign::plus ? 0 : 1];
            const Array p = assemble_projector(coords, branch.alpha, branch.beta);
            w.add(idempotency_residual(p), 1e-12);
            w.add(adjoint_residual(p), 1e-12);
            w.add(std::abs(rank_character(p, n) - (1.0 + sign_value(s) / double(n))), 1e-12);
        }
    }
    return {w.ok(), fmt_detail("max residual = %.3e", w.worst())};
}

Outcome idempotency_solve()
{
    Worst w;
    for (int n = 2; n <= 64; ++n) {
        const double k = kappa(SpinLabel::from_dimension(n));
        const auto params = solve_projector_params(k);
        int nontrivial = 0;
        for (const auto& p : params) nontrivial += !p.trivial;
        w.require(params.size() == 4 && nontrivial == 2);
        const double beta = 1.0 / std::sqrt(4.0 + k * k);
        w.add(std::abs(params[0].beta - beta), 1e-12);
        w.add(std::abs(params[1].beta + beta), 1e-12);
        w.add(std::abs(params[0].alpha - (1.0 + beta * k) / 2.0), 1e-12);
        w.add(std::abs(params[1].alpha - (1.0 - beta * k) / 2.0), 1e-12);
        w.require(params[2].trivial && params[2].alpha == 0.0 && params[2].beta == 0.0);
        w.require(params[3].trivial && params[3].alpha == 1.0 && params[3].beta == 0.0);
        // idempotency of every returned pair, realized on the coordinates
        const auto coords = fuzzy_coordinates<double>(SpinLabel::from_dimension(n));
        for (const auto& p : params) w.add(idempotency_residual(assemble_projector(coords, p.alpha, p.beta)), 1e-12);
    }
    return {w.ok(), fmt_detail("2 nontrivial + 2 trivial branches, max deviation = %.3e", w.worst())};
}

Outcome calculus_laws()
{
    auto g = rng(2024);
    Worst d2, bracket, pdpp;
    for (int n : {2, 3, 4, 8}) {
        const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
        for (int trial = 0; trial < 20; ++trial) {
            const Array f = random_array(n, n, g);
            d2.add(max_abs(d1(ctx, d0(ctx, f))) / f.norm(), 1e-12);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    Array lhs = derive(ctx, a, derive(ctx, b, f)) - derive(ctx, b, derive(ctx, a, f));
                    for (int c = 0; c < 3; ++c)
                        if (int e = levi_civita(a, b, c)) lhs -= double(e) * I * derive(ctx, c, f);
                    bracket.add(max_abs(lhs), 1e-12);
                }
        }
    }
    for (int n = 2; n <= 32; ++n) {
        const auto ctx = make_context<double>(SpinLabel::from_dimension(n));
        for (Sign s : {Sign::plus, Sign::minus}) {
            const Array p = build_fuzzy_projector(ctx.coordinates(), s).realization;
            const auto dp = d0(ctx, p);
            for (int a = 0; a < 3; ++a) pdpp.add(max_abs((p * dp[a] * p).eval()), 1e-12);
        }
    }
    for (int i = 0; i < 100; ++i) {
        const auto chart = SphereChart<double>::at(std::acos(2.0 * std::uniform_real_distribution<>(0, 1)(g) - 1.0),
                                                   2.0 * pi_v<double> * std::uniform_real_distribution<>(0, 1)(g));
        const Array p = pauli_combination(chart.x, true);
        for (const auto& tangent : {chart.d_theta, chart.d_phi})
            pdpp.add(max_abs((p * pauli_combination(tangent, false) * p).eval()), 1e-12);
    }
    const bool ok = d2.ok() && bracket.ok() && pdpp.ok();
    return {ok, fmt_detail("d^2 %.2e, bracket %.2e, p(dp)p %.2e", d2.worst(), bracket.worst(), pdpp.worst())};
}

Outcome commutative_integers()
{
    const auto start = std::chrono::steady_clock::now();
    const auto grid = build_quadrature<double>(64, 128);
    Worst w;
    const double c1 = chern_number_commutative(1, false, grid).c1;
    const double c1t = chern_number_commutative(1, true, grid).c1;
    const double c2 = chern_number_commutative(2, false, grid).c1;
    const double c3 = chern_number_commutative(3, false, grid).c1;
    const double vol = volume_check(grid);
    w.add(std::abs(c1 - 1.0), 1e-10);
    w.add(std::abs(c1t + 1.0), 1e-10);
    w.add(std::abs(c2 - 2.0), 1e-8);
    w.add(std::abs(c3 - 3.0), 1e-8);
    w.add(std::abs(vol - 1.0), 1e-12);
    const double t = seconds_since(start);
    w.require(t <= 5.0);
    return {w.ok(), fmt_detail("c1 = %.12f, c1(p^t) = %.12f, c1(p_2) = %.10f, c1(p_3) = %.10f, volume = %.15f, %.2f s",
                               c1, c1t, c2, c3, vol, t)};
}

Outcome additivity()
{
    auto g = rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Worst w;
    for (int i = 0; i < 50; ++i) {
        const double theta = std::acos(2.0 * unit(g) - 1.0), phi = 2.0 * pi_v<double> * unit(g);
        const C base = curvature_density<double>(1, false, theta, phi);
        for (int k = 2; k <= 12; ++k)
            w.add(std::abs(curvature_density<double>(k, false, theta, phi) - double(k) * base), 1e-10);
    }
    return {w.ok(), fmt_detail("max |density(k) - k density(1)| = %.3e", w.worst())};
}

Outcome commutative_limit()
{
    Worst w;
    for (int n = 4; n <= 32; ++n)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const double target = sign_value(s);
            const double dev = std::abs(gamma_formula(n, s) - target);
            w.add(dev * n / 2.0, 1.0);
            w.require(std::abs(gamma_formula(2 * n, s) - target) < dev);
        }
    return {w.ok(), fmt_detail("max N |gamma - (+-1)| / 2 = %.4f (<= 1)", w.worst())};
}

Outcome special_values()
{
    Worst w;
    const double plus_exact = 3.0 * std::sqrt(3.0) / 2.0;
    w.add(std::abs(gamma_formula(2, Sign::minus)), 1e-9);
    w.add(std::abs(gamma_formula(2, Sign::plus) - plus_exact), 1e-9);
    const auto plus = fuzzy_chern_report<double>(2, Sign::plus);
    const auto minus = fuzzy_chern_report<double>(2, Sign::minus);
    w.add(std::abs(plus.c1_computed - plus_exact), 1e-9);
    w.add(std::abs(minus.c1_computed), 1e-9);
    return {w.ok(), fmt_detail("pipeline c1(2,+) = %.10f, c1(2,-) = %.3e", plus.c1_computed, minus.c1_computed)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 fuzzy charge reproduction", fuzzy_charge_reproduction},
        {"2 curvature proportionality", curvature_proportionality},
        {"3 projector identities", projector_identities},
        {"4 idempotency solve", idempotency_solve},
        {"5 calculus laws", calculus_laws},
        {"6 commutative oracle integers", commutative_integers},
        {"7 additivity", additivity},
        {"8 commutative limit", commutative_limit},
        {"9 special values", special_values},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
