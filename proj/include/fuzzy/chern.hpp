#pragma once

#include <cmath>

#include "fuzzy/bundles.hpp"

namespace fuzzy {

/// omega = eps_abc X_a dX_b ^ dX_c / (8 pi), the normalized fuzzy volume form.
template <typename Real>
GradedForm<Real> volume_form(const CalculusContext<Real>& ctx)
{
    const auto& x = ctx.coordinates().X;
    std::array<GradedForm<Real>, 3> dx{d0(ctx, x[0]), d0(ctx, x[1]), d0(ctx, x[2])};
    auto omega = GradedForm<Real>::zero(2, 1, ctx.algebra_dim());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (int e = levi_civita(a, b, c))
                    omega += Complex<Real>(Real(e)) * left_multiply(x[a], wedge(dx[b], dx[c]));
    return omega * Complex<Real>(Real(1) / (Real(8) * pi_v<Real>));
}

/// Integral of f omega: the normalized trace of f.
template <typename Derived>
typename Derived::Scalar star_integral(const Eigen::MatrixBase<Derived>& f)
{
    return normalized_trace(f);
}

template <typename Real>
struct CoefficientFit {
    Complex<Real> lambda;
    Real residual;  // ||F - lambda omega|| / ||omega||
};

/// Least-squares scalar lambda with F ~ lambda omega.
template <typename Real>
CoefficientFit<Real> extract_coefficient(const GradedForm<Real>& f, const GradedForm<Real>& omega)
{
    if (f.degree() != 2 || omega.degree() != 2) throw DegreeError("extract_coefficient: expected two-forms");
    if (f.module_rank() != 1 || omega.module_rank() != 1)
        throw ShapeError("extract_coefficient: expected scalar-valued forms");
    f.require_compatible(omega);
    const Real omega_sq = std::real(inner(omega, omega));
    if (!(omega_sq > Real(0))) throw DegenerateVolumeError("extract_coefficient: volume form vanishes");
    const Complex<Real> lambda = inner(omega, f) / omega_sq;
    return {lambda, norm(f - lambda * omega) / std::sqrt(omega_sq)};
}

/// gamma_pm(N) = (1 - 1/N^2)^{3/2} (N pm (N^2 - 2)) / (N^2 - 3).
template <typename Real = double>
Real gamma_formula(int n, Sign sign)
{
    using std::pow;
    if (n < 2) throw DomainError("gamma_formula: N must be at least 2");
    const Real nn = Real(n);
    const Real s = Real(sign_value(sign));
    return pow(Real(1) - Real(1) / (nn * nn), Real(1.5)) * (nn + s * (nn * nn - Real(2))) / (nn * nn - Real(3));
}

template <typename Real>
inline constexpr Real proportionality_threshold = Real(1e-8);

template <typename Real>
inline constexpr Real imaginary_threshold = Real(1e-10);

/// Charge of an arbitrary rank-2 projector over A_N: lambda / (2 pi i) with lambda from
/// module_trace(p dp dp) ~ lambda omega. No proportionality or reality checks.
template <typename Real, typename Derived>
CoefficientFit<Real> projector_charge(const CalculusContext<Real>& ctx, const Eigen::MatrixBase<Derived>& p)
{
    const auto field = module_trace(curvature(ctx, p));
    auto fit = extract_coefficient(field, volume_form(ctx));
    // int* (lambda omega) = lambda tr_N(I) = lambda
    fit.lambda *= star_integral(identity<Real>(ctx.algebra_dim())) / (Real(2) * pi_v<Real> * imag_unit<Real>);
    return fit;
}

template <typename Real = double>
struct ChernReport {
    int N;
    Sign sign;
    Real ch0;
    Real c1_computed;
    Real gamma_formula;
    Real abs_error;
    Real proportionality_residual;
    Real projector_residual;
};

/// First Chern number of a fuzzy line bundle, compared against gamma_pm(N).
template <typename Real>
ChernReport<Real> chern_number(const FuzzyProjector<Real>& projector, const CalculusContext<Real>& ctx)
{
    using std::abs;
    if (!(projector.spin == ctx.spin())) throw PreconditionError("chern_number: projector and context spins differ");

    const auto fit = projector_charge(ctx, projector.realization);
    if (fit.residual > proportionality_threshold<Real>)
        throw StructuralError("chern_number: curvature is not proportional to the volume form");
    if (abs(fit.lambda.imag()) > imaginary_threshold<Real>)
        throw NumericalIntegrityError("chern_number: charge has a non-negligible imaginary part");

    ChernReport<Real> r;
    r.N = projector.spin.dimension();
    r.sign = projector.sign;
    r.ch0 = projector.ch0();
    r.c1_computed = fit.lambda.real();
    r.gamma_formula = gamma_formula<Real>(r.N, projector.sign);
    r.abs_error = abs(r.c1_computed - r.gamma_formula);
    r.proportionality_residual = fit.residual;
    r.projector_residual = std::max(idempotency_residual(projector.realization),
                                    adjoint_residual(projector.realization));
    return r;
}

/// Full pipeline for one (N, sign).
template <typename Real = double>
ChernReport<Real> fuzzy_chern_report(int n, Sign sign)
{
    const auto ctx = make_context<Real>(SpinLabel::from_dimension(n));
    return chern_number(build_fuzzy_projector(ctx.coordinates(), sign), ctx);
}

}  // namespace fuzzy
