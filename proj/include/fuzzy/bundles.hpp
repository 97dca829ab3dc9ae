#pragma once

#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "fuzzy/calculus.hpp"

namespace fuzzy {

enum class Sign { plus, minus };

constexpr int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
constexpr std::string_view to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

/// Coefficients of p = alpha + beta sigma_a (x) X_a.
template <typename Real = double>
struct ProjectorParams {
    Real alpha;
    Real beta;
    bool trivial;  // beta = 0: the zero or identity projector
};

/// Residuals of the two conditions for p^2 = p:
///   alpha^2 + beta^2 = alpha   (scalar part)
///   beta (2 alpha - kappa beta - 1) = 0   (sigma (x) X part)
template <typename Real>
std::pair<Real, Real> projector_condition_residuals(Real kappa, Real alpha, Real beta)
{
    using std::abs;
    return {abs(alpha * alpha + beta * beta - alpha), abs(beta * (Real(2) * alpha - kappa * beta - Real(1)))};
}

/// All real (alpha, beta) making alpha + beta sigma.X idempotent, for generators with
/// [X_a, X_b] = i kappa eps_abc X_c and X.X = 1. The beta != 0 branch reduces to
/// beta^2 (4 + kappa^2) = 1. Order: nontrivial plus, nontrivial minus, (0,0), (1,0).
template <typename Real = double>
std::vector<ProjectorParams<Real>> solve_projector_params(Real kappa)
{
    using std::sqrt;
    if (!(kappa > Real(0))) throw DomainError("solve_projector_params: kappa must be positive");

    std::vector<ProjectorParams<Real>> out;
    const Real root = Real(1) / sqrt(Real(4) + kappa * kappa);
    for (Real beta : {root, -root}) out.push_back({(Real(1) + beta * kappa) / Real(2), beta, false});
    out.push_back({Real(0), Real(0), true});
    out.push_back({Real(1), Real(0), true});

    const Real tol = Real(64) * std::numeric_limits<Real>::epsilon();
    for (const auto& p : out) {
        auto [scalar, vector] = projector_condition_residuals(kappa, p.alpha, p.beta);
        if (scalar > tol || vector > tol)
            throw InternalConsistencyError("solve_projector_params: branch fails its defining equations");
    }
    return out;
}

/// alpha I_{2N} + beta sum_a sigma_a (x) X_a, without any idempotency check.
template <typename Real>
ComplexArray<Real> assemble_projector(const FuzzyCoordinates<Real>& coords, Real alpha, Real beta)
{
    ComplexArray<Real> p = alpha * identity<Real>(2 * coords.dimension());
    for (int a = 0; a < 3; ++a) p += beta * kron(pauli<Real>(a), coords.X[a]);
    return p;
}

template <typename Derived>
auto idempotency_residual(const Eigen::MatrixBase<Derived>& p)
{
    return max_abs((p * p - p).eval());
}

template <typename Derived>
auto adjoint_residual(const Eigen::MatrixBase<Derived>& p)
{
    return max_abs((p - p.adjoint()).eval());
}

/// Ch_0: module trace followed by the normalized A_N trace, i.e. tr(p) / N.
template <typename Derived>
auto rank_character(const Eigen::MatrixBase<Derived>& p, Index algebra_dim)
{
    require_square(p, "rank_character");
    if (p.rows() % algebra_dim != 0) throw ShapeError("rank_character: not a multiple of N");
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    return std::real(p.trace()) / Real(algebra_dim);
}

template <typename Real = double>
struct FuzzyProjector {
    SpinLabel spin;
    Sign sign;
    Real alpha;
    Real beta;
    ComplexArray<Real> realization;  // 2N x 2N

    Real ch0() const { return rank_character(realization, spin.dimension()); }
};

/// Invariant tolerance for constructed projectors.
template <typename Real>
inline constexpr Real projector_tolerance = Real(1e-12);

template <typename Real>
FuzzyProjector<Real> build_fuzzy_projector(const FuzzyCoordinates<Real>& coords, Sign sign)
{
    using std::abs;
    const auto params = solve_projector_params<Real>(coords.kappa());
    const auto& branch = params[sign == Sign::plus ? 0 : 1];
    FuzzyProjector<Real> p{coords.spin, sign, branch.alpha, branch.beta,
                           assemble_projector(coords, branch.alpha, branch.beta)};

    const Real n = Real(coords.dimension());
    const Real s = Real(sign_value(sign));
    if (idempotency_residual(p.realization) > projector_tolerance<Real>)
        throw InternalConsistencyError("fuzzy projector is not idempotent");
    if (adjoint_residual(p.realization) > projector_tolerance<Real>)
        throw InternalConsistencyError("fuzzy projector is not self-adjoint");
    if (abs(p.ch0() - (Real(1) + s / n)) > projector_tolerance<Real>)
        throw InternalConsistencyError("fuzzy projector has the wrong rank character");
    // sqrt(4 + kappa^2) = N kappa, so beta kappa = sign / N.
    if (abs(p.beta * coords.kappa() - s / n) > Real(1e-13))
        throw InternalConsistencyError("fuzzy projector: beta kappa differs from sign / N");
    return p;
}

/// Entrywise transpose of the 2N x 2N realization.
template <typename Real>
ComplexArray<Real> transposed(const FuzzyProjector<Real>& p)
{
    return p.realization.transpose();
}

/// A point of the unit sphere.
template <typename Real = double>
class PointOnSphere {
public:
    PointOnSphere(Real x1, Real x2, Real x3) : x_{x1, x2, x3}
    {
        using std::abs;
        using std::sqrt;
        if (abs(sqrt(x1 * x1 + x2 * x2 + x3 * x3) - Real(1)) > Real(1e-10))
            throw DomainError("point does not lie on the unit sphere");
    }

    static PointOnSphere from_angles(Real theta, Real phi)
    {
        using std::cos;
        using std::sin;
        return PointOnSphere(sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta));
    }

    Real operator[](int a) const { return x_[a]; }
    const std::array<Real, 3>& coords() const { return x_; }

private:
    std::array<Real, 3> x_;
};

/// (1 + sigma_a v_a) / 2 without the unit-norm check; v = x gives the Bott projector,
/// and with unit = false it gives the derivative sigma_a dv_a / 2.
template <typename Real>
ComplexArray<Real> pauli_combination(const std::array<Real, 3>& v, bool unit)
{
    ComplexArray<Real> out = ComplexArray<Real>::Zero(2, 2);
    if (unit) out = identity<Real>(2);
    for (int a = 0; a < 3; ++a) out += v[a] * pauli<Real>(a);
    return out / Real(2);
}

/// Bott projector (1 + sigma_a x_a) / 2.
template <typename Real>
ComplexArray<Real> bott_projector(const PointOnSphere<Real>& x)
{
    return pauli_combination(x.coords(), true);
}

inline constexpr int max_tensor_power = 12;

/// k-fold Kronecker power of the Bott projector, 2^k x 2^k.
template <typename Real>
ComplexArray<Real> tensor_power_projector(const PointOnSphere<Real>& x, int k)
{
    if (k < 1 || k > max_tensor_power) throw DomainError("tensor power must lie in 1..12");
    const ComplexArray<Real> p = bott_projector(x);
    ComplexArray<Real> out = p;
    for (int i = 1; i < k; ++i) out = kron(out, p);
    return out;
}

/// Curvature of the Grassmann connection, p (dp) ^ (dp), as a matrix-valued two-form.
template <typename Real, typename Derived>
GradedForm<Real> curvature(const CalculusContext<Real>& ctx, const Eigen::MatrixBase<Derived>& p)
{
    require_square(p, "curvature");
    if (idempotency_residual(p) > Real(1e-10)) throw PreconditionError("curvature: input is not idempotent");
    const auto dp = d0(ctx, p);
    return left_multiply(p, wedge(dp, dp));
}

}  // namespace fuzzy
