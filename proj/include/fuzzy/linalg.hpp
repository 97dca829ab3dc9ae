#pragma once

#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "fuzzy/errors.hpp"

namespace fuzzy {

template <typename Real>
using Complex = std::complex<Real>;

/// Dense complex matrix; carrier for algebra elements and matrix-valued form coefficients.
template <typename Real = double>
using ComplexArray = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

template <typename Real>
inline constexpr Complex<Real> imag_unit{Real(0), Real(1)};

template <typename Real>
inline constexpr Real pi_v = Real(3.141592653589793238462643383279502884L);

/// Levi-Civita symbol on 0-based axes.
constexpr int levi_civita(int a, int b, int c)
{
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what)
{
    if (a.rows() != a.cols() || a.rows() == 0)
        throw ShapeError(std::string(what) + ": expected a non-empty square array");
}

/// Kronecker product. The left operand indexes the outer (block) factor.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    using Scalar = typename DA::Scalar;
    static_assert(std::is_same_v<Scalar, typename DB::Scalar>, "kron: mixed scalar types");
    using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    return Result(Eigen::kroneckerProduct(a.derived().eval(), b.derived().eval()));
}

/// AB - BA.
template <typename DA, typename DB>
auto commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) throw ShapeError("commutator: dimension mismatch");
    using Result = Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Result out = a * b;
    out.noalias() -= b * a;
    return out;
}

/// (1/N) tr A.
template <typename Derived>
typename Derived::Scalar normalized_trace(const Eigen::MatrixBase<Derived>& a)
{
    require_square(a, "normalized_trace");
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    return a.trace() / Real(a.rows());
}

/// Hilbert-Schmidt inner product tr(A^dagger B).
template <typename DA, typename DB>
typename DA::Scalar hs_inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("hs_inner: dimension mismatch");
    return a.conjugate().cwiseProduct(b).sum();
}

/// Largest entry modulus; the residual norm used throughout.
template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& a)
{
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (a.size() == 0) return Real(0);
    return a.cwiseAbs().maxCoeff();
}

/// Pauli matrix sigma_{axis+1}, axis in 0..2.
template <typename Real = double>
ComplexArray<Real> pauli(int axis)
{
    using C = Complex<Real>;
    ComplexArray<Real> s(2, 2);
    switch (axis) {
    case 0: s << C(0), C(1), C(1), C(0); break;
    case 1: s << C(0), -imag_unit<Real>, imag_unit<Real>, C(0); break;
    case 2: s << C(1), C(0), C(0), C(-1); break;
    default: throw DomainError("pauli: axis must be 0, 1 or 2");
    }
    return s;
}

template <typename Real = double>
ComplexArray<Real> identity(Index n)
{
    return ComplexArray<Real>::Identity(n, n);
}

}  // namespace fuzzy
