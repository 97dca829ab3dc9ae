#pragma once

#include <array>
#include <bit>
#include <vector>

#include "fuzzy/linalg.hpp"
#include "fuzzy/spin.hpp"

namespace fuzzy {

// Theta multi-indices are bitmasks over axes {0,1,2}. Components of a degree-q form
// are stored in lexicographic order of the index sets:
//   q=0: ()   q=1: (1),(2),(3)   q=2: (1,2),(1,3),(2,3)   q=3: (1,2,3)
namespace detail {

inline constexpr std::array<std::array<unsigned, 3>, 4> component_masks{{
    {0b000u, 0u, 0u},
    {0b001u, 0b010u, 0b100u},
    {0b011u, 0b101u, 0b110u},
    {0b111u, 0u, 0u},
}};

constexpr int component_count(int degree)
{
    return (degree == 0 || degree == 3) ? 1 : 3;
}

constexpr int component_of(unsigned mask)
{
    const int degree = std::popcount(mask);
    for (int i = 0; i < component_count(degree); ++i)
        if (component_masks[degree][i] == mask) return i;
    return -1;
}

/// Sign of the permutation sorting the concatenation (left indices, right indices).
constexpr int merge_sign(unsigned left, unsigned right)
{
    int inversions = 0;
    for (int l = 0; l < 3; ++l)
        if (left & (1u << l))
            for (int r = 0; r < l; ++r)
                if (right & (1u << r)) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// A differential form of degree 0..3 in the theta basis. Each coefficient is an
/// (n N) x (n N) array: module rank n = 1 for A_N-valued forms, n = 2 for forms
/// valued in M_2(A_N). The module index is the outer Kronecker factor.
template <typename Real = double>
class GradedForm {
public:
    using Array = ComplexArray<Real>;

    GradedForm(int degree, Index module_rank, Index algebra_dim, std::vector<Array> components)
        : degree_(degree), module_rank_(module_rank), algebra_dim_(algebra_dim),
          components_(std::move(components))
    {
        if (degree < 0 || degree > 3) throw DegreeError("form degree must lie in 0..3");
        if (module_rank < 1 || algebra_dim < 1) throw ShapeError("form: non-positive dimensions");
        if (static_cast<int>(components_.size()) != detail::component_count(degree))
            throw ShapeError("form: component count does not match degree");
        for (const auto& c : components_)
            if (c.rows() != dim() || c.cols() != dim())
                throw ShapeError("form: coefficient has wrong dimension");
    }

    static GradedForm zero(int degree, Index module_rank, Index algebra_dim)
    {
        const Index n = module_rank * algebra_dim;
        return GradedForm(degree, module_rank, algebra_dim,
                          std::vector<Array>(detail::component_count(degree), Array::Zero(n, n)));
    }

    /// coefficient * theta^{I}, I given by its component slot.
    static GradedForm monomial(int degree, int slot, Array coefficient, Index module_rank = 1)
    {
        const Index n = coefficient.rows();
        if (n % module_rank != 0) throw ShapeError("form: coefficient not divisible by module rank");
        auto form = zero(degree, module_rank, n / module_rank);
        if (slot < 0 || slot >= detail::component_count(degree))
            throw DomainError("form: component slot out of range");
        form.components_[slot] = std::move(coefficient);
        return form;
    }

    int degree() const { return degree_; }
    Index module_rank() const { return module_rank_; }
    Index algebra_dim() const { return algebra_dim_; }
    Index dim() const { return module_rank_ * algebra_dim_; }
    int size() const { return static_cast<int>(components_.size()); }

    const Array& operator[](int slot) const { return components_[slot]; }
    const std::vector<Array>& components() const { return components_; }

    /// Coefficient at an ordered index set given as a bitmask over axes.
    const Array& at_mask(unsigned mask) const { return components_[detail::component_of(mask)]; }

    template <typename F>
    GradedForm transform(F&& f) const
    {
        std::vector<Array> out;
        out.reserve(components_.size());
        for (const auto& c : components_) out.push_back(f(c));
        return GradedForm(degree_, module_rank_, algebra_dim_, std::move(out));
    }

    GradedForm& operator+=(const GradedForm& other)
    {
        require_compatible(other);
        for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
        return *this;
    }

    GradedForm& operator-=(const GradedForm& other)
    {
        require_compatible(other);
        for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
        return *this;
    }

    GradedForm& operator*=(Complex<Real> s)
    {
        for (auto& c : components_) c *= s;
        return *this;
    }

    friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
    friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
    friend GradedForm operator-(GradedForm a) { return a *= Complex<Real>(-1); }
    friend GradedForm operator*(Complex<Real> s, GradedForm a) { return a *= s; }
    friend GradedForm operator*(GradedForm a, Complex<Real> s) { return a *= s; }

    void require_compatible(const GradedForm& other) const
    {
        if (degree_ != other.degree_) throw DegreeError("form: degree mismatch");
        if (module_rank_ != other.module_rank_ || algebra_dim_ != other.algebra_dim_)
            throw ShapeError("form: rank or algebra dimension mismatch");
    }

private:
    int degree_;
    Index module_rank_;
    Index algebra_dim_;
    std::vector<Array> components_;
};

/// A * eta, coefficientwise.
template <typename Real, typename Derived>
GradedForm<Real> left_multiply(const Eigen::MatrixBase<Derived>& a, const GradedForm<Real>& form)
{
    if (a.rows() != form.dim() || a.cols() != form.dim()) throw ShapeError("left_multiply: dimension mismatch");
    return form.transform([&](const auto& c) -> ComplexArray<Real> { return a * c; });
}

/// eta * A, coefficientwise.
template <typename Real, typename Derived>
GradedForm<Real> right_multiply(const GradedForm<Real>& form, const Eigen::MatrixBase<Derived>& a)
{
    if (a.rows() != form.dim() || a.cols() != form.dim()) throw ShapeError("right_multiply: dimension mismatch");
    return form.transform([&](const auto& c) -> ComplexArray<Real> { return c * a; });
}

/// Sum over components of Hilbert-Schmidt inner products.
template <typename Real>
Complex<Real> inner(const GradedForm<Real>& a, const GradedForm<Real>& b)
{
    a.require_compatible(b);
    Complex<Real> sum(0);
    for (int i = 0; i < a.size(); ++i) sum += hs_inner(a[i], b[i]);
    return sum;
}

template <typename Real>
Real norm(const GradedForm<Real>& a)
{
    using std::sqrt;
    return sqrt(std::real(inner(a, a)));
}

template <typename Real>
Real max_abs(const GradedForm<Real>& a)
{
    Real worst = 0;
    for (const auto& c : a.components()) worst = std::max(worst, max_abs(c));
    return worst;
}

/// Wedge product. Coefficients multiply in order; theta factors anticommute.
template <typename Real>
GradedForm<Real> wedge(const GradedForm<Real>& a, const GradedForm<Real>& b)
{
    const int degree = a.degree() + b.degree();
    if (degree > 3) throw DegreeError("wedge: product degree exceeds 3");
    if (a.module_rank() != b.module_rank() || a.algebra_dim() != b.algebra_dim())
        throw ShapeError("wedge: rank or algebra dimension mismatch");

    auto out = GradedForm<Real>::zero(degree, a.module_rank(), a.algebra_dim());
    std::vector<ComplexArray<Real>> acc = out.components();
    for (int i = 0; i < a.size(); ++i) {
        const unsigned left = detail::component_masks[a.degree()][i];
        for (int j = 0; j < b.size(); ++j) {
            const unsigned right = detail::component_masks[b.degree()][j];
            if (left & right) continue;
            const int slot = detail::component_of(left | right);
            const Real sign = Real(detail::merge_sign(left, right));
            acc[slot].noalias() += sign * (a[i] * b[j]);
        }
    }
    return GradedForm<Real>(degree, a.module_rank(), a.algebra_dim(), std::move(acc));
}

/// The three derivations e_a = (1/kappa) ad X_a over A_N.
template <typename Real = double>
class CalculusContext {
public:
    explicit CalculusContext(FuzzyCoordinates<Real> coords) : coords_(std::move(coords)) {}

    const FuzzyCoordinates<Real>& coordinates() const { return coords_; }
    const SpinLabel& spin() const { return coords_.spin; }
    Index algebra_dim() const { return coords_.dimension(); }
    Real kappa() const { return coords_.kappa(); }

    /// e_a applied to every N x N block of an (n N) x (n N) array.
    template <typename Derived>
    ComplexArray<Real> apply(int axis, const Eigen::MatrixBase<Derived>& f) const
    {
        if (axis < 0 || axis > 2) throw DomainError("derivation axis must be 0, 1 or 2");
        const Index n = algebra_dim();
        if (f.rows() != f.cols() || f.rows() == 0 || f.rows() % n != 0)
            throw ShapeError("derivation: argument is not a square multiple of the algebra dimension");
        const auto& x = coords_.X[axis];
        const Index blocks = f.rows() / n;
        const Real inv_kappa = Real(1) / kappa();
        ComplexArray<Real> out(f.rows(), f.cols());
        for (Index r = 0; r < blocks; ++r)
            for (Index c = 0; c < blocks; ++c) {
                const auto block = f.block(r * n, c * n, n, n);
                out.block(r * n, c * n, n, n) = inv_kappa * (x * block - block * x);
            }
        return out;
    }

private:
    FuzzyCoordinates<Real> coords_;
};

template <typename Real>
CalculusContext<Real> make_context(const SpinLabel& spin)
{
    return CalculusContext<Real>(fuzzy_coordinates<Real>(spin));
}

/// e_a(f) = (1/kappa)(X_a f - f X_a) for f in A_N. axis is 0-based.
template <typename Real, typename Derived>
ComplexArray<Real> derive(const CalculusContext<Real>& ctx, int axis, const Eigen::MatrixBase<Derived>& f)
{
    if (f.rows() != ctx.algebra_dim() || f.cols() != ctx.algebra_dim())
        throw ShapeError("derive: element is not N x N");
    return ctx.apply(axis, f);
}

/// df = e_a(f) theta^a. f may be matrix-valued (n N x n N); the module rank is inferred.
template <typename Real, typename Derived>
GradedForm<Real> d0(const CalculusContext<Real>& ctx, const Eigen::MatrixBase<Derived>& f)
{
    std::vector<ComplexArray<Real>> parts;
    parts.reserve(3);
    for (int a = 0; a < 3; ++a) parts.push_back(ctx.apply(a, f));
    return GradedForm<Real>(1, f.rows() / ctx.algebra_dim(), ctx.algebra_dim(), std::move(parts));
}

/// Exterior derivative on one-forms:
///   (d eta)_{ab} = e_a(eta_b) - e_b(eta_a) - eta([e_a, e_b]),  [e_a, e_b] = i eps_abc e_c.
template <typename Real>
GradedForm<Real> d1(const CalculusContext<Real>& ctx, const GradedForm<Real>& eta)
{
    if (eta.degree() != 1) throw DegreeError("d1: expected a one-form");
    if (eta.algebra_dim() != ctx.algebra_dim()) throw ShapeError("d1: algebra dimension mismatch");
    std::vector<ComplexArray<Real>> parts;
    parts.reserve(3);
    for (unsigned mask : detail::component_masks[2]) {
        const int a = std::countr_zero(mask);
        const int b = 31 - std::countl_zero(mask);
        const int c = 3 - a - b;
        ComplexArray<Real> part = ctx.apply(a, eta[b]) - ctx.apply(b, eta[a]);
        part -= (Real(levi_civita(a, b, c)) * imag_unit<Real>) * eta[c];
        parts.push_back(std::move(part));
    }
    return GradedForm<Real>(2, eta.module_rank(), eta.algebra_dim(), std::move(parts));
}

/// Partial trace over the module factor: n = 1 is the identity.
template <typename Real>
GradedForm<Real> module_trace(const GradedForm<Real>& eta)
{
    const Index n = eta.algebra_dim();
    const Index rank = eta.module_rank();
    std::vector<ComplexArray<Real>> parts;
    parts.reserve(eta.size());
    for (const auto& c : eta.components()) {
        ComplexArray<Real> t = ComplexArray<Real>::Zero(n, n);
        for (Index i = 0; i < rank; ++i) t += c.block(i * n, i * n, n, n);
        parts.push_back(std::move(t));
    }
    return GradedForm<Real>(eta.degree(), 1, n, std::move(parts));
}

}  // namespace fuzzy
