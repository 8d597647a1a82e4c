#ifndef OPA_ORACLE_HPP
#define OPA_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "opa/linalg.hpp"
#include "opa/polynomials.hpp"
#include "opa/solution.hpp"
#include "opa/weights.hpp"

namespace opa {

// Brute-force least squares in the monomial basis. Deliberately shares no
// code with the Gram/Hankel pipelines beyond weights and the linear solver:
// it is the independent check, not the production path. O(n^2 d) assembly.

namespace detail {

// G_{j,k} = <z^k f, z^j f>_omega = sum_m omega_m fhat(m-k) conj(fhat(m-j))
template <class R>
Matrix<R> normal_matrix(const WeightSequence& omega, const Polynomial<R>& f, std::size_t n) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    Matrix<R> G(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = j; k <= n; ++k) {
            Complex<R> s{};
            const std::size_t m_lo = std::max(j, k);
            const std::size_t m_hi = std::min(j, k) + d;
            for (std::size_t m = m_lo; m <= m_hi; ++m)
                s += Complex<R>(omega.weight<R>(m)) * f.coeff(m - k) * conj(f.coeff(m - j));
            G(j, k) = s;
            if (k != j) G(k, j) = conj(s);
        }
    return G;
}

} // namespace detail

// Projection of g onto P_n * f by normal equations: rhs_j = <g, z^j f>_omega.
// Returns the residual g - q f and the squared distance; the kernel-space
// vector A is not produced by this route and is left empty.
template <class R>
ProjectionResult<R> oracle_project(const WeightSequence& omega, const Polynomial<R>& f,
                                   const Polynomial<R>& g, std::size_t n) {
    if (f.is_zero() || norm_sq(f.coeff(0)) == R(0))
        throw ZeroAtOrigin("oracle requires f(0) != 0");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (g.degree() > static_cast<int>(n + d))
        throw InvalidArgument("oracle projection requires deg(g) <= n + deg(f)");

    const Matrix<R> G = detail::normal_matrix(omega, f, n);
    std::vector<Complex<R>> rhs(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Complex<R> s{};
        const std::size_t m_hi = std::min<std::size_t>(g.degree() < 0 ? 0 : g.degree(), j + d);
        for (std::size_t m = j; m <= m_hi && g.degree() >= 0; ++m)
            s += Complex<R>(omega.weight<R>(m)) * g.coeff(m) * conj(f.coeff(m - j));
        rhs[j] = s;
    }
    const auto q = solve(G, std::span<const Complex<R>>(rhs));

    ProjectionResult<R> out;
    out.residual.assign(n + d + 1, Complex<R>{});
    for (std::size_t k = 0; k <= n + d; ++k) out.residual[k] = g.coeff(k);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; m <= d; ++m) out.residual[k + m] -= q[k] * f.coeff(m);

    R dist(0);
    for (std::size_t k = 0; k <= n + d; ++k)
        dist += omega.weight<R>(k) * norm_sq(out.residual[k]);
    out.distance_sq = dist;
    return out;
}

// Optimal approximant by direct minimization of ||1 - p f||_omega.
template <class R>
ApproximantSolution<R> oracle_solve(const WeightSequence& omega, const Polynomial<R>& f,
                                    std::size_t n) {
    ProjectionResult<R> proj = oracle_project(omega, f, Polynomial<R>::one(), n);

    const std::size_t d = static_cast<std::size_t>(f.degree());
    ApproximantSolution<R> sol;
    sol.kind = ApproximantSolution<R>::Kind::normal_equations;
    sol.n = n;
    sol.d = d;
    sol.omega = omega;
    sol.residual = std::move(proj.residual);
    sol.distance_sq = proj.distance_sq;
    sol.pn = recover_pn(std::span<const Complex<R>>(sol.residual), f, n);
    return sol;
}

// <h1, h2>_omega over the common coefficient range.
template <class R>
Complex<R> weighted_inner(const WeightSequence& omega, std::span<const Complex<R>> h1,
                          std::span<const Complex<R>> h2) {
    Complex<R> s{};
    const std::size_t len = std::min(h1.size(), h2.size());
    for (std::size_t k = 0; k < len; ++k)
        s += Complex<R>(omega.weight<R>(k)) * h1[k] * conj(h2[k]);
    return s;
}

// Largest normalized violation of <residual, z^j f>_omega = 0 for j = 0..n:
// the defining orthogonality of the projection, usable against any pipeline.
template <class R>
double orthogonality_defect(const WeightSequence& omega, const Polynomial<R>& f,
                            std::span<const Complex<R>> residual, std::size_t n) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const double res_norm =
        std::sqrt(std::max(0.0, to_double(weighted_inner(omega, residual, residual).re)));
    double worst = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Complex<R>> zjf(j + d + 1);
        for (std::size_t m = 0; m <= d; ++m) zjf[j + m] = f.coeff(m);
        const Complex<R> ip =
            weighted_inner(omega, residual, std::span<const Complex<R>>(zjf));
        const double f_norm =
            std::sqrt(std::max(0.0, to_double(weighted_inner(omega,
                                                             std::span<const Complex<R>>(zjf),
                                                             std::span<const Complex<R>>(zjf))
                                                  .re)));
        const double denom = std::max(1e-300, res_norm * f_norm);
        worst = std::max(worst, abs_d(ip) / denom);
    }
    return worst;
}

// Exact-orthogonality variant for the rational backend.
template <class R>
bool orthogonality_exact(const WeightSequence& omega, const Polynomial<R>& f,
                         std::span<const Complex<R>> residual, std::size_t n) {
    static_assert(scalar_traits<R>::exact);
    const std::size_t d = static_cast<std::size_t>(f.degree());
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Complex<R>> zjf(j + d + 1);
        for (std::size_t m = 0; m <= d; ++m) zjf[j + m] = f.coeff(m);
        if (norm_sq(weighted_inner(omega, residual, std::span<const Complex<R>>(zjf))) != R(0))
            return false;
    }
    return true;
}

} // namespace opa

#endif
