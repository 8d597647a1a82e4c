#ifndef OPA_GRAM_HPP
#define OPA_GRAM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "opa/linalg.hpp"
#include "opa/polynomials.hpp"
#include "opa/solution.hpp"
#include "opa/weights.hpp"

namespace opa {

// The d x d system E with e_{l,m} = k_{n+d}(z_l, z_m): a Gram matrix of the
// truncated kernels at the zeros of f. Hermitian positive definite for
// distinct nonzero z_i.
template <class R>
struct GramSystem {
    std::size_t n = 0;
    WeightSequence omega = WeightSequence::power(0.0);
    ZeroSet zeros;
    Matrix<R> E;

    std::size_t d() const { return zeros.size(); }
};

template <class R>
GramSystem<R> build_gram(const WeightSequence& omega, const ZeroSet& zeros, std::size_t n) {
    GramSystem<R> sys;
    sys.n = n;
    sys.omega = omega;
    sys.zeros = zeros;
    const std::size_t d = zeros.size();
    const auto zr = zeros.as<R>();
    sys.E = Matrix<R>(d, d);
    const std::size_t m = n + d;
    for (std::size_t l = 0; l < d; ++l) {
        sys.E(l, l) = omega.kernel_partial_sum<R>(m, zr[l], zr[l]);
        for (std::size_t c = l + 1; c < d; ++c) {
            sys.E(l, c) = omega.kernel_partial_sum<R>(m, zr[l], zr[c]);
            sys.E(c, l) = conj(sys.E(l, c));
        }
    }
    return sys;
}

namespace detail {

// g_Z . E^{-1} . g_Z^t is real; drift of the imaginary part past tolerance
// signals exhausted precision rather than a value to truncate silently.
template <class R>
R real_checked(const Complex<R>& v, const char* what) {
    const double mag = std::fabs(to_double(v.re));
    if (std::fabs(to_double(v.im)) > 1e-10 * (1.0 + mag))
        throw PrecisionExhausted(std::string(what) +
                                 ": imaginary part exceeds tolerance, increase precision");
    return v.re;
}

} // namespace detail

// Projects g (deg g <= d, n >= deg g) onto P_n * f via E A^t = g_Z^t.
// residual[k] = (1/omega_k) sum_i A_i conj(z_i)^k, distance^2 = Re(conj(g_Z) . A).
template <class R>
ProjectionResult<R> project(const GramSystem<R>& sys, const Polynomial<R>& g) {
    const std::size_t d = sys.d();
    if (g.degree() > static_cast<int>(d))
        throw InvalidArgument("projection requires deg(g) <= deg(f)");
    if (static_cast<int>(sys.n) < g.degree())
        throw InvalidArgument("projection requires n >= deg(g)");

    const ZeroSet& zeros = sys.zeros;
    const WeightSequence& omega = sys.omega;
    const auto zr = zeros.as<R>();
    std::vector<Complex<R>> gz(d);
    for (std::size_t i = 0; i < d; ++i) gz[i] = g.eval(zr[i]);

    ProjectionResult<R> out;
    out.A = solve(sys.E, std::span<const Complex<R>>(gz));

    const std::size_t m = sys.n + d;
    out.residual.assign(m + 1, Complex<R>{});
    std::vector<Complex<R>> zbar_pow(d, Complex<R>(R(1)));
    for (std::size_t k = 0; k <= m; ++k) {
        Complex<R> s{};
        for (std::size_t i = 0; i < d; ++i) {
            s += out.A[i] * zbar_pow[i];
            zbar_pow[i] *= conj(zr[i]);
        }
        out.residual[k] = s / Complex<R>(omega.weight<R>(k));
    }

    Complex<R> dist{};
    for (std::size_t i = 0; i < d; ++i) dist += conj(gz[i]) * out.A[i];
    out.distance_sq = detail::real_checked(dist, "projection distance");
    return out;
}

// Optimal approximant to 1/f, f = leading * prod (z - z_i): projection of 1,
// plus the p_n coefficients recovered from the residual.
template <class R>
ApproximantSolution<R> solve_optimal(const GramSystem<R>& sys,
                                     const Complex<R>& leading = Complex<R>(R(1)),
                                     double tol = 1e-9) {
    ProjectionResult<R> proj = project(sys, Polynomial<R>::one());

    ApproximantSolution<R> sol;
    sol.kind = ApproximantSolution<R>::Kind::simple_zeros;
    sol.n = sys.n;
    sol.d = sys.d();
    sol.omega = sys.omega;
    sol.zeros = sys.zeros;
    sol.A = std::move(proj.A);
    sol.residual = std::move(proj.residual);
    sol.distance_sq = proj.distance_sq;

    const ZeroSet& zeros = sys.zeros;
    const auto zr = zeros.as<R>();
    const Polynomial<R> f =
        Polynomial<R>::from_zeros(std::span<const Complex<R>>(zr), leading);
    sol.pn = recover_pn(std::span<const Complex<R>>(sol.residual), f, sys.n, tol);
    return sol;
}

// dist^2(1, [f]) for zeros strictly inside the disc: v_0 K_Z^{-1} v_0^t with
// K_Z(l,m) = k(z_l, z_m), the full-kernel Gramian.
inline double interior_distance(const WeightSequence& omega, const ZeroSet& zeros,
                                double tol) {
    for (const auto& z : zeros.values())
        if (std::abs(z) >= 1.0)
            throw NotInterior("interior distance requires all zeros inside the unit disc");
    const std::size_t d = zeros.size();
    Matrix<double> K(d, d);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) {
            const Complex<double> zl = Complex<double>::from(zeros[l]);
            const Complex<double> zm = Complex<double>::from(zeros[m]);
            K(l, m) = omega.full_kernel(zl, zm, tol).value;
        }
    std::vector<Complex<double>> ones(d, Complex<double>(1.0));
    const auto x = solve(K, std::span<const Complex<double>>(ones));
    Complex<double> v{};
    for (const auto& xi : x) v += xi;
    return detail::real_checked(v, "interior distance");
}

// |(E^{-1})_{i,j}| * sum_{k<=n} 1/omega_k for zeros on the unit circle: the
// normalized inverse entries that stay bounded in n.
template <class R>
Matrix<double> inverse_entry_bounds(const GramSystem<R>& sys) {
    if (!sys.zeros.all_unimodular())
        throw NotUnimodular("all zeros must lie on the unit circle");
    const std::size_t d = sys.d();
    const WeightSequence& omega = sys.omega;
    const Matrix<R> inv = inverse(sys.E);
    const double s = to_double(omega.reciprocal_weight_sum<R>(sys.n));
    Matrix<double> out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) = Complex<double>(abs_d(inv(i, j)) * s);
    return out;
}

} // namespace opa

#endif
