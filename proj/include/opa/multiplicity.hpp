#ifndef OPA_MULTIPLICITY_HPP
#define OPA_MULTIPLICITY_HPP

#include <cstddef>
#include <vector>

#include "opa/linalg.hpp"
#include "opa/solution.hpp"
#include "opa/weights.hpp"

namespace opa {

// Moment system for f = (z-1)^d: E_{i,j} = sum_{k=0}^{n+d} k^{i+j-2}/omega_k,
// a Hankel matrix (and a Gram matrix in the reciprocal-weight space, hence
// symmetric positive definite). The k=0 term contributes only to E_{1,1}
// (convention 0^0 = 1); all positive powers of k vanish at k=0.
template <class R>
struct HankelSystem {
    std::size_t d = 1;
    std::size_t n = 0;
    WeightSequence omega = WeightSequence::power(0.0);
    std::vector<R> moments; // moments[p] = sum_k k^p / omega_k, p = 0..2d-2
    Matrix<R> E;
};

template <class R>
HankelSystem<R> build_hankel(const WeightSequence& omega, std::size_t d, std::size_t n) {
    if (d < 1)
        throw InvalidArgument("multiplicity d must be >= 1");
    HankelSystem<R> sys;
    sys.d = d;
    sys.n = n;
    sys.omega = omega;

    const std::size_t pmax = 2 * d - 2;
    std::vector<KahanSum<R>> acc(pmax + 1);
    if constexpr (std::is_same_v<R, double>)
        for (auto& a : acc) a.compensate = n + d > 1000;
    for (std::size_t k = 0; k <= n + d; ++k) {
        // cur = k^p / omega_k, starting at p = 0 (k^0 = 1, including k = 0)
        R cur = R(1) / omega.weight<R>(k);
        const R kr(static_cast<long>(k));
        for (std::size_t p = 0; p <= pmax; ++p) {
            acc[p].add(cur);
            cur *= kr;
        }
    }
    sys.moments.reserve(pmax + 1);
    for (auto& a : acc) sys.moments.push_back(a.sum);

    sys.E = Matrix<R>(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sys.E(i, j) = Complex<R>(sys.moments[i + j]);
    return sys;
}

// Solves E A^t = (1, 0, ..., 0)^t and assembles the residual coefficients
//   d_{k,n} = (A_1 + A_2 k + ... + A_d k^{d-1}) / omega_k,   k = 0..n+d.
// Verifies the derivative conditions r(1) = 1, r^{(s)}(1) = 0 (s = 1..d-1)
// and the identity distance^2 = A_1 = (E^{-1})_{1,1}.
template <class R>
ApproximantSolution<R> solve_multiplicity(const HankelSystem<R>& sys, double tol = 1e-9) {
    const std::size_t d = sys.d, n = sys.n;
    std::vector<Complex<R>> rhs(d);
    rhs[0] = Complex<R>(R(1));
    std::vector<Complex<R>> A;
    try {
        A = solve(sys.E, std::span<const Complex<R>>(rhs));
    } catch (const SingularMatrix& e) {
        // E is provably invertible; a singular solve means the backend ran out
        throw SingularMatrix(std::string("Hankel solve failed (precision exhausted): ") +
                                 e.what(),
                             e.condition_estimate);
    }

    ApproximantSolution<R> sol;
    sol.kind = ApproximantSolution<R>::Kind::multiplicity_at_one;
    sol.n = n;
    sol.d = d;
    sol.omega = sys.omega;
    sol.A = A;

    const WeightSequence& omega = sys.omega;
    sol.residual.assign(n + d + 1, Complex<R>{});
    for (std::size_t k = 0; k <= n + d; ++k) {
        // Horner in k over A_d .. A_1
        Complex<R> v{};
        const Complex<R> kr{R(static_cast<long>(k))};
        for (std::size_t j = d; j-- > 0;) v = v * kr + A[j];
        sol.residual[k] = v / Complex<R>(omega.weight<R>(k));
    }

    // r(1) = 1 and vanishing derivatives up to order d-1 at z = 1
    for (std::size_t s = 0; s < d; ++s) {
        Complex<R> deriv{};
        for (std::size_t k = s; k <= n + d; ++k) {
            R falling(1); // k (k-1) ... (k-s+1)
            for (std::size_t t = 0; t < s; ++t) falling *= R(static_cast<long>(k - t));
            deriv += sol.residual[k] * Complex<R>(falling);
        }
        const Complex<R> want = s == 0 ? Complex<R>(R(1)) : Complex<R>{};
        const Complex<R> diff = deriv - want;
        if constexpr (scalar_traits<R>::exact) {
            if (norm_sq(diff) != R(0))
                throw PrecisionExhausted("derivative condition violated exactly (s = " +
                                         std::to_string(s) + ")");
        } else {
            if (abs_d(diff) > tol * (1.0 + abs_d(deriv)))
                throw PrecisionExhausted("derivative condition at 1 drifted past tolerance (s = " +
                                         std::to_string(s) + ")");
        }
    }

    sol.distance_sq = detail::real_checked(A[0], "multiplicity distance");

    // dist^2 = (E^{-1})_{1,1} via the Cramer route as an independent identity
    const Complex<R> e_inv_11 = inverse_entry(sys.E, 0, 0);
    const Complex<R> gap = e_inv_11 - A[0];
    if constexpr (scalar_traits<R>::exact) {
        if (norm_sq(gap) != R(0))
            throw PrecisionExhausted("A_1 != (E^{-1})_{1,1} in exact arithmetic");
    } else {
        if (abs_d(gap) > tol * (1.0 + abs_d(e_inv_11)))
            throw PrecisionExhausted("A_1 and (E^{-1})_{1,1} disagree past tolerance");
    }
    return sol;
}

// B(d, s) = (d-1)! / (s (s+1) ... (s+d-1)) for integer d >= 1.
template <class R>
R beta_integer_first(std::size_t d, const R& s) {
    R num(1);
    for (std::size_t j = 2; j < d; ++j) num *= R(static_cast<long>(j));
    R den = s;
    for (std::size_t j = 1; j < d; ++j) den *= s + R(static_cast<long>(j));
    return num / den;
}

// (E^{3)})^{-1}_{1,1} = 1 / ((1-alpha) B(d, 1-alpha)^2) for the Cauchy matrix
// with entries 1/(i+j-1-alpha); requires alpha < 1.
template <class R>
R cauchy_inverse_entry_t(const R& alpha, std::size_t d) {
    if (d < 1) throw InvalidArgument("d must be >= 1");
    if (!(alpha < R(1)))
        throw OutOfDomain("cauchy inverse entry requires alpha < 1");
    const R s = R(1) - alpha;
    const R b = beta_integer_first(d, s);
    return R(1) / (s * b * b);
}

inline double cauchy_inverse_entry(double alpha, std::size_t d) {
    return cauchy_inverse_entry_t<double>(alpha, d);
}

// L_{alpha,d} = lim_n A_{1,n} sum_{k<=n+d} 1/omega_k:
// 1/((1-alpha) B(d,1-alpha))^2 for alpha < 1, and 1 at alpha = 1.
inline double limit_constant(double alpha, std::size_t d) {
    if (d < 1) throw InvalidArgument("d must be >= 1");
    if (alpha > 1.0)
        throw OutOfDomain("limit constant requires alpha <= 1");
    if (alpha == 1.0) return 1.0;
    const double s = 1.0 - alpha;
    const double b = beta_integer_first<double>(d, s);
    return 1.0 / (s * b * s * b);
}

struct AsymptoticRow {
    std::size_t n;
    double ratio; // A_{1,n} * sum_{k<=n+d} 1/omega_k
    double limit; // L_{alpha,d}
    double abs_err;
};

// Normalized ratio along a log-spaced sweep of n up to n_max. E_{1,1} is
// exactly the reciprocal weight sum up to n+d, so the ratio is
// A_{1,n} * E_{1,1}.
template <class R>
std::vector<AsymptoticRow> asymptotic_check(const WeightSequence& omega, std::size_t d,
                                            std::size_t n_max, double tol = 1e-9) {
    if (!omega.is_power() || omega.alpha() > 1.0)
        throw OutOfDomain("asymptotic check requires a power weight with alpha <= 1");
    // generalized Hilbert blocks are exponentially ill-conditioned in d
    if (std::is_same_v<R, double> && d >= 4)
        throw InvalidArgument("asymptotic sweeps with d >= 4 need the extended or "
                              "rational backend");
    const double limit = limit_constant(omega.alpha(), d);

    std::vector<std::size_t> ns;
    for (std::size_t n = 1; n < n_max; n = std::max(n + 1, (n * 3) / 2)) ns.push_back(n);
    ns.push_back(n_max);

    std::vector<AsymptoticRow> rows;
    rows.reserve(ns.size());
    for (std::size_t n : ns) {
        const auto sys = build_hankel<R>(omega, d, n);
        const auto sol = solve_multiplicity(sys, tol);
        const double ratio = to_double(sol.distance_sq * sys.moments[0]);
        rows.push_back({n, ratio, limit, std::fabs(ratio - limit)});
    }
    return rows;
}

} // namespace opa

#endif
