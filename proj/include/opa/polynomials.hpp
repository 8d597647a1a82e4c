#ifndef OPA_POLYNOMIALS_HPP
#define OPA_POLYNOMIALS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "opa/errors.hpp"
#include "opa/scalar.hpp"

namespace opa {

// Coefficient vector, index = power, trailing zeros trimmed.
// The zero polynomial is the empty vector (degree -1).
template <class R>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex<R>> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial one() { return Polynomial({Complex<R>(R(1))}); }

    static Polynomial from_std(const std::vector<std::complex<double>>& coeffs) {
        std::vector<Complex<R>> c;
        c.reserve(coeffs.size());
        for (const auto& z : coeffs) c.push_back(Complex<R>::from(z));
        return Polynomial(std::move(c));
    }

    // leading * prod_i (z - zeros[i]); evaluates to ~0 at each zero.
    static Polynomial from_zeros(std::span<const Complex<R>> zeros, const Complex<R>& leading) {
        if (norm_sq(leading) == R(0))
            throw InvalidArgument("leading coefficient must be nonzero");
        std::vector<Complex<R>> c{leading};
        for (const auto& z : zeros) {
            std::vector<Complex<R>> next(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k] -= c[k] * z;
                next[k + 1] += c[k];
            }
            c = std::move(next);
        }
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Complex<R>>& coeffs() const { return c_; }
    Complex<R> coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Complex<R>{};
    }

    Complex<R> eval(const Complex<R>& z) const {
        Complex<R> acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
        return acc;
    }

    Polynomial scaled(const Complex<R>& factor) const {
        std::vector<Complex<R>> c = c_;
        for (auto& x : c) x *= factor;
        return Polynomial(std::move(c));
    }

    std::vector<std::complex<double>> to_std() const {
        std::vector<std::complex<double>> out;
        out.reserve(c_.size());
        for (const auto& z : c_) out.push_back(z.to_std());
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && norm_sq(c_.back()) == R(0)) c_.pop_back();
    }
    std::vector<Complex<R>> c_;
};

// Convolution of two coefficient spans (plain product of the series).
template <class R>
std::vector<Complex<R>> convolve(std::span<const Complex<R>> a, std::span<const Complex<R>> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Complex<R>> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Taylor coefficients b_0..b_N of 1/f (standard power-series division).
template <class R>
std::vector<Complex<R>> reciprocal_series(const Polynomial<R>& f, std::size_t N) {
    if (f.is_zero() || norm_sq(f.coeff(0)) == R(0))
        throw ZeroAtOrigin("1/f has no Taylor series: f(0) = 0");
    const Complex<R> inv0 = Complex<R>(R(1)) / f.coeff(0);
    std::vector<Complex<R>> b(N + 1);
    b[0] = inv0;
    const std::size_t d = static_cast<std::size_t>(f.degree());
    for (std::size_t k = 1; k <= N; ++k) {
        Complex<R> s{};
        for (std::size_t j = 1; j <= std::min(k, d); ++j) s += f.coeff(j) * b[k - j];
        b[k] = -inv0 * s;
    }
    return b;
}

// Zeros of f: nonzero, pairwise distinct, sorted by ascending modulus.
// d1() is the number of zeros on the unit circle (within classification_tol).
class ZeroSet {
  public:
    static constexpr double eps_origin = 1e-12;       // exclusion ball around 0
    static constexpr double eps_separation = 1e-9;    // min pairwise distance
    static constexpr double classification_tol = 1e-10;

    ZeroSet() = default;
    explicit ZeroSet(std::vector<std::complex<double>> zeros);

    std::size_t size() const { return z_.size(); }
    bool empty() const { return z_.empty(); }
    const std::vector<std::complex<double>>& values() const { return z_; }
    std::complex<double> operator[](std::size_t i) const { return z_[i]; }

    std::size_t d1() const { return d1_; }
    bool all_unimodular() const { return d1_ == z_.size(); }
    bool all_interior() const;       // every |z_i| < 1
    bool none_interior() const;      // every |z_i| >= 1 (up to classification_tol)

    template <class R>
    std::vector<Complex<R>> as() const {
        std::vector<Complex<R>> out;
        out.reserve(z_.size());
        for (const auto& z : z_) out.push_back(Complex<R>::from(z));
        return out;
    }

  private:
    std::vector<std::complex<double>> z_;
    std::size_t d1_ = 0;
};

// Coefficients of p_n from the residual r = 1 - p_n f:
// p_n = (1 - r)/f, i.e. c_k = b_k - sum_{r<=k} b_{k-r} d_r with b = series of 1/f.
// Verifies p_n * f + residual = 1 through degree n+d; throws InconsistentResidual
// past tolerance (exact equality required in the rational backend).
template <class R>
Polynomial<R> recover_pn(std::span<const Complex<R>> residual, const Polynomial<R>& f,
                         std::size_t n, double tol = 1e-9) {
    if (f.is_zero() || norm_sq(f.coeff(0)) == R(0))
        throw ZeroAtOrigin("cannot recover p_n: f(0) = 0");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (residual.size() != n + d + 1)
        throw InvalidArgument("residual must have exactly n + deg(f) + 1 coefficients");

    const std::vector<Complex<R>> b = reciprocal_series(f, n);
    std::vector<Complex<R>> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex<R> s{};
        for (std::size_t r = 0; r <= k; ++r) s += b[k - r] * residual[r];
        c[k] = b[k] - s;
    }
    Polynomial<R> pn{std::move(c)};

    // consistency: coefficients of p_n f + residual - 1 vanish through n+d,
    // measured against the amplitude of the cancellations entering each degree
    // (the c_k are differences of terms of size |b| * |residual|, so errors in
    // the inputs are amplified by exactly that much)
    std::vector<Complex<R>> prod = convolve(std::span<const Complex<R>>(pn.coeffs()),
                                            std::span<const Complex<R>>(f.coeffs()));
    prod.resize(n + d + 1);
    std::vector<double> c_amp(n + 1, 0.0);
    if constexpr (!scalar_traits<R>::exact) {
        for (std::size_t j = 0; j <= n; ++j) {
            double amp = abs_d(b[j]);
            for (std::size_t r = 0; r <= j; ++r) amp += abs_d(b[j - r]) * abs_d(residual[r]);
            c_amp[j] = amp;
        }
    }
    for (std::size_t k = 0; k <= n + d; ++k) {
        Complex<R> diff = prod[k] + residual[k];
        if (k == 0) diff -= Complex<R>(R(1));
        if constexpr (scalar_traits<R>::exact) {
            if (norm_sq(diff) != R(0))
                throw InconsistentResidual("residual is not of the form 1 - p_n f");
        } else {
            double amplitude = 1.0 + abs_d(residual[k]);
            for (std::size_t j = 0; j <= k && j <= n; ++j)
                amplitude += c_amp[j] * abs_d(f.coeff(k - j));
            if (abs_d(diff) > tol * amplitude)
                throw InconsistentResidual("residual inconsistent at degree " +
                                           std::to_string(k));
        }
    }
    return pn;
}

} // namespace opa

#endif
