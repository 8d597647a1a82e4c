#ifndef OPA_SCALAR_HPP
#define OPA_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "opa/errors.hpp"

namespace opa {

// Scalar backends. `bigfloat` carries its precision per value; fresh values
// pick up mpfr_float::default_precision() (decimal digits), which the
// PrecisionGuard in backend.hpp sets.
using bigfloat = boost::multiprecision::mpfr_float;
using rational = boost::multiprecision::mpq_rational;

template <class R>
struct scalar_traits {
    static constexpr bool exact = false;
    static R from_double(double x) { return R(x); }
    static double to_double(const R& x) { return static_cast<double>(x); }
    static R epsilon() { return std::numeric_limits<R>::epsilon(); }
    static R sqrt(const R& x) { return std::sqrt(x); }
    static R pow(const R& base, const R& expo) { return std::pow(base, expo); }
    static R abs(const R& x) { return std::fabs(x); }
};

template <>
struct scalar_traits<bigfloat> {
    static constexpr bool exact = false;
    static bigfloat from_double(double x) { return bigfloat(x); }
    static double to_double(const bigfloat& x) { return x.convert_to<double>(); }
    static bigfloat epsilon() {
        // 10^(1 - digits) for the currently active working precision
        return boost::multiprecision::pow(bigfloat(10),
                                          1 - static_cast<long>(bigfloat::default_precision()));
    }
    static bigfloat sqrt(const bigfloat& x) { return boost::multiprecision::sqrt(x); }
    static bigfloat pow(const bigfloat& b, const bigfloat& e) { return boost::multiprecision::pow(b, e); }
    static bigfloat abs(const bigfloat& x) { return boost::multiprecision::abs(x); }
};

template <>
struct scalar_traits<rational> {
    static constexpr bool exact = true;
    // double -> rational is exact (binary fractions)
    static rational from_double(double x) { return rational(x); }
    static double to_double(const rational& x) { return x.convert_to<double>(); }
    static rational epsilon() { return rational(0); }
    static rational sqrt(const rational&) {
        throw BackendUnsupported("rational backend has no exact square root");
    }
    static rational pow(const rational&, const rational&) {
        throw BackendUnsupported("rational backend has no exact real power");
    }
    static rational abs(const rational& x) { return x < 0 ? rational(-x) : x; }
};

template <class R>
double to_double(const R& x) { return scalar_traits<R>::to_double(x); }

// x^e for integer e (e < 0 divides), exact when R is exact.
template <class R>
R pow_int(R x, long e) {
    if (e < 0) return R(1) / pow_int(x, -e);
    R r(1);
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

// Minimal complex-over-R value type. std::complex is only specified for the
// builtin floating types, and we also need exact rational components.
template <class R>
struct Complex {
    R re{};
    R im{};

    Complex() = default;
    Complex(R r) : re(std::move(r)) {}
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    static Complex from(const std::complex<double>& z) {
        return {scalar_traits<R>::from_double(z.real()),
                scalar_traits<R>::from_double(z.imag())};
    }
    std::complex<double> to_std() const {
        return {opa::to_double(re), opa::to_double(im)};
    }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        R den = o.re * o.re + o.im * o.im;
        R r = (re * o.re + im * o.im) / den;
        im = (im * o.re - re * o.im) / den;
        re = std::move(r);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <class R>
Complex<R> conj(const Complex<R>& z) { return {z.re, -z.im}; }

// |z|^2, exact in exact backends.
template <class R>
R norm_sq(const Complex<R>& z) { return z.re * z.re + z.im * z.im; }

// |z| (double precision is enough everywhere a magnitude is reported).
template <class R>
double abs_d(const Complex<R>& z) {
    return std::hypot(to_double(z.re), to_double(z.im));
}

// |re| + |im|: a cheap upper bound on |z| that stays exact for rationals.
template <class R>
R abs_bound(const Complex<R>& z) {
    return scalar_traits<R>::abs(z.re) + scalar_traits<R>::abs(z.im);
}

template <class R>
std::complex<double> to_std(const Complex<R>& z) { return z.to_std(); }

using c64 = Complex<double>;

// Compensated (Kahan) accumulator over a scalar or Complex summand type.
// Only the double backend needs it; exact/extended backends just add.
template <class C>
struct KahanSum {
    C sum{};
    C carry{};
    bool compensate = false;

    void add(const C& term) {
        if (!compensate) { sum += term; return; }
        C y = term - carry;
        C t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace opa

#endif
