#ifndef OPA_LINALG_HPP
#define OPA_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "opa/errors.hpp"
#include "opa/scalar.hpp"

namespace opa {

// Dense row-major complex matrix over the active scalar backend.
template <class R>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex<R>(R(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex<R>& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex<R>& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Complex<R>>& data() const { return a_; }

    std::vector<Complex<R>> multiply(std::span<const Complex<R>> x) const {
        std::vector<Complex<R>> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Complex<R> s{};
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    // Submatrix with one row and one column removed.
    Matrix minor_without(std::size_t row, std::size_t col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(mi, mj) = (*this)(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex<R>> a_;
};

namespace detail {

// In-place LU with partial pivoting on |entry|^2 (exact comparisons for
// rationals). Returns the permutation sign, or 0 for a singular matrix.
//
// Singularity test: a pivot counts as numerically singular when it is an
// exact zero, or smaller than 1e3 * eps times the magnitude of the largest
// cancellation that elimination fed into that entry. Tracking the
// cancellation magnitude per entry (rather than a global or per-row scale)
// keeps strongly graded kernel Gramians out of the singular bucket while
// still catching pivots that are pure rounding residue.
template <class R>
int lu_factor(Matrix<R>& a, std::vector<std::size_t>& perm, R& max_entry_sq) {
    const std::size_t n = a.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    max_entry_sq = R(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const R v = norm_sq(a(i, j));
            if (v > max_entry_sq) max_entry_sq = v;
        }

    constexpr bool exact = scalar_traits<R>::exact;
    R teps(0);
    std::vector<R> cancel; // per-entry cancellation magnitude, row-major
    if constexpr (!exact) {
        teps = scalar_traits<R>::from_double(1e3) * scalar_traits<R>::epsilon();
        cancel.assign(n * n, R(0));
    }

    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        R best = norm_sq(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            R v = norm_sq(a(i, col));
            if (v > best) { best = v; piv = i; }
        }
        if (!(best > R(0))) return 0;
        if constexpr (!exact) {
            if (abs_bound(a(piv, col)) <= teps * cancel[piv * n + col]) return 0;
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            if constexpr (!exact)
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(cancel[col * n + j], cancel[piv * n + j]);
            std::swap(perm[col], perm[piv]);
            sign = -sign;
        }
        const Complex<R> inv_piv = Complex<R>(R(1)) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            Complex<R> f = a(i, col) * inv_piv;
            a(i, col) = f;
            if constexpr (exact) {
                for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= f * a(col, j);
            } else {
                const R fmag = abs_bound(f);
                for (std::size_t j = col + 1; j < n; ++j) {
                    const R update = fmag * abs_bound(a(col, j));
                    if (update > cancel[i * n + j]) cancel[i * n + j] = update;
                    a(i, j) -= f * a(col, j);
                }
            }
        }
    }
    return sign;
}

template <class R>
double condition_estimate_from_lu(const Matrix<R>& lu) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < lu.rows(); ++i) {
        const double p = abs_d(lu(i, i));
        hi = std::max(hi, p);
        lo = (i == 0) ? p : std::min(lo, p);
    }
    return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

} // namespace detail

// Solves A x = b by pivoted elimination.
template <class R>
std::vector<Complex<R>> solve(const Matrix<R>& A, std::span<const Complex<R>> b) {
    if (!A.square())
        throw InvalidArgument("solve requires a square matrix");
    if (b.size() != A.rows())
        throw InvalidArgument("right-hand side length does not match");
    const std::size_t n = A.rows();
    Matrix<R> lu = A;
    std::vector<std::size_t> perm;
    R max_sq;
    if (detail::lu_factor(lu, perm, max_sq) == 0)
        throw SingularMatrix("matrix is numerically singular",
                             detail::condition_estimate_from_lu(lu));
    std::vector<Complex<R>> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex<R> s = b[perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex<R> s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
        x[i] = s / lu(i, i);
    }
    return x;
}

// LU-based determinant; returns 0 for singular input.
template <class R>
Complex<R> determinant(const Matrix<R>& A) {
    if (!A.square())
        throw InvalidArgument("determinant requires a square matrix");
    if (A.rows() == 0) return Complex<R>(R(1));
    Matrix<R> lu = A;
    std::vector<std::size_t> perm;
    R max_sq;
    const int sign = detail::lu_factor(lu, perm, max_sq);
    if (sign == 0) return Complex<R>{};
    Complex<R> det{R(sign)};
    for (std::size_t i = 0; i < A.rows(); ++i) det *= lu(i, i);
    return det;
}

// (A^{-1})_{i,j} by Cramer's rule: (-1)^{i+j} det(minor_{j,i}) / det(A).
// Zero-based indices.
template <class R>
Complex<R> inverse_entry(const Matrix<R>& A, std::size_t i, std::size_t j) {
    if (!A.square())
        throw InvalidArgument("inverse_entry requires a square matrix");
    const Complex<R> det = determinant(A);
    if (norm_sq(det) == R(0))
        throw SingularMatrix("inverse_entry of a singular matrix");
    Complex<R> cof = determinant(A.minor_without(j, i));
    if ((i + j) % 2 == 1) cof = -cof;
    return cof / det;
}

// Full inverse via n solves against the identity.
template <class R>
Matrix<R> inverse(const Matrix<R>& A) {
    const std::size_t n = A.rows();
    Matrix<R> inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Complex<R>> e(n);
        e[col] = Complex<R>(R(1));
        auto x = solve(A, std::span<const Complex<R>>(e));
        for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

namespace detail {

// Square-root-free LDL^H positive-definiteness test of A - shift*I.
// Strict: any nonpositive pivot reports "not positive definite".
template <class R>
bool ldl_positive_definite(const Matrix<R>& A, const R& shift) {
    const std::size_t n = A.rows();
    Matrix<R> L(n, n);
    std::vector<R> d(n);
    for (std::size_t j = 0; j < n; ++j) {
        R dj = A(j, j).re - shift;
        for (std::size_t k = 0; k < j; ++k) dj -= norm_sq(L(j, k)) * d[k];
        if (!(dj > R(0))) return false;
        d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex<R> s = A(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * conj(L(j, k)) * Complex<R>(d[k]);
            L(i, j) = s / Complex<R>(dj);
        }
    }
    return true;
}

} // namespace detail

// Smallest eigenvalue of a Hermitian matrix by bisection on the shifted
// LDL^H factorization (which succeeds iff A - s I is positive definite).
// Returns the lower end of a bracket of width < 1e-8 * ||A||; when the sign
// of the result is ambiguous at that width, refines further down to
// 1e-14 * ||A|| so that "> 0" answers are certified.
template <class R>
R min_eigenvalue_hermitian(const Matrix<R>& A) {
    if (!A.square() || A.rows() == 0)
        throw InvalidArgument("min_eigenvalue_hermitian requires a nonempty square matrix");
    const std::size_t n = A.rows();

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, abs_d(A(i, j)));
    if (scale == 0.0) return R(0); // zero matrix
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(to_double(A(i, i).im)) > 1e-10 * scale)
            throw NotHermitian("diagonal entries must be real");
        for (std::size_t j = i + 1; j < n; ++j)
            if (abs_d(A(i, j) - conj(A(j, i))) > 1e-10 * scale)
                throw NotHermitian("matrix is not Hermitian to tolerance");
    }

    // Gershgorin bracket using |re|+|im| >= |entry| (keeps rationals exact)
    R lo{}, hi{};
    for (std::size_t i = 0; i < n; ++i) {
        R radius(0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) radius += abs_bound(A(i, j));
        const R center = A(i, i).re;
        const R l = center - radius, h = center + radius;
        if (i == 0 || l < lo) lo = l;
        if (i == 0 || h > hi) hi = h;
    }
    const R one(1);
    lo -= one; // make the endpoints strictly outside the spectrum
    hi += one;

    const R target = scalar_traits<R>::from_double(1e-8 * scale);
    const R sign_floor = scalar_traits<R>::from_double(1e-14 * scale);
    while (hi - lo > target || (lo <= R(0) && hi > R(0) && hi - lo > sign_floor)) {
        const R mid = (lo + hi) / R(2);
        if (detail::ldl_positive_definite(A, mid))
            lo = mid; // certified: lambda_min > mid
        else
            hi = mid;
    }
    return lo;
}

} // namespace opa

#endif
