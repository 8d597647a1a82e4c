#ifndef OPA_WEIGHTS_HPP
#define OPA_WEIGHTS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opa/backend.hpp"
#include "opa/errors.hpp"
#include "opa/scalar.hpp"

namespace opa {

enum class Monotonicity { non_decreasing, non_increasing, none };

// Conditions a weight sequence may satisfy; they gate the rate theorems,
// not the computations themselves.
struct WeightFlags {
    std::optional<bool> divergent_reciprocal_sum; // sum 1/omega_k = +inf; unknown for tables
    std::optional<double> doubling_constant;      // C with C^-1 w_n <= w_{n+t} <= C w_n, t <= n+1
    Monotonicity monotone = Monotonicity::none;
};

// A sequence omega_0 = 1, omega_k > 0: either a power rule (k+1)^alpha or a
// finite user table. Immutable after construction.
class WeightSequence {
  public:
    enum class Kind { power, custom_table };

    static WeightSequence power(double alpha);
    // ratio_rho: admissibility diagnostic band for omega_k/omega_{k+1}
    static WeightSequence custom(std::vector<double> values, double ratio_rho = 0.5);
    // One-column CSV with header "omega".
    static WeightSequence from_csv(const std::string& path, double ratio_rho = 0.5);

    Kind kind() const { return kind_; }
    bool is_power() const { return kind_ == Kind::power; }
    double alpha() const { return alpha_; }
    bool integer_alpha() const {
        return is_power() && alpha_ == std::nearbyint(alpha_);
    }
    std::size_t table_size() const { return table_.size(); }

    WeightFlags flags() const;
    // Advisory messages from the admissibility check (never a hard error).
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

    // omega_k in the requested scalar type.
    template <class R>
    R weight(std::size_t k) const {
        if (is_power()) {
            if (integer_alpha())
                return pow_int(R(static_cast<long>(k) + 1), static_cast<long>(alpha_));
            if constexpr (scalar_traits<R>::exact)
                throw BackendUnsupported(
                    "rational backend requires an integer power weight");
            else
                return scalar_traits<R>::pow(R(static_cast<long>(k) + 1),
                                             scalar_traits<R>::from_double(alpha_));
        }
        if (k >= table_.size())
            throw OutOfRange("weight index " + std::to_string(k) +
                             " past custom table of size " + std::to_string(table_.size()));
        return scalar_traits<R>::from_double(table_[k]);
    }

    // sum_{k=0}^{n} 1/omega_k (strictly increasing in n).
    template <class R>
    R reciprocal_weight_sum(std::size_t n) const {
        KahanSum<R> acc;
        if constexpr (std::is_same_v<R, double>) acc.compensate = n > 1000;
        for (std::size_t k = 0; k <= n; ++k) acc.add(R(1) / weight<R>(k));
        return acc.sum;
    }

    // k_m(z, w) = sum_{k=0}^{m} (z w̄)^k / omega_k by direct summation.
    template <class R>
    Complex<R> kernel_partial_sum(std::size_t m, const Complex<R>& z,
                                  const Complex<R>& w) const {
        const Complex<R> u = z * conj(w);
        KahanSum<Complex<R>> acc;
        // skipped for extended/rational scalars, which do not need it
        if constexpr (std::is_same_v<R, double>) acc.compensate = m > 1000;
        Complex<R> upow(R(1));
        for (std::size_t k = 0; k <= m; ++k) {
            acc.add(upow / Complex<R>(weight<R>(k)));
            if (k + 1 <= m) upow *= u;
        }
        return acc.sum;
    }

    // Algebraically equivalent closed forms, available for the Hardy (alpha=0)
    // and Bergman (alpha=-1) weights:
    //   alpha =  0: (1 - u^{m+1}) / (1 - u)
    //   alpha = -1: (1 - u^{m+2}) / (1 - u)^2 + (m+2) u^{m+1} / (u - 1)
    // with u = z w̄. Returns nullopt for other weights or u too close to 1.
    template <class R>
    std::optional<Complex<R>> kernel_partial_sum_closed(std::size_t m, const Complex<R>& z,
                                                        const Complex<R>& w) const {
        if (!is_power() || (alpha_ != 0.0 && alpha_ != -1.0)) return std::nullopt;
        const Complex<R> u = z * conj(w);
        const Complex<R> one(R(1));
        const Complex<R> du = one - u;
        // near the removable singularity the quotient form loses accuracy
        if (to_double(norm_sq(du)) < 1e-8) return std::nullopt;
        const Complex<R> u_m1 = pow_int(u, static_cast<long>(m) + 1);
        if (alpha_ == 0.0) return (one - u_m1) / du;
        const Complex<R> u_m2 = u_m1 * u;
        return (one - u_m2) / (du * du) - Complex<R>(R(static_cast<long>(m) + 2)) * u_m1 / du;
    }

    struct FullKernelResult {
        Complex<double> value;
        std::size_t terms_used = 0; // truncation index actually reached
    };

    // k(z, w) = sum_k (z w̄)^k / omega_k for |z w̄| < 1, summed until the
    // tail bound drops below tol. The bound is the crude majorant
    //   max_{k in lookahead window} (1/omega_k) * r^{m+1} / (1 - r),
    // with the window sized to cover the growth range of (1/omega_k) r^k
    // for power weights with alpha < 0.
    FullKernelResult full_kernel(const Complex<double>& z, const Complex<double>& w,
                                 double tol) const;

  private:
    WeightSequence() = default;

    Kind kind_ = Kind::power;
    double alpha_ = 0.0;
    std::vector<double> table_;
    std::vector<std::string> diagnostics_;
};

} // namespace opa

#endif
