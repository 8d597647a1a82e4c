#ifndef OPA_BOUNDARY_HPP
#define OPA_BOUNDARY_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "opa/backend.hpp"
#include "opa/gram.hpp"
#include "opa/solution.hpp"

namespace opa {

// Sample points of a compact subset of the closed unit disc, with exclusion
// balls removed around the zeros of f (and around 1/conj(z_i) for exterior
// zeros, where the kernel quotient has a removable singularity).
class CompactSampler {
  public:
    struct Ball {
        std::complex<double> center;
        double radius;
    };

    static constexpr double default_exclusion_radius = 0.1;

    // Single point (must satisfy the constraints itself).
    static CompactSampler point(std::complex<double> z);
    // Closed disc of given radius (<= 1): boundary circle plus polar grid.
    static CompactSampler disc(double radius, std::size_t boundary_points = 4096,
                               std::size_t radial = 128, std::size_t angular = 128);
    // Arc of the unit circle: center angle +- half_width (radians).
    static CompactSampler arc(double center_angle, double half_width,
                              std::size_t points = 1024);

    CompactSampler& exclude(const ZeroSet& zeros,
                            double radius = default_exclusion_radius);
    CompactSampler& exclude_ball(std::complex<double> center, double radius);
    CompactSampler& merge(const CompactSampler& other); // union of sample sets

    // Emits the filtered samples: |z| <= 1 and outside every exclusion ball.
    std::vector<std::complex<double>> points() const;

    const std::vector<Ball>& exclusions() const { return exclusions_; }

    // "point:re,im" | "disc:r[:boundary[:grid]]" | "arc:center:halfwidth[:points]",
    // several specs joined with "+" form a union.
    static CompactSampler parse(const std::string& spec);

  private:
    CompactSampler() = default;
    std::vector<std::complex<double>> raw_;
    std::vector<Ball> exclusions_;
};

// (1 - p_n f)(z) evaluated through the kernel representation
// sum_i A_i k_{n+d}(z, z_i) for simple-zero solutions (closed form for the
// Hardy/Bergman weights, direct partial sums otherwise), and by Horner on
// the residual coefficients for the other solution kinds.
template <class R>
Complex<R> residual_at(const ApproximantSolution<R>& sol, const Complex<R>& z) {
    if (sol.kind == ApproximantSolution<R>::Kind::simple_zeros && !sol.A.empty()) {
        const ZeroSet& zeros = sol.zeros;
        const WeightSequence& omega = sol.omega;
        const auto zr = zeros.as<R>();
        const std::size_t m = sol.n + sol.d;
        Complex<R> acc{};
        for (std::size_t i = 0; i < zr.size(); ++i) {
            auto closed = omega.kernel_partial_sum_closed<R>(m, z, zr[i]);
            const Complex<R> k = closed ? *closed : omega.kernel_partial_sum<R>(m, z, zr[i]);
            acc += sol.A[i] * k;
        }
        return acc;
    }
    Complex<R> acc{};
    for (std::size_t k = sol.residual.size(); k-- > 0;) acc = acc * z + sol.residual[k];
    return acc;
}

// Horner evaluation of the stored residual coefficients (reference path).
template <class R>
Complex<R> residual_at_horner(const ApproximantSolution<R>& sol, const Complex<R>& z) {
    Complex<R> acc{};
    for (std::size_t k = sol.residual.size(); k-- > 0;) acc = acc * z + sol.residual[k];
    return acc;
}

// Wiener norm sum_k |d_{k,n}| of the residual. Dominates the sup norm on the
// closed disc.
template <class R>
double wiener_norm(const ApproximantSolution<R>& sol) {
    double s = 0.0;
    for (const auto& c : sol.residual) s += abs_d(c);
    return s;
}

// Max of |1 - p_n f| over the sampler grid: a lower bound for the true sup,
// with grid density a declared parameter of the sampler.
template <class R>
double sup_on_compact(const ApproximantSolution<R>& sol, const CompactSampler& sampler) {
    const auto pts = sampler.points();
    if (pts.empty())
        throw EmptyCompact("compact sampler produced no points");
    double best = 0.0;
    for (const auto& p : pts)
        best = std::max(best, abs_d(residual_at(sol, Complex<R>::from(p))));
    return best;
}

struct RateRow {
    std::size_t n;
    double sup_k;
    double wiener;
    double dist_sq;
    std::optional<double> bound; // theoretical rate value, when applicable
};

struct RateReport {
    std::vector<RateRow> rows; // strictly increasing in n
};

// The bound column of a sweep row: (sum_{k<=n} s_n/omega_k)^{-1} with
// s_n = min{1, omega_n} for monotone weights with divergent reciprocal sum;
// (sum_{k<=n} 1/omega_k)^{-1} otherwise; empty for non-monotone tables.
std::optional<double> rate_bound_value(const WeightSequence& omega, std::size_t n);

// Solves (or projects g onto) P_n * f for each n and records sup, Wiener
// norm, squared distance and the bound value.
RateReport rate_sweep(const WeightSequence& omega, const ZeroSet& zeros,
                      const std::optional<std::vector<std::complex<double>>>& g_coeffs,
                      const std::vector<std::size_t>& n_values, const CompactSampler& sampler,
                      const PrecisionBackend& backend = PrecisionBackend::float64());

} // namespace opa

#endif
