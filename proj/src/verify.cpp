#include "opa/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "opa/gram.hpp"
#include "opa/multiplicity.hpp"
#include "opa/oracle.hpp"

namespace opa {

std::vector<std::complex<double>> sample_zeros(Rng& rng, std::size_t d, double r_min,
                                               double r_max, double min_sep) {
    std::vector<std::complex<double>> zeros;
    zeros.reserve(d);
    for (std::size_t i = 0; i < d;) {
        const double r = rng.uniform(r_min, r_max);
        const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const std::complex<double> z(r * std::cos(t), r * std::sin(t));
        bool ok = true;
        for (const auto& other : zeros)
            if (std::abs(z - other) < min_sep) {
                ok = false;
                break;
            }
        if (ok) {
            zeros.push_back(z);
            ++i;
        }
    }
    return zeros;
}

namespace {

std::string instance_json(double alpha, const std::vector<std::complex<double>>& zeros,
                          std::size_t n, std::size_t d, bool mult, double rel_err) {
    nlohmann::ordered_json j;
    j["alpha"] = alpha;
    j["n"] = n;
    j["d"] = d;
    if (mult) {
        j["multiplicity"] = d;
    } else {
        nlohmann::ordered_json zs = nlohmann::ordered_json::array();
        for (const auto& z : zeros) zs.push_back({z.real(), z.imag()});
        j["zeros"] = zs;
    }
    j["rel_error"] = rel_err;
    return j.dump();
}

template <class R>
double residual_rel_error(const std::vector<Complex<R>>& a, const std::vector<Complex<R>>& b) {
    double scale = 1e-300;
    for (const auto& x : a) scale = std::max(scale, abs_d(x));
    double worst = 0.0;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < len; ++k) {
        const Complex<R> av = k < a.size() ? a[k] : Complex<R>{};
        const Complex<R> bv = k < b.size() ? b[k] : Complex<R>{};
        worst = std::max(worst, abs_d(av - bv) / scale);
    }
    return worst;
}

} // namespace

VerifyOutcome run_equivalence(const VerifyConfig& cfg) {
    if (cfg.cases == 0)
        throw InvalidArgument("verification needs at least one case");
    Rng rng(cfg.seed);
    const double alphas[] = {-1.0, 0.0, 1.0};

    VerifyOutcome out;
    for (std::size_t c = 0; c < cfg.cases; ++c) {
        const double alpha = cfg.alpha ? *cfg.alpha : alphas[c % 3];
        const WeightSequence omega = WeightSequence::power(alpha);
        const std::size_t d = 1 + rng.index(cfg.d_max);
        const std::size_t n = rng.index(cfg.n_max + 1);
        const bool mult_case = cfg.include_multiplicity && (c % 2 == 1);

        std::vector<std::complex<double>> zeros;
        if (!mult_case)
            zeros = sample_zeros(rng, d, cfg.annulus_min, cfg.annulus_max, cfg.min_separation);

        const double rel = with_backend(cfg.backend, [&](auto tag) -> double {
            using R = typename decltype(tag)::type;
            if (mult_case) {
                const auto sys = build_hankel<R>(omega, d, n);
                const auto closed = solve_multiplicity(sys, cfg.backend.check_tolerance());
                std::vector<Complex<R>> zd(d, Complex<R>(R(1)));
                const auto f =
                    Polynomial<R>::from_zeros(std::span<const Complex<R>>(zd), Complex<R>(R(1)));
                const auto brute = oracle_solve(omega, f, n);
                const double r = residual_rel_error(closed.residual, brute.residual);
                const double dd = std::fabs(to_double(closed.distance_sq - brute.distance_sq)) /
                                  std::max(1e-300, to_double(closed.distance_sq));
                return std::max(r, dd);
            }
            const ZeroSet zs(zeros);
            const auto sys = build_gram<R>(omega, zs, n);
            const auto closed = solve_optimal(sys, Complex<R>(R(1)), cfg.backend.check_tolerance());
            const auto zr = zs.as<R>();
            const auto f =
                Polynomial<R>::from_zeros(std::span<const Complex<R>>(zr), Complex<R>(R(1)));
            const auto brute = oracle_solve(omega, f, n);
            const double r = residual_rel_error(closed.residual, brute.residual);
            const double dd = std::fabs(to_double(closed.distance_sq - brute.distance_sq)) /
                              std::max(1e-300, to_double(closed.distance_sq));
            return std::max(r, dd);
        });

        ++out.cases_run;
        if (!(rel < cfg.rel_tol)) ++out.failures;
        if (rel >= out.worst_rel_error) {
            out.worst_rel_error = rel;
            out.worst_instance = instance_json(alpha, zeros, n, d, mult_case, rel);
        }
    }
    return out;
}

} // namespace opa
