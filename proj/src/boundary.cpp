#include "opa/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace opa {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> parse_complex_pair(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InvalidArgument("bad complex literal \"" + text + "\" (expected re,im)");
    }
}
} // namespace

CompactSampler CompactSampler::point(std::complex<double> z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw InvalidArgument("compact point must lie in the closed unit disc");
    CompactSampler s;
    s.raw_.push_back(z);
    return s;
}

CompactSampler CompactSampler::disc(double radius, std::size_t boundary_points,
                                    std::size_t radial, std::size_t angular) {
    if (!(radius >= 0.0) || radius > 1.0 + 1e-12)
        throw InvalidArgument("disc radius must lie in [0, 1]");
    CompactSampler s;
    if (radius == 0.0) {
        s.raw_.emplace_back(0.0, 0.0);
        return s;
    }
    for (std::size_t i = 0; i < boundary_points; ++i) {
        const double t = two_pi * static_cast<double>(i) / static_cast<double>(boundary_points);
        s.raw_.emplace_back(radius * std::cos(t), radius * std::sin(t));
    }
    s.raw_.emplace_back(0.0, 0.0);
    for (std::size_t r = 1; r < radial; ++r) {
        const double rho = radius * static_cast<double>(r) / static_cast<double>(radial);
        for (std::size_t a = 0; a < angular; ++a) {
            const double t = two_pi * static_cast<double>(a) / static_cast<double>(angular);
            s.raw_.emplace_back(rho * std::cos(t), rho * std::sin(t));
        }
    }
    return s;
}

CompactSampler CompactSampler::arc(double center_angle, double half_width,
                                   std::size_t points) {
    if (!(half_width > 0.0))
        throw InvalidArgument("arc half-width must be positive");
    CompactSampler s;
    const std::size_t m = std::max<std::size_t>(points, 2);
    for (std::size_t i = 0; i < m; ++i) {
        const double t = center_angle - half_width +
                         2.0 * half_width * static_cast<double>(i) / static_cast<double>(m - 1);
        s.raw_.emplace_back(std::cos(t), std::sin(t));
    }
    return s;
}

CompactSampler& CompactSampler::exclude(const ZeroSet& zeros, double radius) {
    for (const auto& z : zeros.values()) {
        exclusions_.push_back({z, radius});
        const double mod = std::abs(z);
        if (mod > 1.0 + ZeroSet::classification_tol)
            exclusions_.push_back({std::conj(std::complex<double>(1.0, 0.0) / z), radius});
    }
    return *this;
}

CompactSampler& CompactSampler::exclude_ball(std::complex<double> center, double radius) {
    exclusions_.push_back({center, radius});
    return *this;
}

CompactSampler& CompactSampler::merge(const CompactSampler& other) {
    raw_.insert(raw_.end(), other.raw_.begin(), other.raw_.end());
    exclusions_.insert(exclusions_.end(), other.exclusions_.begin(), other.exclusions_.end());
    return *this;
}

std::vector<std::complex<double>> CompactSampler::points() const {
    std::vector<std::complex<double>> out;
    out.reserve(raw_.size());
    for (const auto& z : raw_) {
        if (std::abs(z) > 1.0 + 1e-12) continue;
        bool excluded = false;
        for (const auto& ball : exclusions_)
            if (std::abs(z - ball.center) < ball.radius) {
                excluded = true;
                break;
            }
        if (!excluded) out.push_back(z);
    }
    return out;
}

CompactSampler CompactSampler::parse(const std::string& spec) {
    std::optional<CompactSampler> result;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ps(part);
        std::string field;
        while (std::getline(ps, field, ':')) fields.push_back(field);
        if (fields.empty())
            throw InvalidArgument("empty compact spec");
        const std::string& kind = fields[0];
        CompactSampler piece = [&]() -> CompactSampler {
            try {
                if (kind == "point" && fields.size() == 2)
                    return point(parse_complex_pair(fields[1]));
                if (kind == "disc" && fields.size() >= 2 && fields.size() <= 4) {
                    const double r = std::stod(fields[1]);
                    const std::size_t bp = fields.size() > 2 ? std::stoul(fields[2]) : 4096;
                    const std::size_t grid = fields.size() > 3 ? std::stoul(fields[3]) : 128;
                    return disc(r, bp, grid, grid);
                }
                if (kind == "arc" && (fields.size() == 3 || fields.size() == 4)) {
                    const double c = std::stod(fields[1]);
                    const double hw = std::stod(fields[2]);
                    const std::size_t pts = fields.size() > 3 ? std::stoul(fields[3]) : 1024;
                    return arc(c, hw, pts);
                }
            } catch (const InvalidArgument&) {
                throw;
            } catch (const std::exception&) {
                throw InvalidArgument("bad compact spec \"" + part + "\"");
            }
            throw InvalidArgument("unknown compact spec \"" + part +
                                  "\" (want point:re,im | disc:r[:bp[:grid]] | "
                                  "arc:center:halfwidth[:points])");
        }();
        if (result)
            result->merge(piece);
        else
            result = std::move(piece);
    }
    if (!result)
        throw InvalidArgument("empty compact spec");
    return *result;
}

std::optional<double> rate_bound_value(const WeightSequence& omega, std::size_t n) {
    const WeightFlags flags = omega.flags();
    const double recip = to_double(omega.reciprocal_weight_sum<double>(n));
    if (flags.monotone != Monotonicity::none &&
        flags.divergent_reciprocal_sum.value_or(false)) {
        const double s_n = std::min(1.0, omega.weight<double>(n));
        return 1.0 / (s_n * recip);
    }
    if (flags.monotone == Monotonicity::none) return std::nullopt;
    return 1.0 / recip;
}

RateReport rate_sweep(const WeightSequence& omega, const ZeroSet& zeros,
                      const std::optional<std::vector<std::complex<double>>>& g_coeffs,
                      const std::vector<std::size_t>& n_values, const CompactSampler& sampler,
                      const PrecisionBackend& backend) {
    if (n_values.empty())
        throw InvalidArgument("sweep range is empty");
    for (std::size_t i = 0; i + 1 < n_values.size(); ++i)
        if (n_values[i] >= n_values[i + 1])
            throw InvalidArgument("sweep range must be strictly increasing");

    RateReport report;
    report.rows.reserve(n_values.size());
    with_backend(backend, [&](auto tag) {
        using R = typename decltype(tag)::type;
        const auto g = g_coeffs ? Polynomial<R>::from_std(*g_coeffs) : Polynomial<R>::one();
        for (const std::size_t n : n_values) {
            const auto sys = build_gram<R>(omega, zeros, n);
            auto proj = project(sys, g);
            ApproximantSolution<R> sol;
            sol.kind = ApproximantSolution<R>::Kind::simple_zeros;
            sol.n = n;
            sol.d = zeros.size();
            sol.omega = omega;
            sol.zeros = zeros;
            sol.A = std::move(proj.A);
            sol.residual = std::move(proj.residual);
            sol.distance_sq = proj.distance_sq;
            RateRow row;
            row.n = n;
            row.sup_k = sup_on_compact(sol, sampler);
            row.wiener = wiener_norm(sol);
            row.dist_sq = to_double(sol.distance_sq);
            row.bound = rate_bound_value(omega, n);
            report.rows.push_back(row);
        }
    });
    return report;
}

} // namespace opa
