#include <doctest.h>

#include <sstream>

#include "opa/boundary.hpp"
#include "opa/gram.hpp"
#include "opa/io.hpp"
#include "opa/verify.hpp"

using namespace opa;

namespace {
const WeightSequence hardy = WeightSequence::power(0.0);
const WeightSequence bergman = WeightSequence::power(-1.0);
const WeightSequence sqrt_weight = WeightSequence::power(0.5);

ZeroSet zs(std::vector<std::complex<double>> z) { return ZeroSet(std::move(z)); }

ApproximantSolution<double> solve_simple(const WeightSequence& w,
                                         std::vector<std::complex<double>> zeros,
                                         std::size_t n) {
    return solve_optimal(build_gram<double>(w, ZeroSet(std::move(zeros)), n),
                         Complex<double>(1.0), 1e-7);
}
} // namespace

TEST_CASE("compact sampler: points, filtering, exclusions") {
    auto single = CompactSampler::point({0.0, 0.0});
    CHECK(single.points().size() == 1);

    auto d = CompactSampler::disc(1.0, 64, 8, 8);
    for (const auto& z : d.points()) CHECK(std::abs(z) <= 1.0 + 1e-12);
    CHECK(d.points().size() > 64);

    // excluding the zero at 1 removes nearby boundary samples
    const auto before = d.points().size();
    d.exclude(zs({{1.0, 0.0}}), 0.1);
    const auto after = d.points().size();
    CHECK(after < before);
    for (const auto& z : d.points()) CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) >= 0.1);

    // exterior zero also excludes its reflected point 1/conj(z)
    auto d2 = CompactSampler::disc(1.0, 128, 8, 8);
    d2.exclude(zs({{2.0, 0.0}}), 0.1);
    for (const auto& z : d2.points()) CHECK(std::abs(z - std::complex<double>(0.5, 0.0)) >= 0.1);

    auto arc = CompactSampler::arc(0.0, 0.25, 33);
    CHECK(arc.points().size() == 33);
    for (const auto& z : arc.points()) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);

    // a sampler whose every point is excluded leaves an empty compact
    auto swallowed = CompactSampler::point({1.0, 0.0});
    swallowed.exclude(zs({{1.0, 0.0}}), 0.1);
    CHECK(swallowed.points().empty());
}

TEST_CASE("compact sampler spec parsing") {
    CHECK(CompactSampler::parse("point:0.5,0").points().size() == 1);
    CHECK(CompactSampler::parse("disc:0.9:32:4").points().size() > 32);
    CHECK(CompactSampler::parse("arc:0:0.5:17").points().size() == 17);
    CHECK(CompactSampler::parse("point:0,0+arc:3.14159:0.2:9").points().size() == 10);
    CHECK_THROWS_AS(CompactSampler::parse("blob:1"), InvalidArgument);
    CHECK_THROWS_AS(CompactSampler::parse(""), InvalidArgument);
    CHECK_THROWS_AS(CompactSampler::parse("disc:2"), InvalidArgument);
}

TEST_CASE("residual_at fixtures") {
    for (std::size_t n : {0u, 4u, 19u}) {
        auto sol = solve_simple(hardy, {{1.0, 0.0}}, n);
        const double expect = 1.0 / (static_cast<double>(n) + 2.0);
        CHECK(residual_at(sol, Complex<double>(0.0)).re == doctest::Approx(expect));
        // at the zero itself the residual is exactly 1
        const auto at_zero = residual_at(sol, Complex<double>(1.0));
        CHECK(at_zero.re == doctest::Approx(1.0));
        CHECK(std::fabs(at_zero.im) < 1e-12);
    }

    auto sol = solve_simple(hardy, {{1.0, 0.0}, {-1.0, 0.0}}, 0);
    const auto at_i = residual_at(sol, Complex<double>(0.0, 1.0));
    CHECK(abs_d(at_i) < 1e-12); // 1/2 + z^2/2 vanishes at i
}

TEST_CASE("residual_at: kernel path agrees with Horner to 1e-10 (property)") {
    Rng rng(404);
    for (const auto* w : {&hardy, &bergman, &sqrt_weight}) {
        for (int rep = 0; rep < 6; ++rep) {
            const std::size_t d = 1 + rng.index(3);
            auto sol = solve_simple(*w, sample_zeros(rng, d, 0.6, 2.0, 0.35), rng.index(30));
            for (int pt = 0; pt < 20; ++pt) {
                const double r = rng.uniform(0.0, 1.0);
                const double t = rng.uniform(0.0, 6.28318);
                const Complex<double> z{r * std::cos(t), r * std::sin(t)};
                const auto a = residual_at(sol, z);
                const auto b = residual_at_horner(sol, z);
                CHECK(abs_d(a - b) <= 1e-10 * (1.0 + abs_d(b)));
            }
        }
    }
}

TEST_CASE("wiener_norm") {
    for (std::size_t n : {0u, 3u, 25u}) {
        auto sol = solve_simple(hardy, {{1.0, 0.0}}, n);
        CHECK(wiener_norm(sol) == doctest::Approx(1.0)); // (n+2) * 1/(n+2)
    }
    auto sol = solve_simple(hardy, {{1.0, 0.0}, {-1.0, 0.0}}, 0);
    CHECK(wiener_norm(sol) == doctest::Approx(1.0));

    ApproximantSolution<double> zero_res;
    zero_res.residual.assign(4, Complex<double>{});
    CHECK(wiener_norm(zero_res) == 0.0);
}

TEST_CASE("sup_on_compact") {
    auto sol = solve_simple(hardy, {{1.0, 0.0}}, 8);
    auto origin = CompactSampler::point({0.0, 0.0});
    CHECK(sup_on_compact(sol, origin) == doctest::Approx(0.1)); // d_0 = 1/10

    auto empty = CompactSampler::point({1.0, 0.0});
    empty.exclude(sol.zeros, 0.1);
    CHECK_THROWS_AS(sup_on_compact(sol, empty), EmptyCompact);
}

TEST_CASE("wiener norm dominates the sup over any compact in the closed disc") {
    Rng rng(17);
    for (int rep = 0; rep < 5; ++rep) {
        auto zeros = sample_zeros(rng, 1 + rng.index(3), 0.8, 1.8, 0.3);
        auto sol = solve_simple(hardy, zeros, rng.index(25));
        auto disc = CompactSampler::disc(1.0, 256, 16, 16);
        disc.exclude(sol.zeros, 0.05);
        CHECK(sup_on_compact(sol, disc) <= wiener_norm(sol) + 1e-9);
    }
}

TEST_CASE("rate_sweep: worked example columns") {
    std::vector<std::size_t> ns;
    for (std::size_t n = 0; n <= 10; ++n) ns.push_back(n);
    auto report = rate_sweep(hardy, zs({{1.0, 0.0}}), std::nullopt, ns,
                             CompactSampler::point({0.0, 0.0}));
    REQUIRE(report.rows.size() == 11);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        CHECK(row.n == i);
        const double expect = 1.0 / (static_cast<double>(i) + 2.0);
        CHECK(row.sup_k == doctest::Approx(expect));
        CHECK(row.wiener == doctest::Approx(1.0));
        CHECK(row.dist_sq == doctest::Approx(expect));
        REQUIRE(row.bound.has_value());
        CHECK(*row.bound == doctest::Approx(1.0 / (static_cast<double>(i) + 1.0)));
    }
}

TEST_CASE("rate_sweep: exterior zero decays geometrically") {
    std::vector<std::size_t> ns{0, 5, 10, 15, 20};
    auto disc = CompactSampler::disc(0.9, 128, 16, 16);
    auto report = rate_sweep(hardy, zs({{2.0, 0.0}}), std::nullopt, ns, disc);
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        CHECK(report.rows[i].sup_k < 0.5 * report.rows[i - 1].sup_k);
}

TEST_CASE("rate_sweep input validation") {
    auto k = CompactSampler::point({0.0, 0.0});
    CHECK_THROWS_AS(rate_sweep(hardy, zs({{1.0, 0.0}}), std::nullopt, {}, k),
                    InvalidArgument);
    CHECK_THROWS_AS(rate_sweep(hardy, zs({{1.0, 0.0}}), std::nullopt, {5, 3}, k),
                    InvalidArgument);
}

TEST_CASE("rate bound column selection") {
    // monotone + divergent reciprocal sum: s_n rate
    CHECK(rate_bound_value(hardy, 9).value() == doctest::Approx(0.1));
    const auto dirichlet = WeightSequence::power(1.0);
    const double h10 = to_double(dirichlet.reciprocal_weight_sum<double>(10));
    CHECK(rate_bound_value(dirichlet, 10).value() == doctest::Approx(1.0 / h10));
    // Bergman: s_n = omega_n = 1/(n+1)
    const double expect = 1.0 / ((1.0 / 11.0) * to_double(bergman.reciprocal_weight_sum<double>(10)));
    CHECK(rate_bound_value(bergman, 10).value() == doctest::Approx(expect));
    // monotone but convergent reciprocal sum falls back to the plain reciprocal
    const auto fast = WeightSequence::power(2.0);
    CHECK(rate_bound_value(fast, 10).value() ==
          doctest::Approx(1.0 / to_double(fast.reciprocal_weight_sum<double>(10))));
    // non-monotone custom table: no bound column
    const auto bumpy = WeightSequence::custom({1.0, 2.0, 1.5, 2.5});
    CHECK(!rate_bound_value(bumpy, 3).has_value());
}

TEST_CASE("rate report serialization round trip") {
    RateReport rep;
    rep.rows.push_back({0, 0.5, 1.0, 0.5, 1.0});
    rep.rows.push_back({1, 0.25, 0.9, 0.3, std::nullopt});
    const std::string csv = rate_report_csv(rep);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,sup_K,wiener,dist_sq,bound");
    std::getline(in, line);
    CHECK(line.substr(0, 2) == "0,");
    std::getline(in, line);
    CHECK(line.back() == ','); // empty bound cell

    const auto j = rate_report_json(rep);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["bound"].is_null());
    CHECK(j["rows"][0]["sup_K"] == doctest::Approx(0.5));
}
