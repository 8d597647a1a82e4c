#include <doctest.h>

#include "opa/gram.hpp"
#include "opa/multiplicity.hpp"
#include "opa/oracle.hpp"
#include "opa/verify.hpp"

using namespace opa;

namespace {
const WeightSequence hardy = WeightSequence::power(0.0);

Polynomial<double> poly(std::vector<std::complex<double>> c) {
    return Polynomial<double>::from_std(std::move(c));
}
} // namespace

TEST_CASE("oracle_solve fixtures") {
    auto s1 = oracle_solve(hardy, poly({{-1, 0}, {1, 0}}), 0);
    CHECK(s1.pn.coeff(0).re == doctest::Approx(-0.5));
    CHECK(s1.distance_sq == doctest::Approx(0.5));

    auto s2 = oracle_solve(hardy, poly({{-1, 0}, {0, 0}, {1, 0}}), 0);
    CHECK(s2.pn.coeff(0).re == doctest::Approx(-0.5));
    CHECK(s2.distance_sq == doctest::Approx(0.5));

    // f = (z-1)^2: minimize (1-c)^2 + 4c^2 + c^2 over constants
    auto s3 = oracle_solve(hardy, poly({{1, 0}, {-2, 0}, {1, 0}}), 0);
    CHECK(s3.pn.coeff(0).re == doctest::Approx(1.0 / 6.0));
    CHECK(s3.distance_sq == doctest::Approx(5.0 / 6.0));

    CHECK_THROWS_AS(oracle_solve(hardy, poly({{0, 0}, {1, 0}}), 0), ZeroAtOrigin);
}

TEST_CASE("oracle_project: unit g reduces to oracle_solve; g = f is free") {
    auto f = poly({{-1, 0}, {0, 0}, {1, 0}});
    auto via_proj = oracle_project(hardy, f, Polynomial<double>::one(), 3);
    auto via_solve = oracle_solve(hardy, f, 3);
    CHECK(via_proj.distance_sq == doctest::Approx(to_double(via_solve.distance_sq)));
    for (std::size_t k = 0; k < via_proj.residual.size(); ++k)
        CHECK(abs_d(via_proj.residual[k] - via_solve.residual[k]) < 1e-14);

    auto self = oracle_project(hardy, f, f, 1);
    CHECK(self.distance_sq == doctest::Approx(0.0));
    for (const auto& c : self.residual) CHECK(abs_d(c) < 1e-12);
}

TEST_CASE("oracle residual is orthogonal to z^j f (self-consistency)") {
    Rng rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t d = 1 + rng.index(5);
        const std::size_t n = rng.index(12);
        auto zeros = sample_zeros(rng, d, 0.3, 3.0, 0.2);
        std::vector<Complex<double>> zr;
        for (auto& z : zeros) zr.push_back(Complex<double>::from(z));
        auto f = Polynomial<double>::from_zeros(std::span<const Complex<double>>(zr),
                                                Complex<double>(1.0));
        auto sol = oracle_solve(hardy, f, n);
        CHECK(orthogonality_defect(hardy, f, std::span<const Complex<double>>(sol.residual), n) <
              1e-9);
    }
}

TEST_CASE("gram and oracle agree exactly in the rational backend") {
    // zeros at rational points, integer alpha: every quantity is exact
    const std::vector<std::complex<double>> zpts{{1.0, 0.0}, {-0.5, 0.0}, {2.0, 0.0}};
    const ZeroSet zeros(zpts);
    for (double alpha : {-1.0, 0.0, 1.0}) {
        const auto omega = WeightSequence::power(alpha);
        for (std::size_t n : {0u, 1u, 4u, 9u}) {
            auto sys = build_gram<rational>(omega, zeros, n);
            auto closed = solve_optimal(sys);
            const auto zr = zeros.as<rational>();
            auto f = Polynomial<rational>::from_zeros(std::span<const Complex<rational>>(zr),
                                                      Complex<rational>(rational(1)));
            auto brute = oracle_solve(omega, f, n);
            CHECK(closed.distance_sq == brute.distance_sq);
            REQUIRE(closed.residual.size() == brute.residual.size());
            for (std::size_t k = 0; k < closed.residual.size(); ++k)
                CHECK(closed.residual[k] == brute.residual[k]);
            REQUIRE(closed.pn.degree() == brute.pn.degree());
            for (int k = 0; k <= closed.pn.degree(); ++k)
                CHECK(closed.pn.coeff(k) == brute.pn.coeff(k));
        }
    }
}

TEST_CASE("oracle matches the Hankel pipeline exactly for (z-1)^d") {
    for (double alpha : {-1.0, 0.0, 1.0}) {
        const auto omega = WeightSequence::power(alpha);
        for (std::size_t d : {1u, 2u, 3u, 4u}) {
            for (std::size_t n : {0u, 3u, 8u}) {
                auto closed = solve_multiplicity(build_hankel<rational>(omega, d, n));
                std::vector<Complex<rational>> ones(d, Complex<rational>(rational(1)));
                auto f = Polynomial<rational>::from_zeros(
                    std::span<const Complex<rational>>(ones), Complex<rational>(rational(1)));
                auto brute = oracle_solve(omega, f, n);
                CHECK(closed.distance_sq == brute.distance_sq);
                REQUIRE(closed.residual.size() == brute.residual.size());
                for (std::size_t k = 0; k < closed.residual.size(); ++k)
                    CHECK(closed.residual[k] == brute.residual[k]);
            }
        }
    }
}

TEST_CASE("randomized equivalence harness") {
    VerifyConfig cfg;
    cfg.seed = 2024;
    cfg.cases = 24;
    cfg.n_max = 16;
    cfg.include_multiplicity = true;
    const auto out = run_equivalence(cfg);
    CHECK(out.cases_run == 24);
    CHECK(out.failures == 0);
    CHECK(out.worst_rel_error < 1e-8);

    VerifyConfig bad;
    bad.cases = 0;
    CHECK_THROWS_AS(run_equivalence(bad), InvalidArgument);
}

TEST_CASE("float64 equivalence on a well-separated instance") {
    VerifyConfig cfg;
    cfg.seed = 99;
    cfg.cases = 12;
    cfg.d_max = 4;
    cfg.n_max = 12;
    cfg.min_separation = 0.4;
    cfg.backend = PrecisionBackend::float64();
    cfg.rel_tol = 1e-6; // float-on-float comparison needs headroom
    const auto out = run_equivalence(cfg);
    CHECK(out.failures == 0);
}
