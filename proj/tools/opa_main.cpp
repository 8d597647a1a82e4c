// opa: optimal polynomial approximants to 1/f in weighted Hardy spaces.
//
// Subcommands: approx, sweep, verify, asymptotics, kernel.
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 numerical failure.

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "opa/backend.hpp"
#include "opa/boundary.hpp"
#include "opa/gram.hpp"
#include "opa/io.hpp"
#include "opa/multiplicity.hpp"
#include "opa/oracle.hpp"
#include "opa/verify.hpp"
#include "opa/weights.hpp"

namespace {

using namespace opa;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_numerical = 3;

struct CommonOpts {
    std::optional<double> alpha;
    std::string weights_csv;
    std::string backend = "auto";
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 7;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--alpha", o.alpha, "power weight exponent: omega_k = (k+1)^alpha");
    cmd->add_option("--weights-csv", o.weights_csv,
                    "custom weight table (one-column CSV with header 'omega')");
    cmd->add_option("--backend", o.backend,
                    "scalar backend: auto | f64 | ext:<digits> | rational");
    cmd->add_option("--out", o.out, "output file (stdout if omitted)");
    cmd->add_option("--format", o.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", o.seed, "random seed (verify)");
}

WeightSequence make_weight(const CommonOpts& o) {
    if (o.alpha && !o.weights_csv.empty())
        throw InvalidArgument("give either --alpha or --weights-csv, not both");
    if (!o.weights_csv.empty()) {
        auto w = WeightSequence::from_csv(o.weights_csv);
        for (const auto& diag : w.diagnostics()) std::cerr << "warning: " << diag << "\n";
        return w;
    }
    return WeightSequence::power(o.alpha.value_or(0.0));
}

// --backend flag beats OPA_BACKEND beats the per-command auto choice.
PrecisionBackend resolve_backend(const std::string& flag, const PrecisionBackend& auto_choice) {
    if (flag != "auto" && !flag.empty()) return PrecisionBackend::parse(flag);
    if (const char* env = std::getenv("OPA_BACKEND"); env && *env)
        return PrecisionBackend::parse(env);
    return auto_choice;
}

double tolerance_for(const PrecisionBackend& b) {
    const double t = b.check_tolerance();
    return t > 0.0 ? t : 1e-9; // the exact backend checks equality regardless
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::complex<double>> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t semi = text.find(';', pos);
        const std::string item =
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!item.empty()) {
            const std::size_t comma = item.find(',');
            try {
                if (comma == std::string::npos)
                    values.emplace_back(std::stod(item), 0.0);
                else
                    values.emplace_back(std::stod(item.substr(0, comma)),
                                        std::stod(item.substr(comma + 1)));
            } catch (const std::exception&) {
                throw InvalidArgument("bad complex value \"" + item + "\" (expected re,im)");
            }
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (values.empty())
        throw InvalidArgument("empty complex list");
    return values;
}

std::vector<std::size_t> parse_range(const std::string& text, std::size_t step) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) return {static_cast<std::size_t>(std::stoul(text))};
        const std::size_t a = std::stoul(text.substr(0, dots));
        const std::size_t b = std::stoul(text.substr(dots + 2));
        if (b < a)
            throw InvalidArgument("empty range " + text);
        std::vector<std::size_t> out;
        for (std::size_t n = a; n <= b; n += std::max<std::size_t>(step, 1)) out.push_back(n);
        if (out.back() != b) out.push_back(b);
        return out;
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidArgument("bad range \"" + text + "\" (expected a..b)");
    }
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw InvalidArgument("cannot open output file " + out_path);
    f << payload;
}

int cmd_approx(const CommonOpts& common, const std::string& zeros_text, int mult,
               long n_signed, const std::string& leading_text) {
    if ((zeros_text.empty()) == (mult <= 0))
        throw InvalidArgument("give exactly one of --zeros or --mult");
    if (n_signed < 0)
        throw InvalidArgument("n must be >= 0");
    const std::size_t n = static_cast<std::size_t>(n_signed);
    const WeightSequence omega = make_weight(common);

    SolutionReport rep;
    if (!zeros_text.empty()) {
        const ZeroSet zeros{parse_complex_list(zeros_text)};
        std::complex<double> leading{1.0, 0.0};
        if (!leading_text.empty()) leading = parse_complex_list(leading_text).front();
        const bool rational_ok = omega.integer_alpha() && zeros.size() <= 8;
        const auto backend = resolve_backend(
            common.backend,
            rational_ok ? PrecisionBackend::exact() : PrecisionBackend::float64());
        with_backend(backend, [&](auto tag) {
            using R = typename decltype(tag)::type;
            const auto sys = build_gram<R>(omega, zeros, n);
            const auto sol = solve_optimal(sys, Complex<R>::from(leading), tolerance_for(backend));
            rep = make_report(sol, backend.name());
        });
    } else {
        const std::size_t d = static_cast<std::size_t>(mult);
        const bool rational_ok = omega.integer_alpha() && d <= 6;
        const auto backend = resolve_backend(
            common.backend,
            rational_ok ? PrecisionBackend::exact() : PrecisionBackend::extended(60));
        with_backend(backend, [&](auto tag) {
            using R = typename decltype(tag)::type;
            const auto sys = build_hankel<R>(omega, d, n);
            auto sol = solve_multiplicity(sys, tolerance_for(backend));
            // p_n itself comes from the residual and f = (z-1)^d
            std::vector<Complex<R>> ones(d, Complex<R>(R(1)));
            const auto f = Polynomial<R>::from_zeros(std::span<const Complex<R>>(ones),
                                                     Complex<R>(R(1)));
            sol.pn = recover_pn(std::span<const Complex<R>>(sol.residual), f, n,
                                tolerance_for(backend));
            rep = make_report(sol, backend.name());
        });
        rep.zeros = {{1.0, 0.0}};
    }

    write_output(common.out, solution_json(rep).dump(2));
    std::cerr << "dist^2 = " << rep.distance_sq << ", wiener = " << rep.wiener
              << ", residual degree = " << (rep.residual_coeffs.size() - 1) << "\n";
    return exit_ok;
}

int cmd_sweep(const CommonOpts& common, const std::string& zeros_text,
              const std::string& n_text, std::size_t n_step, const std::string& compact,
              double exclusion_radius, const std::string& g_text) {
    const WeightSequence omega = make_weight(common);
    const ZeroSet zeros{parse_complex_list(zeros_text)};
    const auto n_values = parse_range(n_text, n_step);

    CompactSampler sampler = CompactSampler::parse(compact);
    sampler.exclude(zeros, exclusion_radius);

    std::optional<std::vector<std::complex<double>>> g;
    if (!g_text.empty()) g = parse_complex_list(g_text);

    const auto backend = resolve_backend(common.backend, PrecisionBackend::float64());
    const RateReport report = rate_sweep(omega, zeros, g, n_values, sampler, backend);

    write_output(common.out, common.format == "csv" ? rate_report_csv(report)
                                                    : rate_report_json(report).dump(2));
    return exit_ok;
}

int cmd_verify(const CommonOpts& common, std::size_t cases, std::size_t d_max,
               std::size_t n_max, bool with_mult) {
    VerifyConfig cfg;
    cfg.seed = common.seed;
    cfg.cases = cases;
    cfg.d_max = d_max;
    cfg.n_max = n_max;
    cfg.alpha = common.alpha;
    cfg.include_multiplicity = with_mult;
    cfg.backend = resolve_backend(common.backend, PrecisionBackend::extended(60));
    if (common.alpha && *common.alpha != std::nearbyint(*common.alpha) &&
        cfg.backend.is_exact())
        throw InvalidArgument("rational backend needs an integer alpha");

    const VerifyOutcome out = run_equivalence(cfg);
    std::cout << "cases: " << out.cases_run << ", failures: " << out.failures
              << ", worst relative error: " << out.worst_rel_error << "\n";
    if (out.failures > 0) {
        std::cout << "worst instance: " << out.worst_instance << "\n";
        return exit_verify_failed;
    }
    return exit_ok;
}

int cmd_asymptotics(const CommonOpts& common, int mult, std::size_t n_max) {
    if (mult <= 0)
        throw InvalidArgument("--mult must be >= 1");
    const WeightSequence omega = make_weight(common);
    if (!omega.is_power() || omega.alpha() > 1.0)
        throw OutOfDomain("asymptotics requires a power weight with alpha <= 1");
    const std::size_t d = static_cast<std::size_t>(mult);

    const bool rational_ok = omega.integer_alpha() && d <= 6;
    const auto backend = resolve_backend(
        common.backend,
        rational_ok ? PrecisionBackend::exact() : PrecisionBackend::extended(60));

    std::vector<AsymptoticRow> rows = with_backend(backend, [&](auto tag) {
        using R = typename decltype(tag)::type;
        return asymptotic_check<R>(omega, d, n_max, tolerance_for(backend));
    });

    write_output(common.out, common.format == "csv" ? asymptotic_csv(rows)
                                                    : asymptotic_json(rows).dump(2));
    const auto& last = rows.back();
    std::cerr << "final ratio " << last.ratio << " vs limit " << last.limit << " (|err| "
              << last.abs_err << ")\n";
    return exit_ok;
}

int cmd_kernel(const CommonOpts& common, std::size_t m, const std::string& z_text,
               const std::string& w_text) {
    const WeightSequence omega = make_weight(common);
    const auto z = parse_complex_list(z_text).front();
    const auto w = parse_complex_list(w_text).front();
    const auto v = omega.kernel_partial_sum<double>(m, Complex<double>::from(z),
                                                    Complex<double>::from(w));
    std::cout << v.re << (v.im < 0 ? " - " : " + ") << std::fabs(v.im) << "i\n";
    const auto closed = omega.kernel_partial_sum_closed<double>(m, Complex<double>::from(z),
                                                                Complex<double>::from(w));
    if (closed)
        std::cout << "closed form: " << closed->re << (closed->im < 0 ? " - " : " + ")
                  << std::fabs(closed->im) << "i\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal polynomial approximants to 1/f in weighted Hardy spaces"};
    app.require_subcommand(1);

    CommonOpts o_approx, o_sweep, o_verify, o_asym, o_kernel;

    auto* approx = app.add_subcommand("approx", "solve one instance and emit the solution");
    add_common(approx, o_approx, "json");
    std::string zeros_text, leading_text;
    int mult = 0;
    long n_approx = 0;
    approx->add_option("--zeros", zeros_text, "zeros of f as re,im;re,im;...");
    approx->add_option("--mult", mult, "multiplicity d for f = (z-1)^d");
    approx->add_option("--n", n_approx, "approximant degree")->required();
    approx->add_option("--leading", leading_text, "leading coefficient of f (default 1)");

    auto* sweep = app.add_subcommand("sweep", "rate sweep over a range of degrees");
    add_common(sweep, o_sweep, "csv");
    std::string sweep_zeros, sweep_n = "0..10", compact = "disc:1", sweep_g;
    std::size_t sweep_step = 1;
    double excl = CompactSampler::default_exclusion_radius;
    sweep->add_option("--zeros", sweep_zeros, "zeros of f")->required();
    sweep->add_option("--n", sweep_n, "degree range a..b");
    sweep->add_option("--n-step", sweep_step, "range step");
    sweep->add_option("--compact", compact,
                      "compact set: point:re,im | disc:r[:bp[:grid]] | arc:c:hw[:pts], "
                      "union with +");
    sweep->add_option("--exclusion-radius", excl, "radius removed around zeros");
    sweep->add_option("--g", sweep_g, "project g instead of 1 (coefficients re,im;...)");

    auto* verify = app.add_subcommand("verify", "randomized oracle-equivalence check");
    add_common(verify, o_verify, "json");
    std::size_t cases = 50, d_max = 6, n_max_verify = 30;
    bool with_mult = false;
    verify->add_option("--cases", cases, "number of random instances");
    verify->add_option("--d-max", d_max, "max zero count");
    verify->add_option("--n-max", n_max_verify, "max approximant degree");
    verify->add_flag("--with-mult", with_mult, "also compare the Hankel pipeline");

    auto* asym = app.add_subcommand("asymptotics", "A_{1,n} normalized-ratio table");
    add_common(asym, o_asym, "csv");
    int asym_mult = 1;
    std::size_t asym_nmax = 2000;
    asym->add_option("--mult", asym_mult, "multiplicity d")->required();
    asym->add_option("--n-max", asym_nmax, "largest degree in the sweep");

    auto* kernel = app.add_subcommand("kernel", "debug: evaluate k_m(z, w)");
    add_common(kernel, o_kernel, "json");
    std::size_t km = 0;
    std::string kz = "0,0", kw = "0,0";
    kernel->add_option("--m", km, "truncation index")->required();
    kernel->add_option("--z", kz, "evaluation point re,im");
    kernel->add_option("--w", kw, "kernel node re,im");

    CLI11_PARSE(app, argc, argv);

    try {
        if (approx->parsed()) return cmd_approx(o_approx, zeros_text, mult, n_approx, leading_text);
        if (sweep->parsed())
            return cmd_sweep(o_sweep, sweep_zeros, sweep_n, sweep_step, compact, excl, sweep_g);
        if (verify->parsed())
            return cmd_verify(o_verify, cases, d_max, n_max_verify, with_mult);
        if (asym->parsed()) return cmd_asymptotics(o_asym, asym_mult, asym_nmax);
        if (kernel->parsed()) return cmd_kernel(o_kernel, km, kz, kw);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        std::cerr << "hint: retry with --backend ext:60 or --backend rational\n";
        return exit_numerical;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
