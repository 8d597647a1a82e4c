#ifndef OPA_IO_HPP
#define OPA_IO_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "opa/boundary.hpp"
#include "opa/multiplicity.hpp"
#include "opa/solution.hpp"

namespace opa {

// Backend-independent, double-precision view of a solution for reporting.
struct SolutionReport {
    std::string kind;
    std::string backend;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::complex<double>> zeros;
    std::vector<std::complex<double>> A;
    std::vector<std::complex<double>> residual_coeffs;
    std::vector<std::complex<double>> pn_coeffs;
    double distance_sq = 0.0;
    double wiener = 0.0;
};

template <class R>
SolutionReport make_report(const ApproximantSolution<R>& sol, const std::string& backend) {
    SolutionReport rep;
    switch (sol.kind) {
        case ApproximantSolution<R>::Kind::simple_zeros: rep.kind = "simple_zeros"; break;
        case ApproximantSolution<R>::Kind::multiplicity_at_one: rep.kind = "multiplicity"; break;
        case ApproximantSolution<R>::Kind::normal_equations: rep.kind = "oracle"; break;
    }
    rep.backend = backend;
    rep.n = sol.n;
    rep.d = sol.d;
    rep.zeros = sol.zeros.empty() ? std::vector<std::complex<double>>{} : sol.zeros.values();
    for (const auto& a : sol.A) rep.A.push_back(a.to_std());
    for (const auto& c : sol.residual) rep.residual_coeffs.push_back(c.to_std());
    rep.pn_coeffs = sol.pn.to_std();
    rep.distance_sq = to_double(sol.distance_sq);
    rep.wiener = wiener_norm(sol);
    return rep;
}

// Complex vectors serialize as JSON arrays of [re, im] pairs.
nlohmann::ordered_json complex_list_json(const std::vector<std::complex<double>>& v);
nlohmann::ordered_json solution_json(const SolutionReport& rep);

nlohmann::ordered_json rate_report_json(const RateReport& report);
std::string rate_report_csv(const RateReport& report); // header n,sup_K,wiener,dist_sq,bound

nlohmann::ordered_json asymptotic_json(const std::vector<AsymptoticRow>& rows);
std::string asymptotic_csv(const std::vector<AsymptoticRow>& rows); // n,ratio,limit,abs_err

} // namespace opa

#endif
