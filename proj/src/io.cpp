#include "opa/io.hpp"

#include <cstdio>

namespace opa {

namespace {
// Shortest-roundtrip style formatting, stable across runs.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace

nlohmann::ordered_json complex_list_json(const std::vector<std::complex<double>>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

nlohmann::ordered_json solution_json(const SolutionReport& rep) {
    nlohmann::ordered_json j;
    j["kind"] = rep.kind;
    j["backend"] = rep.backend;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["zeros"] = complex_list_json(rep.zeros);
    j["A"] = complex_list_json(rep.A);
    j["residual_coeffs"] = complex_list_json(rep.residual_coeffs);
    j["pn_coeffs"] = complex_list_json(rep.pn_coeffs);
    j["distance_sq"] = rep.distance_sq;
    j["wiener_norm"] = rep.wiener;
    return j;
}

nlohmann::ordered_json rate_report_json(const RateReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["sup_K"] = r.sup_k;
        row["wiener"] = r.wiener;
        row["dist_sq"] = r.dist_sq;
        if (r.bound)
            row["bound"] = *r.bound;
        else
            row["bound"] = nullptr;
        rows.push_back(row);
    }
    return nlohmann::ordered_json{{"rows", rows}};
}

std::string rate_report_csv(const RateReport& report) {
    std::string out = "n,sup_K,wiener,dist_sq,bound\n";
    for (const auto& r : report.rows) {
        out += std::to_string(r.n);
        out += ',';
        out += num(r.sup_k);
        out += ',';
        out += num(r.wiener);
        out += ',';
        out += num(r.dist_sq);
        out += ',';
        if (r.bound) out += num(*r.bound);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json asymptotic_json(const std::vector<AsymptoticRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["ratio"] = r.ratio;
        row["limit"] = r.limit;
        row["abs_err"] = r.abs_err;
        arr.push_back(row);
    }
    return nlohmann::ordered_json{{"rows", arr}};
}

std::string asymptotic_csv(const std::vector<AsymptoticRow>& rows) {
    std::string out = "n,ratio,limit,abs_err\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += num(r.ratio);
        out += ',';
        out += num(r.limit);
        out += ',';
        out += num(r.abs_err);
        out += '\n';
    }
    return out;
}

} // namespace opa
