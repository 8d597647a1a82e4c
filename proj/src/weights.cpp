#include "opa/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace opa {

WeightSequence WeightSequence::power(double alpha) {
    if (!std::isfinite(alpha))
        throw InvalidArgument("power weight exponent must be finite");
    WeightSequence w;
    w.kind_ = Kind::power;
    w.alpha_ = alpha;
    return w;
}

WeightSequence WeightSequence::custom(std::vector<double> values, double ratio_rho) {
    if (values.empty())
        throw InvalidArgument("custom weight table is empty");
    if (values.front() != 1.0)
        throw InvalidArgument("omega_0 must equal 1");
    for (std::size_t k = 0; k < values.size(); ++k)
        if (!(values[k] > 0.0) || !std::isfinite(values[k]))
            throw InvalidArgument("omega_" + std::to_string(k) + " must be a positive real");

    WeightSequence w;
    w.kind_ = Kind::custom_table;
    w.table_ = std::move(values);

    // Admissibility diagnostic: omega_k / omega_{k+1} should stay in
    // [1 - rho, 1 + rho] over the supplied range. Advisory only.
    for (std::size_t k = 0; k + 1 < w.table_.size(); ++k) {
        const double ratio = w.table_[k] / w.table_[k + 1];
        if (ratio < 1.0 - ratio_rho || ratio > 1.0 + ratio_rho) {
            std::ostringstream msg;
            msg << "weight ratio omega_" << k << "/omega_" << (k + 1) << " = " << ratio
                << " outside [" << 1.0 - ratio_rho << ", " << 1.0 + ratio_rho << "]";
            w.diagnostics_.push_back(msg.str());
        }
    }
    return w;
}

WeightSequence WeightSequence::from_csv(const std::string& path, double ratio_rho) {
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open weight CSV: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw InvalidArgument("empty weight CSV: " + path);
    // strip BOM / whitespace / trailing CR
    auto trim = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.pop_back();
        std::size_t b = s.find_first_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b);
    };
    if (trim(line) != "omega")
        throw InvalidArgument("weight CSV must start with header \"omega\": " + path);
    std::vector<double> values;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            double v = std::stod(line, &pos);
            if (pos != line.size()) throw std::invalid_argument(line);
            values.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgument("bad value at " + path + ":" + std::to_string(lineno) +
                                  ": \"" + line + "\"");
        }
    }
    return custom(std::move(values), ratio_rho);
}

WeightFlags WeightSequence::flags() const {
    WeightFlags f;
    if (is_power()) {
        f.divergent_reciprocal_sum = alpha_ <= 1.0;
        f.doubling_constant = std::pow(2.0, std::fabs(alpha_));
        f.monotone = alpha_ >= 0.0 ? Monotonicity::non_decreasing
                                   : Monotonicity::non_increasing;
        return f;
    }
    f.divergent_reciprocal_sum = std::nullopt; // not decidable from a finite table
    bool nondec = true, noninc = true;
    for (std::size_t k = 0; k + 1 < table_.size(); ++k) {
        if (table_[k + 1] < table_[k]) nondec = false;
        if (table_[k + 1] > table_[k]) noninc = false;
    }
    f.monotone = nondec ? Monotonicity::non_decreasing
                        : (noninc ? Monotonicity::non_increasing : Monotonicity::none);
    // Doubling constant over the supplied range: C = max over n and
    // t in {0..n+1} with n+t in range of the two-sided ratio.
    if (table_.size() >= 2 && table_.size() <= 4096) {
        double c = 1.0;
        for (std::size_t n = 0; n < table_.size(); ++n) {
            const std::size_t hi = std::min(table_.size() - 1, 2 * n + 1);
            for (std::size_t m = n; m <= hi; ++m) {
                const double r = table_[m] / table_[n];
                c = std::max(c, std::max(r, 1.0 / r));
            }
        }
        f.doubling_constant = c;
    }
    return f;
}

WeightSequence::FullKernelResult WeightSequence::full_kernel(const Complex<double>& z,
                                                             const Complex<double>& w,
                                                             double tol) const {
    if (!(tol > 0.0))
        throw InvalidArgument("full_kernel tolerance must be positive");
    const Complex<double> u = z * conj(w);
    const double r2 = norm_sq(u);
    if (r2 >= 1.0)
        throw DivergentKernel("full kernel diverges: |z w̄| >= 1");
    const double r = std::sqrt(r2);

    // Window wide enough that (1/omega_k) r^k has passed its maximum:
    // for omega_k = (k+1)^alpha with alpha < 0 the maximum of (k+1)^|alpha| r^k
    // sits near |alpha| r / (1-r).
    std::size_t window = 64;
    if (is_power() && alpha_ < 0.0 && r > 0.0)
        window = std::max<std::size_t>(
            64, static_cast<std::size_t>(std::ceil(-alpha_ * r / (1.0 - r))) + 8);

    KahanSum<Complex<double>> acc;
    acc.compensate = true;
    Complex<double> upow(1.0);
    const std::size_t hard_cap = 20'000'000;
    for (std::size_t k = 0; k < hard_cap; ++k) {
        bool have_weight = true;
        double wk = 0.0;
        try {
            wk = weight<double>(k);
        } catch (const OutOfRange&) {
            have_weight = false;
        }
        if (!have_weight)
            throw OutOfRange("custom weight table exhausted before reaching tolerance " +
                             std::to_string(tol));
        acc.add(upow / Complex<double>(wk));
        upow *= u;

        if (r == 0.0) return {acc.sum, k};

        // tail bound after m = k terms
        double inv_w_max = 0.0;
        bool window_complete = true;
        for (std::size_t j = k + 1; j <= k + window; ++j) {
            double wj;
            try {
                wj = weight<double>(j);
            } catch (const OutOfRange&) {
                window_complete = false;
                break;
            }
            inv_w_max = std::max(inv_w_max, 1.0 / wj);
        }
        if (window_complete) {
            const double bound = inv_w_max * std::pow(r, static_cast<double>(k + 1)) / (1.0 - r);
            if (bound < tol) return {acc.sum, k};
        }
    }
    throw PrecisionExhausted("full kernel did not reach tolerance within term cap");
}

} // namespace opa
