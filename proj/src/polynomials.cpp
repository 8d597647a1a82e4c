#include "opa/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace opa {

namespace {
std::string fmt(const std::complex<double>& z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}
} // namespace

ZeroSet::ZeroSet(std::vector<std::complex<double>> zeros) : z_(std::move(zeros)) {
    if (z_.empty())
        throw InvalidArgument("zero set is empty");
    for (const auto& z : z_)
        if (std::abs(z) <= eps_origin)
            throw InvalidArgument("zero at the origin is not allowed: f(0) must be nonzero " +
                                  fmt(z));
    std::stable_sort(z_.begin(), z_.end(),
                     [](const std::complex<double>& a, const std::complex<double>& b) {
                         return std::abs(a) < std::abs(b);
                     });
    for (std::size_t i = 0; i < z_.size(); ++i)
        for (std::size_t j = i + 1; j < z_.size(); ++j)
            if (std::abs(z_[i] - z_[j]) <= eps_separation)
                throw InvalidArgument("zeros must be pairwise distinct: " + fmt(z_[i]) +
                                      " and " + fmt(z_[j]) + " coincide");
    d1_ = 0;
    for (const auto& z : z_)
        if (std::fabs(std::abs(z) - 1.0) < classification_tol) ++d1_;
}

bool ZeroSet::all_interior() const {
    for (const auto& z : z_)
        if (std::abs(z) >= 1.0) return false;
    return true;
}

bool ZeroSet::none_interior() const {
    for (const auto& z : z_)
        if (std::abs(z) < 1.0 - classification_tol) return false;
    return true;
}

} // namespace opa
