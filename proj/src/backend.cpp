#include "opa/backend.hpp"

#include <cmath>
#include <limits>

#include "opa/errors.hpp"

namespace opa {

double PrecisionBackend::epsilon() const {
    switch (kind) {
        case Kind::float64: return std::numeric_limits<double>::epsilon();
        case Kind::extended: return std::pow(10.0, 1.0 - static_cast<double>(digits));
        case Kind::exact_rational: return 0.0;
    }
    return std::numeric_limits<double>::epsilon();
}

double PrecisionBackend::check_tolerance() const {
    switch (kind) {
        case Kind::float64: return 1e-9;
        case Kind::extended:
            return std::pow(10.0, -(static_cast<double>(digits) - 10.0));
        case Kind::exact_rational: return 0.0;
    }
    return 1e-9;
}

std::string PrecisionBackend::name() const {
    switch (kind) {
        case Kind::float64: return "f64";
        case Kind::extended: return "ext:" + std::to_string(digits);
        case Kind::exact_rational: return "rational";
    }
    return "f64";
}

PrecisionBackend PrecisionBackend::parse(const std::string& text) {
    if (text == "f64" || text == "float64" || text == "double") return float64();
    if (text == "rational" || text == "exact") return exact();
    if (text.rfind("ext", 0) == 0) {
        unsigned digits = 60;
        if (text.size() > 3) {
            if (text[3] != ':')
                throw InvalidArgument("bad backend \"" + text + "\" (want ext:<digits>)");
            try {
                const long v = std::stol(text.substr(4));
                if (v < 16 || v > 100000) throw std::out_of_range(text);
                digits = static_cast<unsigned>(v);
            } catch (const std::exception&) {
                throw InvalidArgument("bad extended-precision digit count in \"" + text + "\"");
            }
        }
        return extended(digits);
    }
    throw InvalidArgument("unknown backend \"" + text +
                          "\" (want f64 | ext:<digits> | rational)");
}

} // namespace opa
