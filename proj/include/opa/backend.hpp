#ifndef OPA_BACKEND_HPP
#define OPA_BACKEND_HPP

#include <string>

#include "opa/scalar.hpp"

namespace opa {

// Runtime description of the scalar precision used by a pipeline.
struct PrecisionBackend {
    enum class Kind { float64, extended, exact_rational };

    Kind kind = Kind::float64;
    unsigned digits = 60; // decimal digits, extended kind only

    static PrecisionBackend float64() { return {Kind::float64, 0}; }
    static PrecisionBackend extended(unsigned digits = 60) { return {Kind::extended, digits}; }
    static PrecisionBackend exact() { return {Kind::exact_rational, 0}; }

    bool is_exact() const { return kind == Kind::exact_rational; }

    // Relative rounding unit; 0 for the exact backend.
    double epsilon() const;

    // Default tolerance for residual/orthogonality checks: 1e-9 for float64,
    // 1e-(digits-10) for extended, exact zero handled by callers.
    double check_tolerance() const;

    std::string name() const;

    // Parses "f64" | "ext:<digits>" | "rational". Throws InvalidArgument.
    static PrecisionBackend parse(const std::string& text);
};

// RAII guard: activates the mpfr working precision for an extended-backend
// computation and restores the previous one.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(const PrecisionBackend& b)
        : previous_(bigfloat::default_precision()) {
        if (b.kind == PrecisionBackend::Kind::extended && b.digits > 0)
            bigfloat::default_precision(b.digits);
    }
    ~PrecisionGuard() { bigfloat::default_precision(previous_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned previous_;
};

template <class R>
struct ScalarTag {
    using type = R;
};

// Instantiates `f` with the scalar type selected by `b`.
template <class F>
decltype(auto) with_backend(const PrecisionBackend& b, F&& f) {
    switch (b.kind) {
        case PrecisionBackend::Kind::extended: {
            PrecisionGuard guard(b);
            return f(ScalarTag<bigfloat>{});
        }
        case PrecisionBackend::Kind::exact_rational:
            return f(ScalarTag<rational>{});
        case PrecisionBackend::Kind::float64:
        default:
            return f(ScalarTag<double>{});
    }
}

} // namespace opa

#endif
