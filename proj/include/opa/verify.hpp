#ifndef OPA_VERIFY_HPP
#define OPA_VERIFY_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opa/backend.hpp"
#include "opa/weights.hpp"

namespace opa {

// Deterministic 64-bit generator (splitmix64): identical streams on every
// platform, unlike the distributions in <random>.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  private:
    std::uint64_t state_;
};

struct VerifyConfig {
    std::uint64_t seed = 7;
    std::size_t cases = 50;
    std::size_t d_max = 6;
    std::size_t n_max = 30;
    std::optional<double> alpha;     // restrict to one exponent; default cycles -1,0,1
    double annulus_min = 0.3;
    double annulus_max = 3.0;
    double min_separation = 0.2;
    double rel_tol = 1e-8;
    PrecisionBackend backend = PrecisionBackend::extended(60);
    bool include_multiplicity = false; // compare Hankel pipeline as well, using (z-1)^d
};

struct VerifyOutcome {
    std::size_t cases_run = 0;
    std::size_t failures = 0;
    double worst_rel_error = 0.0;
    std::string worst_instance; // JSON of the worst (or first failing) instance
};

// Samples instances and checks that the closed-form pipeline and the
// brute-force oracle produce the same residual coefficients and distance.
VerifyOutcome run_equivalence(const VerifyConfig& cfg);

// Random zero set in the annulus with pairwise separation.
std::vector<std::complex<double>> sample_zeros(Rng& rng, std::size_t d, double r_min,
                                               double r_max, double min_sep);

} // namespace opa

#endif
