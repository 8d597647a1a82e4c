#ifndef OPA_SOLUTION_HPP
#define OPA_SOLUTION_HPP

#include <cstddef>
#include <vector>

#include "opa/polynomials.hpp"
#include "opa/scalar.hpp"
#include "opa/weights.hpp"

namespace opa {

// Projection of a polynomial g onto P_n * f: solution vector, residual
// coefficients of g - P_n(g), and the squared distance.
template <class R>
struct ProjectionResult {
    std::vector<Complex<R>> A;        // empty for oracle-produced results
    std::vector<Complex<R>> residual; // coefficients 0..n+d
    R distance_sq{};
};

// A solved optimal-approximant instance. `kind` records which representation
// the residual coefficients came from; residual evaluation picks the kernel
// form only for simple-zero solutions.
template <class R>
struct ApproximantSolution {
    enum class Kind {
        simple_zeros,        // gram_solver: A against k_{n+d}(., z_i)
        multiplicity_at_one, // Hankel pipeline for (z-1)^d
        normal_equations     // brute-force oracle
    };

    Kind kind = Kind::simple_zeros;
    std::size_t n = 0;
    std::size_t d = 0;
    WeightSequence omega = WeightSequence::power(0.0);
    ZeroSet zeros;                    // empty for multiplicity/oracle solutions
    std::vector<Complex<R>> A;        // length d (empty for oracle)
    std::vector<Complex<R>> residual; // d_{k,n}, k = 0..n+d
    Polynomial<R> pn;                 // may be empty if not requested
    R distance_sq{};
};

} // namespace opa

#endif
