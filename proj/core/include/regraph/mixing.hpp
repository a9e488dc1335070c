#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regraph/state_space.hpp"
#include "regraph/transition_matrix.hpp"

namespace regraph {

// True when every state reaches every other through off-diagonal
// kernel entries.
bool kernel_connected(const TransitionMatrix& p);

// Smallest t such that from every start the total-variation distance
// to uniform is at most eps.  Exact: the kernel is powered as integer
// numerator matrices over denom^t, eps is compared as the exact
// binary rational of the given double, and the result is found by
// repeated squaring plus bit-greedy refinement (worst-start TV is
// non-increasing in t).  Throws Error for eps outside (0,1) and
// NotConnectedError when unreachable states keep TV above eps
// forever.
uint64_t exact_mixing_time(const TransitionMatrix& p, double eps);

// Worst-start TV distance to uniform at each t = 0..t_end, in double
// precision (for curve output; use exact_mixing_time for decisions).
std::vector<double> exact_tv_curve(const TransitionMatrix& p, uint64_t t_end);

// 1 - lambda_2 over the dense double kernel.  Lazy chains have a
// nonnegative spectrum, so lambda_2 is also the second-largest
// modulus.  Size-1 spaces get gap 1 by convention.  Throws
// NumericalFailureError when the eigensolver does not converge.
double spectral_gap(const TransitionMatrix& p);

// Runs `chains` independent chains from circulant_start(n, d) for t
// steps, chain c seeded with derive_seed(seed, c), and returns the TV
// distance between the end-state histogram and uniform.  Chains run
// in parallel (REGRAPH_THREADS, 0 or unset = hardware); the result
// does not depend on the thread count.  Pass `space` to reuse an
// enumeration.
double empirical_tv(int n, int d, uint64_t t, uint64_t chains, uint64_t seed,
                    const StateSpace* space = nullptr);

// Same ensemble, observed at every t in the sorted grid; one value
// per grid point.
std::vector<double> empirical_tv_curve(int n, int d, const std::vector<uint64_t>& t_grid,
                                       uint64_t chains, uint64_t seed,
                                       const StateSpace* space = nullptr);

// The mixing-time bound formulas evaluated in double precision with
// natural logarithms.  theorem_bound is constructed as old_bound *
// ratio with ratio = d^8, so the quotient is exact by construction.
struct BoundsReport {
    double theorem_bound = 0; // d^23 n^8 (dn ln(dn) + ln(1/eps))
    double old_bound = 0;     // d^15 n^8 (dn ln(dn) + ln(1/eps))
    double load_bound = 0;    // 2 d^22 n^7
    double ratio = 0;         // d^8
    // 2 d^20 n^5 / |Omega|; set only when the state count is supplied.
    std::optional<double> flow_bound;
};

BoundsReport bounds_report(int n, int d, double eps,
                           std::optional<double> omega_size = std::nullopt);

} // namespace regraph
