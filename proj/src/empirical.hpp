#pragma once

// Empirical and determinantal estimates of n-correlation sums over U(N)
// eigenangles.  Three routes to the same quantities: direct Monte Carlo over
// sampled matrices, quadrature against the sine-kernel determinant, and (for
// N <= 3) exact integration against the joint eigenangle density.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "sampler.hpp"
#include "test_functions.hpp"

namespace ncorr {

struct corr_result {
    cx value{};
    double err = 0.0;        // one-sigma for Monte Carlo, refinement gap for quadrature
    long long tuples = 0;    // tuple evaluations that entered the sum
    std::string method;
};

using angle_fn = std::function<cx(const std::vector<double>&)>;

// Monte Carlo mean of the sum of F over ordered tuples of distinct
// eigenangles, one sum per matrix.
corr_result mc_distinct_tuples(const std::vector<eigen_sample>& samples,
                               const angle_fn& func, int n);

// Same expectation by quadrature: integrate F against the n-point sine-kernel
// determinant on [0, 2pi)^n.  Exact for trigonometric polynomials once the
// per-axis node count exceeds the total degree.  n <= 3.
corr_result determinantal_value(const angle_fn& func, int npar, int n, int nodes);

// Exact expectation for N <= 3 straight from the joint density, bypassing the
// determinantal form entirely.  band bounds the per-axis frequency content of
// F; node counts are chosen so the periodic trapezoid rule is exact.
corr_result small_n_oracle(const angle_fn& func, int npar, int n, int band);

// Monte Carlo for the band-limited wrapped statistic: sum over all ordered
// tuples of periodized eigenangles (equal indices included) of
//   f(N x / 2pi) prod_j h_j(x_j / T)
// with f the pair profile of phi.  n = phi.n must be 1 or 2.
corr_result mc_wrapped_weighted(const std::vector<eigen_sample>& samples,
                                const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                                double tpar, double window_tol = 1e-9);

// The same wrapped weighted expectation evaluated exactly through the
// sine-kernel determinant, reduced to low-dimensional quadrature.  n <= 2.
corr_result determinantal_wrapped(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                                  int npar, double tpar, double window_tol = 1e-12);

}  // namespace ncorr
