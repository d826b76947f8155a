#pragma once

// Contour-side evaluation of the weighted wrapped n-correlation.  The
// expectation splits over path assignments K + L + M = {1..n}: slots in K
// integrate on the vertical line Re z = delta, slots in L on Re z = -delta,
// slots in M on Re z = 0, with the kernel J*(z_K; -z_L) against
// F(i z_1, ..., i z_n) and coefficient N^{|M|} (2 pi)^{-n}.
//
// Every path integral is rewritten in the rotated variables t_j = w + v_j,
// sum v_j = 0 (Jacobian n).  The kernel and the f factor depend on the
// differences only, so the weight product is the sole carrier of w and its
// w-integral collapses to a compactly supported Fourier integral of the g
// densities.  The remaining (n-1)-dimensional v-integral is done on
// oscillation-resolving composite Gauss-Legendre grids whose extent comes
// from scanning the weight-overlap envelope down to tail_tol.

#include <utility>
#include <vector>

#include "numeric.hpp"
#include "special_functions.hpp"
#include "test_functions.hpp"

namespace ncorr {

struct contour_spec {
    PhiSpec phi;
    std::vector<WeightSpec> weights;  // one per slot
    int npar;                         // matrix size N
    double tpar;                      // weight dilation T
    double delta = 0.4;               // offset of the shifted vertical lines
    int q = 0;                        // J* truncation level, q < 1 keeps all strata
    double tail_tol = 1e-8;           // envelope level at which v-ranges are cut
    double pole_tol = default_pole_tol;
    int f_nodes = 0;                  // per-axis override for the f factor
};

// F(x) = f(N x / 2 pi) prod_j h_j(x_j / T) at complex arguments
cx big_f_eval(const contour_spec& spec, const std::vector<cx>& x);

struct contour_value {
    double value;
    double err;  // node-density sensitivity plus imaginary leakage
};

contour_value correlation_contour(const contour_spec& spec);

// Truncation level 1 via the matching-sum kernel; path terms with
// |K| != |L| drop identically.
contour_value correlation_contour_q1(const contour_spec& spec);

// Both of the above on shared quadrature grids, so their difference is
// resolved far below the absolute accuracy of either.
std::pair<contour_value, contour_value> correlation_contour_both(const contour_spec& spec);

// One path term: the z-integral with slots of kset on Re z = delta, slots of
// lset on Re z = -delta and the rest central, without the N^{|M|} (2 pi)^{-n}
// bookkeeping.  kset and lset are disjoint 0-based slot lists.
cx term_integral(const contour_spec& spec, const std::vector<int>& kset,
                 const std::vector<int>& lset);

struct decay_row {
    double delta;    // line offset the row was evaluated at
    double value;    // stratum contribution to the correlation value
    double l1_mass;  // same combination with the integrand in absolute value
};

// Contribution of the |S| = |T| = s_size strata of J* across all path terms,
// tabulated against the line offsets in deltas.
std::vector<decay_row> decay_probe(const contour_spec& spec, int s_size,
                                   const std::vector<double>& deltas);

}  // namespace ncorr
