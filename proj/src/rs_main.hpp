#pragma once

// Main-term formulas for the weighted n-correlation: the ordered-partition
// sum, the equivalent pair-system (combinatorial-sieve) form, and the
// per-term asymptotic that the contour integrals converge to.  Two routes to
// the same number, organized differently on purpose: their agreement is a
// bookkeeping audit, not a numerical coincidence.

#include <vector>

#include "numeric.hpp"
#include "test_functions.hpp"

namespace ncorr {

// Oriented pairing of distinct slot indices: src[j] pairs with dst[j].  The
// union of src and dst need not cover {0..n-1}; the rest sit at the origin.
struct oriented_pairing {
    std::vector<int> src, dst;
};

// integral over xi_j > 0 of prod_j xi_j * Phi evaluated with +xi_j in slot
// src[j], -xi_j in slot dst[j], zero elsewhere.  nodes = 0 uses the closed
// form for the product bump; nodes > 0 forces tensor quadrature.
double rs_integral(const oriented_pairing& p, const PhiSpec& phi, int nodes = 0);

// kappa * (N T / 2pi) * sum over ordered partitions K, L, M with |K| = |L|
// and bijections sigma: K -> L of rs_integral.
double rs_main(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
               int npar, double tpar);

// Same main term arranged over unordered systems of disjoint slot pairs with
// signed pair variables; logscale generalizes N so zeta-scale predictions
// (logscale = log T_cut) reuse the identical code path.
double rs_sarnak_form(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                      double logscale, double tpar);

// Large-N limit of one contour term: (N T) N^{2r - n} (2 pi i)^n (kappa/2pi)
// times the pairing integral, r = |src|.
cx asymptotic_term(const oriented_pairing& p, const PhiSpec& phi,
                   const std::vector<WeightSpec>& weights, int npar, double tpar);

}  // namespace ncorr
