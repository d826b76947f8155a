#pragma once

#include <functional>
#include <vector>

#include "numeric.hpp"

namespace ncorr {

// Gauss-Legendre nodes/weights on [a, b] (GSL glfixed tables underneath).
struct gl_rule {
    std::vector<double> x;
    std::vector<double> w;
};

gl_rule gauss_legendre(int n, double a, double b);

// Shared cache of rules on [-1, 1], node count rounded up to a multiple of 32
// so repeated adaptive evaluations reuse a handful of tables.  Callers apply
// their own affine map.  Map nodes are stable, so returned references survive
// later insertions; a lock covers the concurrent case.
const gl_rule& unit_rule(int n);

// node count that resolves an oscillation e^{i omega u} on a unit-scaled panel
int osc_nodes(double omega);

// Equal-weight nodes theta_i = (i + jitter) * 2pi / m on [0, 2pi), weight
// 2pi/m.  Spectrally accurate for smooth periodic integrands; exact for
// trigonometric polynomials of degree < m at any jitter.
gl_rule periodic_trapezoid(int m, double jitter = 0.0);

// One-dimensional integral with an error estimate from node doubling:
// result.first = integral at 2n nodes, result.second = |I_2n - I_n|.
std::pair<double, double> integrate_refined(const std::function<double(double)>& f,
                                            double a, double b, int n);
std::pair<cx, double> integrate_refined_cx(const std::function<cx(double)>& f,
                                           double a, double b, int n);

}  // namespace ncorr
