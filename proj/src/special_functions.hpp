#pragma once

#include <vector>

#include "numeric.hpp"

namespace ncorr {

// Shift sets are plain vectors of complex numbers; helpers below give the
// negated copy that shows up in the paired-index products.
using shift_set = std::vector<cx>;

shift_set negated(const shift_set& s);

inline constexpr double default_pole_tol = 1e-12;

// z(x) = 1 / (1 - e^{-x}).  Meromorphic with simple poles at 2*pi*i*k.
// Evaluation reduces x modulo the 2*pi*i period and uses
// z(u) = e^{u/2} / (2 sinh(u/2)), which has no cancellation near the pole,
// so accuracy is uniform down to the pole tolerance.  Throws errc::pole if
// the reduced argument is within pole_tol of 0.
cx z_eval(cx x, double pole_tol = default_pole_tol);

// z'(x)/z(x) = 1 - z(x).
cx log_z_deriv(cx x, double pole_tol = default_pole_tol);

// (z'/z)'(x) = e^x/(e^x-1)^2 = 1/(4 sinh^2(x/2)).  Even function; double
// poles at 2*pi*i*k.
cx log_z_deriv2(cx x, double pole_tol = default_pole_tol);

// Z(A,B) = prod_{a in A, b in B} z(a+b).  With dagger=true, factors whose
// (period-reduced) argument lies within pole_tol of zero are skipped; this is
// the dagger product used for same-set pairings where the diagonal terms are
// omitted by definition.  Without dagger, an argument inside the pole
// tolerance raises errc::pole.
cx z_product(const shift_set& a, const shift_set& b, bool dagger,
             double pole_tol = default_pole_tol);

// sin(Npar*alpha/2)/sin(alpha/2) with the removable singularities at
// alpha in 2*pi*Z filled by the L'Hopital limit (+-Npar; value Npar at 0).
double sn_kernel(double alpha, int npar);

// argument reduced modulo the 2*pi*i period: returns x - 2*pi*i*round(Im x/2*pi)
cx reduce_period(cx x);

}  // namespace ncorr
