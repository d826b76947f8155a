#include "special_functions.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace ncorr {

shift_set negated(const shift_set& s) {
    shift_set out;
    out.reserve(s.size());
    for (cx v : s) out.push_back(-v);
    return out;
}

cx reduce_period(cx x) {
    double k = std::round(x.imag() / two_pi);
    if (k == 0.0) return x;
    return cx(x.real(), x.imag() - k * two_pi);
}

static void check_pole(cx u, double pole_tol, const char* fn) {
    if (std::abs(u) < pole_tol) {
        std::ostringstream os;
        os << fn << ": argument within pole tolerance " << pole_tol
           << " of a pole (reduced |u| = " << std::abs(u) << ")";
        throw_pole(os.str());
    }
}

cx z_eval(cx x, double pole_tol) {
    cx u = reduce_period(x);
    check_pole(u, pole_tol, "z_eval");
    double re = u.real();
    if (re > 60.0) {
        // e^{-u} negligible or tiny; 1/(1-e^{-u}) directly, no cancellation
        return 1.0 / (1.0 - std::exp(-u));
    }
    if (re < -60.0) {
        cx t = std::exp(u);  // tiny
        return t / (t - 1.0);
    }
    // e^{u/2} / (2 sinh(u/2)) is exact at this scale and stable near u = 0.
    cx h = 0.5 * u;
    return std::exp(h) / (2.0 * std::sinh(h));
}

cx log_z_deriv(cx x, double pole_tol) { return 1.0 - z_eval(x, pole_tol); }

cx log_z_deriv2(cx x, double pole_tol) {
    cx u = reduce_period(x);
    check_pole(u, pole_tol, "log_z_deriv2");
    if (std::abs(u.real()) > 60.0) {
        // 1/(4 sinh^2) underflows gracefully as e^{-|Re u|}
        cx v = (u.real() > 0) ? u : -u;
        cx e = std::exp(-v);
        cx d = 1.0 - e;
        return e / (d * d);
    }
    cx s = std::sinh(0.5 * u);
    return 0.25 / (s * s);
}

cx z_product(const shift_set& a, const shift_set& b, bool dagger, double pole_tol) {
    cx prod = 1.0;
    for (cx alpha : a) {
        for (cx beta : b) {
            cx u = reduce_period(alpha + beta);
            if (dagger && std::abs(u) < pole_tol) continue;
            prod *= z_eval(alpha + beta, pole_tol);
        }
    }
    return prod;
}

double sn_kernel(double alpha, int npar) {
    if (npar <= 0) throw_invalid("sn_kernel: matrix size must be positive");
    double m = std::round(alpha / two_pi);
    double v = alpha - m * two_pi;
    // sign (-1)^{m(npar-1)} from shifting both sines by pi*m
    long long mi = static_cast<long long>(m);
    double sign = ((mi % 2 != 0) && ((npar - 1) % 2 != 0)) ? -1.0 : 1.0;
    if (v == 0.0) return sign * static_cast<double>(npar);
    return sign * std::sin(0.5 * npar * v) / std::sin(0.5 * v);
}

}  // namespace ncorr
