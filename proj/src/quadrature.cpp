#include "quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace ncorr {

int osc_nodes(double omega) {
    return 48 + static_cast<int>(std::ceil(0.6 * std::abs(omega)));
}

gl_rule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw_invalid("gauss_legendre: need at least one node");
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    if (!t) throw_numerical("gauss_legendre: table allocation failed");
    gl_rule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &r.x[i], &r.w[i], t);
    }
    gsl_integration_glfixed_table_free(t);
    return r;
}

const gl_rule& unit_rule(int n) {
    n = ((std::max(n, 1) + 31) / 32) * 32;
    static std::mutex mu;
    static std::map<int, gl_rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n, -1.0, 1.0)).first;
    return it->second;
}

gl_rule periodic_trapezoid(int m, double jitter) {
    if (m < 1) throw_invalid("periodic_trapezoid: need at least one node");
    gl_rule r;
    r.x.resize(static_cast<size_t>(m));
    r.w.assign(static_cast<size_t>(m), two_pi / m);
    for (int i = 0; i < m; ++i) r.x[i] = (i + jitter) * two_pi / m;
    return r;
}

std::pair<double, double> integrate_refined(const std::function<double(double)>& f,
                                            double a, double b, int n) {
    auto run = [&](int k) {
        gl_rule r = gauss_legendre(k, a, b);
        kahan_sum<double> s;
        for (size_t i = 0; i < r.x.size(); ++i) s.add(r.w[i] * f(r.x[i]));
        return s.value();
    };
    double coarse = run(n);
    double fine = run(2 * n);
    return {fine, std::abs(fine - coarse)};
}

std::pair<cx, double> integrate_refined_cx(const std::function<cx(double)>& f,
                                           double a, double b, int n) {
    auto run = [&](int k) {
        gl_rule r = gauss_legendre(k, a, b);
        kahan_sum<cx> s;
        for (size_t i = 0; i < r.x.size(); ++i) s.add(r.w[i] * f(r.x[i]));
        return s.value();
    };
    cx coarse = run(n);
    cx fine = run(2 * n);
    return {fine, std::abs(fine - coarse)};
}

}  // namespace ncorr
