#include "empirical.hpp"

#include <algorithm>
#include <cmath>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"

namespace ncorr {

namespace {

// mean and one-sigma standard error of per-matrix sums
corr_result reduce_per_matrix(const std::vector<cx>& per_matrix, long long tuples,
                              const std::string& method) {
    const std::size_t m = per_matrix.size();
    kahan_sum<cx> tot;
    for (const cx& v : per_matrix) tot.add(v);
    corr_result r;
    r.value = tot.value() / static_cast<double>(m);
    if (m > 1) {
        kahan_sum<double> var;
        for (const cx& v : per_matrix) {
            const cx d = v - r.value;
            var.add(std::norm(d));
        }
        r.err = std::sqrt(var.value() / (static_cast<double>(m) * (m - 1.0)));
    }
    r.tuples = tuples;
    r.method = method;
    return r;
}

// sum of F over ordered tuples of n distinct entries of angles
cx distinct_tuple_sum(const std::vector<double>& angles, const angle_fn& func, int n,
                      long long& tuples) {
    const int npar = static_cast<int>(angles.size());
    std::vector<int> idx(n);
    std::vector<double> arg(n);
    kahan_sum<cx> s;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == n) {
            for (int j = 0; j < n; ++j) arg[j] = angles[idx[j]];
            s.add(func(arg));
            ++tuples;
            return;
        }
        for (int i = 0; i < npar; ++i) {
            bool used = false;
            for (int j = 0; j < depth; ++j)
                if (idx[j] == i) { used = true; break; }
            if (!used) {
                idx[depth] = i;
                rec(depth + 1);
            }
        }
    };
    rec(0);
    return s.value();
}

double det_sine(const std::vector<double>& x, int npar, int n) {
    const double dn = npar;
    if (n == 1) return dn;
    if (n == 2) {
        const double s = sn_kernel(x[0] - x[1], npar);
        return dn * dn - s * s;
    }
    const double s12 = sn_kernel(x[0] - x[1], npar);
    const double s13 = sn_kernel(x[0] - x[2], npar);
    const double s23 = sn_kernel(x[1] - x[2], npar);
    return dn * dn * dn + 2.0 * s12 * s13 * s23 - dn * (s12 * s12 + s13 * s13 + s23 * s23);
}

cx det_quadrature_pass(const angle_fn& func, int npar, int n, int m, long long& tuples) {
    std::vector<gl_rule> rules(n);
    for (int a = 0; a < n; ++a) rules[a] = periodic_trapezoid(m, 0.17 * (a + 1));
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    kahan_sum<cx> s;
    for (;;) {
        double w = 1.0;
        for (int a = 0; a < n; ++a) {
            x[a] = rules[a].x[idx[a]];
            w *= rules[a].w[idx[a]];
        }
        s.add(w * det_sine(x, npar, n) * func(x));
        ++tuples;
        int a = 0;
        while (a < n && ++idx[a] == m) idx[a++] = 0;
        if (a == n) break;
    }
    return s.value() / std::pow(two_pi, n);
}

}  // namespace

corr_result mc_distinct_tuples(const std::vector<eigen_sample>& samples,
                               const angle_fn& func, int n) {
    if (samples.empty()) throw_invalid("mc_distinct_tuples: no samples");
    if (n < 1 || n > max_enum_n) throw_size("mc_distinct_tuples: arity out of range");
    long long tuples = 0;
    std::vector<cx> per_matrix;
    per_matrix.reserve(samples.size());
    for (const auto& s : samples)
        per_matrix.push_back(distinct_tuple_sum(s.angles, func, n, tuples));
    return reduce_per_matrix(per_matrix, tuples, "mc_distinct");
}

corr_result determinantal_value(const angle_fn& func, int npar, int n, int nodes) {
    if (npar < 1) throw_invalid("determinantal_value: matrix size must be positive");
    if (n < 1 || n > 3) throw_size("determinantal_value: arity must be 1..3");
    if (nodes < 2) throw_invalid("determinantal_value: too few nodes");
    long long tuples = 0;
    const cx coarse = det_quadrature_pass(func, npar, n, nodes, tuples);
    const cx fine = det_quadrature_pass(func, npar, n, 2 * nodes + 1, tuples);
    corr_result r;
    r.value = fine;
    r.err = std::abs(fine - coarse);
    r.tuples = tuples;
    r.method = "determinantal";
    return r;
}

corr_result small_n_oracle(const angle_fn& func, int npar, int n, int band) {
    if (npar < 1 || npar > 3) throw_size("small_n_oracle: exact route supports N <= 3");
    if (n < 1) throw_invalid("small_n_oracle: arity must be positive");
    if (band < 0) throw_invalid("small_n_oracle: negative band");
    corr_result r;
    r.method = "weyl_oracle";
    if (n > npar) return r;  // no distinct tuples exist

    double fact = 1.0;
    for (int k = 2; k <= npar; ++k) fact *= k;
    const double norm = 1.0 / (fact * std::pow(two_pi, npar));

    auto pass = [&](int m) {
        gl_rule rule = periodic_trapezoid(m, 0.0);
        std::vector<int> idx(npar, 0);
        std::vector<double> th(npar);
        kahan_sum<cx> s;
        for (;;) {
            double w = 1.0;
            for (int a = 0; a < npar; ++a) {
                th[a] = rule.x[idx[a]];
                w *= rule.w[idx[a]];
            }
            long long dummy = 0;
            s.add(w * weyl_density(th) * distinct_tuple_sum(th, func, n, dummy));
            ++r.tuples;
            int a = 0;
            while (a < npar && ++idx[a] == m) idx[a++] = 0;
            if (a == npar) break;
        }
        return s.value() * norm;
    };

    const int m = band + npar + 2;
    const cx coarse = pass(m);
    const cx fine = pass(m + 3);
    r.value = fine;
    r.err = std::abs(fine - coarse);
    return r;
}

corr_result mc_wrapped_weighted(const std::vector<eigen_sample>& samples,
                                const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                                double tpar, double window_tol) {
    if (samples.empty()) throw_invalid("mc_wrapped_weighted: no samples");
    const int n = phi.n;
    if (n != 1 && n != 2) throw_size("mc_wrapped_weighted: arity must be 1 or 2");
    if (static_cast<int>(weights.size()) != n)
        throw_invalid("mc_wrapped_weighted: need one weight per slot");
    if (tpar <= 0.0) throw_invalid("mc_wrapped_weighted: T must be positive");

    std::vector<HCache> hc;
    for (const auto& w : weights) hc.emplace_back(w);
    double x_max = 0.0;
    for (const auto& c : hc) x_max = std::max(x_max, tpar * c.cut_at(window_tol));
    const int k_range = static_cast<int>(std::ceil(x_max / two_pi));

    long long tuples = 0;
    std::vector<cx> per_matrix;
    per_matrix.reserve(samples.size());

    if (n == 1) {
        const double phi0 = phi_eval(phi, {0.0});
        for (const auto& s : samples) {
            wrapped_angles w = wrap_angles(s, k_range);
            kahan_sum<double> acc;
            for (double x : w.angles) {
                if (std::abs(x) > x_max) continue;
                acc.add(hc[0](x / tpar));
                ++tuples;
            }
            per_matrix.push_back(phi0 * acc.value());
        }
        return reduce_per_matrix(per_matrix, tuples, "mc_wrapped");
    }

    PairProfile prof(phi);
    const double u_cut = two_pi * prof.cut_at(window_tol) / samples.front().npar;
    const double scale = samples.front().npar / two_pi;
    for (const auto& s : samples) {
        wrapped_angles w = wrap_angles(s, k_range);
        const auto& xs = w.angles;
        const std::size_t nw = xs.size();
        std::vector<double> h1(nw), h2(nw);
        for (std::size_t j = 0; j < nw; ++j) {
            h1[j] = hc[0](xs[j] / tpar);
            h2[j] = hc[1](xs[j] / tpar);
        }
        kahan_sum<double> acc;
        std::size_t lo = 0;
        for (std::size_t j = 0; j < nw; ++j) {
            if (h1[j] == 0.0) continue;
            while (lo < nw && xs[j] - xs[lo] > u_cut) ++lo;
            for (std::size_t k = lo; k < nw && xs[k] - xs[j] <= u_cut; ++k) {
                if (h2[k] == 0.0) continue;
                acc.add(prof(scale * (xs[j] - xs[k])) * h1[j] * h2[k]);
                ++tuples;
            }
        }
        per_matrix.push_back(acc.value());
    }
    return reduce_per_matrix(per_matrix, tuples, "mc_wrapped");
}

corr_result determinantal_wrapped(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                                  int npar, double tpar, double window_tol) {
    const int n = phi.n;
    if (n != 1 && n != 2) throw_size("determinantal_wrapped: arity must be 1 or 2");
    if (static_cast<int>(weights.size()) != n)
        throw_invalid("determinantal_wrapped: need one weight per slot");
    if (npar < 1 || tpar <= 0.0) throw_invalid("determinantal_wrapped: bad N or T");

    corr_result r;
    r.method = "determinantal_wrapped";

    if (n == 1) {
        HCache c(weights[0]);
        auto h = [&](double u) { return c(u); };
        auto [ih, eh] = integrate_refined(h, -c.cut(), c.cut(), 400);
        r.value = (npar / two_pi) * phi_eval(phi, {0.0}) * tpar * ih;
        r.err = (npar / two_pi) * std::abs(phi_eval(phi, {0.0})) * tpar * eh;
        return r;
    }

    PairProfile prof(phi, 1e-15);
    const double u_max = two_pi * prof.cut_at(window_tol) / npar;
    const double scale = npar / two_pi;

    // cross-pair weight integral: integral of h1((m+u/2)/T) h2((m-u/2)/T) dm
    // collapses to a single cosine transform of g1 g2
    const WeightSpec &w1 = weights[0], &w2 = weights[1];
    const double dmin = std::min(w1.delta, w2.delta);
    auto hpair = [&](double u) {
        const gl_rule& g = unit_rule(osc_nodes(std::abs(u) * dmin / tpar));
        kahan_sum<double> s;
        for (std::size_t k = 0; k < g.x.size(); ++k) {
            const double t = dmin * g.x[k];
            s.add(dmin * g.w[k] * g_eval(w1, t) * g_eval(w2, t) * std::cos(u * t / tpar));
        }
        return two_pi * tpar * s.value();
    };

    auto integrand = [&](double u) {
        const double s = sn_kernel(u, npar);
        return (static_cast<double>(npar) * npar - s * s) * prof(scale * u) * hpair(u);
    };

    // panels matched to the sine-kernel oscillation scale
    const int panels = std::max(8, static_cast<int>(std::ceil(u_max * npar / pi)) * 2);
    const double hpan = 2.0 * u_max / panels;
    kahan_sum<double> cross;
    double cross_err = 0.0;
    for (int p = 0; p < panels; ++p) {
        auto [v, e] = integrate_refined(integrand, -u_max + p * hpan,
                                        -u_max + (p + 1) * hpan, 16);
        cross.add(v);
        cross_err += e;
    }

    kahan_sum<double> diag;
    const int d_max = static_cast<int>(std::floor(prof.cut() / npar)) + 1;
    for (int d = -d_max; d <= d_max; ++d) {
        const double rv = prof(static_cast<double>(npar) * d);
        if (rv != 0.0) diag.add(rv * hpair(two_pi * d));
    }

    r.value = cross.value() / (two_pi * two_pi) + (npar / two_pi) * diag.value();
    r.err = cross_err / (two_pi * two_pi);
    r.tuples = panels * 48;
    return r;
}

}  // namespace ncorr
