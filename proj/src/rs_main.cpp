#include "rs_main.hpp"

#include <algorithm>
#include <cmath>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "quadrature.hpp"

namespace ncorr {

namespace {

// integral of u psi(u)^2 over (0, 1), psi the standard bump
double half_moment() {
    static const double value = [] {
        auto f = [](double u) { return u * bump(u) * bump(u); };
        return integrate_refined(f, 0.0, 1.0, 200).first;
    }();
    return value;
}

void check_pairing(const oriented_pairing& p, int n) {
    if (p.src.size() != p.dst.size()) throw_invalid("rs_integral: src/dst length mismatch");
    std::vector<int> seen;
    for (std::size_t j = 0; j < p.src.size(); ++j) {
        seen.push_back(p.src[j]);
        seen.push_back(p.dst[j]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw_invalid("rs_integral: pairing reuses a slot");
    for (int i : seen)
        if (i < 0 || i >= n) throw_invalid("rs_integral: slot index out of range");
}

}  // namespace

double rs_integral(const oriented_pairing& p, const PhiSpec& phi, int nodes) {
    check_pairing(p, phi.n);
    const int r = static_cast<int>(p.src.size());
    if (r == 0) return phi_eval(phi, std::vector<double>(phi.n, 0.0));

    if (nodes <= 0) {
        const double psi0 = bump(0.0);
        return phi.c * std::pow(psi0, phi.n - 2 * r) *
               std::pow(phi.s * phi.s * half_moment(), r);
    }

    gl_rule rule = gauss_legendre(nodes, 0.0, phi.s);
    std::vector<int> idx(r, 0);
    std::vector<double> zeta(phi.n, 0.0);
    kahan_sum<double> total;
    for (;;) {
        double w = 1.0;
        for (int j = 0; j < r; ++j) {
            const double xi = rule.x[idx[j]];
            w *= rule.w[idx[j]] * xi;
            zeta[p.src[j]] = xi;
            zeta[p.dst[j]] = -xi;
        }
        total.add(w * phi_eval(phi, zeta));
        int j = 0;
        while (j < r && ++idx[j] == nodes) idx[j++] = 0;
        if (j == r) break;
    }
    return total.value();
}

double rs_main(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
               int npar, double tpar) {
    if (static_cast<int>(weights.size()) != phi.n)
        throw_invalid("rs_main: need one weight per slot");
    if (npar < 1 || tpar <= 0.0) throw_invalid("rs_main: bad N or T");

    kahan_sum<double> total;
    for_each_partition3(phi.n, true, [&](const partition3& part) {
        const int r = static_cast<int>(part.k.size());
        if (r == 0) {
            oriented_pairing empty;
            total.add(rs_integral(empty, phi));
            return;
        }
        for_each_permutation(r, [&](const std::vector<int>& perm) {
            oriented_pairing p;
            p.src = part.k;
            p.dst.resize(r);
            for (int j = 0; j < r; ++j) p.dst[j] = part.l[perm[j]];
            total.add(rs_integral(p, phi));
        });
    });
    return kappa(weights) * (npar * tpar / two_pi) * total.value();
}

double rs_sarnak_form(const PhiSpec& phi, const std::vector<WeightSpec>& weights,
                      double logscale, double tpar) {
    if (static_cast<int>(weights.size()) != phi.n)
        throw_invalid("rs_sarnak_form: need one weight per slot");
    if (logscale <= 0.0 || tpar <= 0.0) throw_invalid("rs_sarnak_form: bad scale or T");
    if (phi.n > 6) throw_size("rs_sarnak_form: pair-system quadrature supports n <= 6");

    kahan_sum<double> total;
    total.add(phi_eval(phi, std::vector<double>(phi.n, 0.0)));

    for_each_pair_system(phi.n, [&](const pair_system& sys) {
        const int r = static_cast<int>(sys.size());
        // signed pair variables: the product bump is even per slot, so the
        // 2^r orthants contribute equally and one tensor integral suffices
        static const int axis_nodes[5] = {0, 200, 120, 64, 0};
        if (r > 3) throw_size("rs_sarnak_form: pair-system rank above quadrature budget");
        const int m = axis_nodes[r];
        gl_rule rule = gauss_legendre(m, 0.0, phi.s);
        std::vector<int> idx(r, 0);
        std::vector<double> zeta(phi.n, 0.0);
        kahan_sum<double> v;
        for (;;) {
            double w = 1.0;
            for (int j = 0; j < r; ++j) {
                const double x = rule.x[idx[j]];
                w *= rule.w[idx[j]] * x;
                zeta[sys[j].first] = x;
                zeta[sys[j].second] = -x;
            }
            v.add(w * phi_eval(phi, zeta));
            int j = 0;
            while (j < r && ++idx[j] == m) idx[j++] = 0;
            if (j == r) break;
        }
        total.add(std::ldexp(v.value(), r));  // 2^r orthants
    });
    return kappa(weights) * (logscale * tpar / two_pi) * total.value();
}

cx asymptotic_term(const oriented_pairing& p, const PhiSpec& phi,
                   const std::vector<WeightSpec>& weights, int npar, double tpar) {
    if (static_cast<int>(weights.size()) != phi.n)
        throw_invalid("asymptotic_term: need one weight per slot");
    if (npar < 1 || tpar <= 0.0) throw_invalid("asymptotic_term: bad N or T");
    const int n = phi.n;
    const int r = static_cast<int>(p.src.size());
    const cx i_pow = std::pow(cx(0.0, 1.0), n);
    const double scale = npar * tpar * std::pow(static_cast<double>(npar), 2 * r - n) *
                         std::pow(two_pi, n) * (kappa(weights) / two_pi);
    return scale * i_pow * rs_integral(p, phi);
}

}  // namespace ncorr
