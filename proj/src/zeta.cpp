#include "zeta.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>

#include "errors.hpp"
#include "quadrature.hpp"
#include "rs_main.hpp"

namespace ncorr {

namespace {

double sinc_sq(double u) {
    double a = pi * u;
    if (std::abs(a) < 1e-6) return 1.0 - a * a / 3.0;
    double s = std::sin(a) / a;
    return s * s;
}

// Riemann-von Mangoldt main term; strictly increasing above 2 pi, which every
// genuine ordinate clears.
double smooth_count(double t) { return t / two_pi * (std::log(t / two_pi) - 1.0) + 0.875; }

double profile_prediction(const corr_profile& p) {
    double a = std::min(1.0, p.support);
    const gl_rule& r = unit_rule(192);
    kahan_sum<double> acc;
    for (std::size_t k = 0; k < r.x.size(); ++k) {
        double alpha = 0.5 * a * (r.x[k] + 1.0);
        acc.add(0.5 * a * r.w[k] * p.fhat(alpha) * (1.0 - alpha));
    }
    return p.f(0.0) + p.fhat(0.0) - 2.0 * acc.value();
}

// default window beyond which the pair sum is truncated; profiles narrow in
// frequency are wide in space
double default_tail(double support) { return 200.0 / std::min(1.0, std::max(0.05, support)); }

// cubic Lagrange on a uniform grid, zero outside
double interp_grid(const std::vector<double>& vals, int npts, double lo, double step, double u,
                   int row_stride, int base) {
    double t = (u - lo) / step;
    int i = static_cast<int>(std::floor(t));
    if (i < 1 || i > npts - 3) return 0.0;
    double d = t - i;
    double wm = -d * (d - 1.0) * (d - 2.0) / 6.0;
    double w0 = (d + 1.0) * (d - 1.0) * (d - 2.0) / 2.0;
    double w1 = -(d + 1.0) * d * (d - 2.0) / 2.0;
    double w2 = (d + 1.0) * d * (d - 1.0) / 6.0;
    int off = base + (i - 1) * row_stride;
    return wm * vals[off] + w0 * vals[off + row_stride] + w1 * vals[off + 2 * row_stride] +
           w2 * vals[off + 3 * row_stride];
}

}  // namespace

zero_dataset load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("load_zeros: cannot open " + path);
    zero_dataset zd;
    zd.source = path;
    std::string line;
    long ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        double x = 0.0;
        auto res = std::from_chars(line.data() + b, line.data() + e + 1, x);
        if (res.ec != std::errc() || res.ptr != line.data() + e + 1 || !std::isfinite(x))
            throw_parse("load_zeros: malformed ordinate at line " + std::to_string(ln));
        if (!(x > 0.0))
            throw_order("load_zeros: non-positive ordinate at line " + std::to_string(ln));
        zd.ordinates.push_back(x);
    }
    if (zd.ordinates.size() < 2) throw_parse("load_zeros: need at least two ordinates");
    std::sort(zd.ordinates.begin(), zd.ordinates.end());
    for (std::size_t i = 0; i + 1 < zd.ordinates.size(); ++i)
        if (zd.ordinates[i + 1] - zd.ordinates[i] < 1e-10)
            throw_order("load_zeros: duplicate ordinate near " + std::to_string(zd.ordinates[i]));
    return zd;
}

corr_profile fejer_profile(double beta, double amp) {
    if (!(beta > 0.0)) throw_invalid("fejer_profile: beta must be positive");
    corr_profile p;
    p.support = beta;
    p.tail_cut = default_tail(beta);
    p.f = [beta, amp](double u) { return amp * beta * sinc_sq(beta * u); };
    p.fhat = [beta, amp](double a) {
        double t = 1.0 - std::abs(a) / beta;
        return t > 0.0 ? amp * t : 0.0;
    };
    return p;
}

corr_profile pair_profile_as_1d(const PhiSpec& phi) {
    if (phi.n != 2) throw_invalid("pair_profile_as_1d: needs a 2-variable Phi");
    auto prof = std::make_shared<PairProfile>(phi, 1e-13);
    corr_profile p;
    p.support = phi.s;
    p.tail_cut = prof->cut_at(1e-11);
    p.f = [prof](double u) { return (*prof)(u); };
    p.fhat = [phi](double a) { return phi_eval(phi, {a, -a}); };
    return p;
}

montgomery_result montgomery_statistic(const zero_dataset& zeros, const corr_profile& profile,
                                       double t_cut, pair_mode mode) {
    if (profile.support > 1.0 + 1e-12)
        throw_support("montgomery_statistic: fhat support exceeds 1");
    if (!(t_cut > 0.0)) throw_invalid("montgomery_statistic: t_cut must be positive");
    const auto& g = zeros.ordinates;
    auto last = std::upper_bound(g.begin(), g.end(), t_cut);
    std::size_t m = static_cast<std::size_t>(last - g.begin());
    if (m < 2) throw_invalid("montgomery_statistic: fewer than two ordinates below t_cut");

    double ulim = profile.tail_cut > 0.0 ? profile.tail_cut : default_tail(profile.support);
    kahan_sum<double> off;
    std::int64_t cnt = 0;
    montgomery_result out;
    out.mode = mode;
    out.prediction = profile_prediction(profile);
    if (mode == pair_mode::unfolded) {
        std::vector<double> xs(m);
        for (std::size_t i = 0; i < m; ++i) xs[i] = smooth_count(g[i]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double u = xs[j] - xs[i];
                if (u > ulim) break;
                off.add(profile.f(u));
                ++cnt;
            }
        out.diagonal = profile.f(0.0);
        out.value = out.diagonal + 2.0 * off.value() / static_cast<double>(m);
    } else {
        double scale = std::log(t_cut) / two_pi;
        double glim = ulim / scale;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double d = g[j] - g[i];
                if (d > glim) break;
                off.add(profile.f(d * scale));
                ++cnt;
            }
        double norm = two_pi / (t_cut * std::log(t_cut));
        out.diagonal = norm * static_cast<double>(m) * profile.f(0.0);
        out.value = out.diagonal + norm * 2.0 * off.value();
    }
    out.pairs = 2 * cnt;
    return out;
}

zeta_corr_result zeta_n_correlation(const zero_dataset& zeros, const PhiSpec& phi,
                                    const std::vector<WeightSpec>& weights, double t_cut,
                                    scale_mode mode, bool force_conjectural) {
    int n = phi.n;
    if (n < 1 || n > 3) throw_size("zeta_n_correlation: arity 1..3 supported");
    if (static_cast<int>(weights.size()) != n)
        throw_invalid("zeta_n_correlation: need one weight per slot");
    if (!(t_cut > 1.0)) throw_invalid("zeta_n_correlation: t_cut must exceed 1");
    const auto& g = zeros.ordinates;
    std::size_t m = g.size();
    if (m < 2) throw_invalid("zeta_n_correlation: need at least two ordinates");

    zeta_corr_result out;
    out.mode = mode;
    out.conjectural = false;
    if (phi.q > 1.0 + 1e-12) {
        if (!force_conjectural)
            throw_support(
                "zeta_n_correlation: Fourier support beyond the proven range, set the "
                "conjectural override to proceed");
        out.conjectural = true;
    }
    if (mode == scale_mode::effective && !(g.front() > two_pi))
        throw_invalid("zeta_n_correlation: effective scale needs ordinates above 2 pi");

    std::vector<double> lg(m);
    for (std::size_t i = 0; i < m; ++i) lg[i] = std::log(g[i] / two_pi);
    std::vector<std::vector<double>> hw(n);
    for (int j = 0; j < n; ++j) {
        hw[j].resize(m);
        for (std::size_t i = 0; i < m; ++i)
            hw[j][i] = h_eval(weights[j], cx(g[i] / t_cut, 0.0)).real();
    }

    double l_glob = std::log(t_cut);
    double logscale = l_glob;
    if (mode == scale_mode::effective) {
        kahan_sum<double> num, den;
        for (std::size_t i = 0; i < m; ++i) {
            double w = 1.0;
            for (int j = 0; j < n; ++j) w *= hw[j][i];
            num.add(w * lg[i]);
            den.add(w);
        }
        if (std::abs(den.value()) < 1e-9 * static_cast<double>(m))
            throw_numerical("zeta_n_correlation: weight mass too small for an effective scale");
        logscale = num.value() / den.value();
    }
    out.logscale = logscale;
    out.prediction = rs_sarnak_form(phi, weights, logscale, t_cut);

    kahan_sum<double> val;
    std::int64_t cnt = 0;
    if (n == 1) {
        double f0 = f_eval(phi, {cx(0.0, 0.0)}).real();
        for (std::size_t i = 0; i < m; ++i) val.add(hw[0][i] * f0);
        cnt = static_cast<std::int64_t>(m);
    } else if (n == 2) {
        PairProfile prof(phi, 1e-13);
        double ucut = prof.cut_at(1e-10);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double lloc = (mode == scale_mode::effective) ? 0.5 * (lg[i] + lg[j]) : l_glob;
                double u = (g[j] - g[i]) * lloc / two_pi;
                if (u > ucut) break;
                double r = prof(u);
                val.add(r * (hw[0][i] * hw[1][j] + hw[0][j] * hw[1][i]));
                cnt += 2;
            }
    } else {
        // f restricted to the zero-sum hyperplane depends on the two scaled
        // differences u1 = x1 - x3, u2 = x2 - x3. Tabulate it on a square grid
        // by one separable phase-matrix product, then sweep ordered triples
        // with the third slot as the window anchor.
        double s = phi.s;
        double ucut = std::pow(std::log(1.0 / 1e-3) / 0.875, 2.0) / (two_pi * s);
        double step = 0.14 / (two_pi * s);
        int npts = 2 * static_cast<int>(std::ceil(ucut / step)) + 1;
        double lo = -step * ((npts - 1) / 2);
        const gl_rule& xi = unit_rule(osc_nodes(two_pi * ucut * s));
        int mq = static_cast<int>(xi.x.size());
        std::vector<double> wm(static_cast<std::size_t>(mq) * mq);
        for (int k1 = 0; k1 < mq; ++k1)
            for (int k2 = 0; k2 < mq; ++k2) {
                double x1 = s * xi.x[k1], x2 = s * xi.x[k2];
                wm[static_cast<std::size_t>(k1) * mq + k2] =
                    s * xi.w[k1] * s * xi.w[k2] * phi_eval(phi, {x1, x2, -x1 - x2});
            }
        std::vector<cx> ph(static_cast<std::size_t>(npts) * mq);
        for (int a = 0; a < npts; ++a) {
            double u = lo + a * step;
            for (int k = 0; k < mq; ++k)
                ph[static_cast<std::size_t>(a) * mq + k] =
                    std::exp(cx(0.0, -two_pi * u * s * xi.x[k]));
        }
        std::vector<cx> m1(static_cast<std::size_t>(mq) * npts);
        for (int k1 = 0; k1 < mq; ++k1)
            for (int b = 0; b < npts; ++b) {
                cx acc = 0.0;
                const double* wrow = &wm[static_cast<std::size_t>(k1) * mq];
                const cx* prow = &ph[static_cast<std::size_t>(b) * mq];
                for (int k2 = 0; k2 < mq; ++k2) acc += wrow[k2] * prow[k2];
                m1[static_cast<std::size_t>(k1) * npts + b] = acc;
            }
        std::vector<double> f2(static_cast<std::size_t>(npts) * npts);
        for (int a = 0; a < npts; ++a)
            for (int b = 0; b < npts; ++b) {
                cx acc = 0.0;
                const cx* prow = &ph[static_cast<std::size_t>(a) * mq];
                for (int k1 = 0; k1 < mq; ++k1)
                    acc += prow[k1] * m1[static_cast<std::size_t>(k1) * npts + b];
                f2[static_cast<std::size_t>(a) * npts + b] = acc.real();
            }
        auto f2_at = [&](double u1, double u2) {
            double t = (u1 - lo) / step;
            int i = static_cast<int>(std::floor(t));
            if (i < 1 || i > npts - 3) return 0.0;
            double d = t - i;
            double wm1 = -d * (d - 1.0) * (d - 2.0) / 6.0;
            double w0 = (d + 1.0) * (d - 1.0) * (d - 2.0) / 2.0;
            double w1 = -(d + 1.0) * d * (d - 2.0) / 2.0;
            double w2 = (d + 1.0) * d * (d - 1.0) / 6.0;
            int r0 = (i - 1) * npts;
            double a0 = interp_grid(f2, npts, lo, step, u2, 1, r0);
            double a1 = interp_grid(f2, npts, lo, step, u2, 1, r0 + npts);
            double a2 = interp_grid(f2, npts, lo, step, u2, 1, r0 + 2 * npts);
            double a3 = interp_grid(f2, npts, lo, step, u2, 1, r0 + 3 * npts);
            return wm1 * a0 + w0 * a1 + w1 * a2 + w2 * a3;
        };
        for (std::size_t c = 0; c < m; ++c) {
            double span = 1.05 * ucut * two_pi / std::max(lg[c], 0.5);
            std::size_t jlo = static_cast<std::size_t>(
                std::lower_bound(g.begin(), g.end(), g[c] - span) - g.begin());
            std::size_t jhi = static_cast<std::size_t>(
                std::upper_bound(g.begin(), g.end(), g[c] + span) - g.begin());
            for (std::size_t a = jlo; a < jhi; ++a) {
                if (a == c) continue;
                for (std::size_t b = jlo; b < jhi; ++b) {
                    if (b == c || b == a) continue;
                    double lloc = (mode == scale_mode::effective)
                                      ? (lg[a] + lg[b] + lg[c]) / 3.0
                                      : l_glob;
                    double u1 = (g[a] - g[c]) * lloc / two_pi;
                    double u2 = (g[b] - g[c]) * lloc / two_pi;
                    double fv = f2_at(u1, u2);
                    if (fv == 0.0) continue;
                    val.add(hw[0][a] * hw[1][b] * hw[2][c] * fv);
                    ++cnt;
                }
            }
        }
    }
    out.value = val.value();
    out.tuples = cnt;
    return out;
}

std::vector<plot_row> pair_histogram(const zero_dataset& zeros, double t_cut, double u_max,
                                     int bins) {
    if (!(u_max > 0.0) || bins < 1) throw_invalid("pair_histogram: bad window");
    const auto& g = zeros.ordinates;
    auto last = std::upper_bound(g.begin(), g.end(), t_cut);
    std::size_t m = static_cast<std::size_t>(last - g.begin());
    if (m < 2) throw_invalid("pair_histogram: fewer than two ordinates below t_cut");
    std::vector<double> xs(m);
    for (std::size_t i = 0; i < m; ++i) xs[i] = smooth_count(g[i]);
    double width = u_max / bins;
    std::vector<std::int64_t> count(bins, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double u = xs[j] - xs[i];
            if (u >= u_max) break;
            ++count[static_cast<int>(u / width)];
        }
    std::vector<plot_row> rows(bins);
    for (int b = 0; b < bins; ++b) {
        double mid = (b + 0.5) * width;
        rows[b] = {mid, static_cast<double>(count[b]) / (static_cast<double>(m) * width),
                   1.0 - sinc_sq(mid)};
    }
    return rows;
}

}  // namespace ncorr
