#include "contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "jstar.hpp"
#include "quadrature.hpp"

namespace ncorr {

namespace {

constexpr double fine_ppp = 3.5;    // nodes per oscillation period, value pass
constexpr double coarse_ppp = 2.7;  // companion pass for the resolution estimate

enum class kern { trunc, q1, stratum };

struct kernel_req {
    kern kind;
    int s_size = 0;
};

struct term_paths {
    std::vector<int> kset, lset;
    std::vector<double> c;  // per-slot line offset
    int mcount = 0;
    int r() const { return static_cast<int>(kset.size()); }
};

// March outward in 12 percent windows until |mag| stays below tol * peak for
// three windows in a row.  A stretch where the tail levels off below 1e-8 of
// the peak counts as converged: that is the evaluation noise floor, which
// grows with the oscillation argument and can sit above a very small tol.
double scan_envelope(const std::function<double(double)>& mag, double peak, double tol,
                     double start, const char* what) {
    if (!(peak > 0.0)) throw_numerical(std::string(what) + ": vanishing peak");
    double x = start;
    int clean = 0, stall = 0;
    double cut = start;
    double best = peak;
    for (int iter = 0; iter < 500; ++iter) {
        double hi = x * 1.12;
        double worst = 0.0;
        for (int p = 0; p < 8; ++p) {
            double xx = x + (hi - x) * (p + 0.371) / 8.0;
            worst = std::max(worst, mag(xx));
        }
        if (worst < tol * peak) {
            if (clean == 0) cut = hi;
            if (++clean >= 3) return cut;
        } else {
            clean = 0;
            if (worst < 1e-8 * peak && worst > 0.5 * best) {
                if (++stall >= 3) return hi;
            } else {
                stall = 0;
            }
        }
        best = std::min(best, worst);
        x = hi;
    }
    throw_tail(std::string(what) + ": envelope does not decay");
}

// H(t) = integral_{-dd}^{dd} dens(tau) exp(-i t tau / tpar) dtau on a uniform
// t >= 0 grid; H(-t) = conj H(t) since the density is real.  The density is
// expected positive so |H| peaks at 0.
class line_cache {
  public:
    line_cache(const std::function<double(double)>& dens, double dd, double tpar, double tol,
               const char* what) {
        auto direct = [&](double t) {
            const gl_rule& r = unit_rule(osc_nodes(std::abs(t) * dd / tpar));
            cx acc = 0.0;
            for (size_t k = 0; k < r.x.size(); ++k) {
                double tau = dd * r.x[k];
                acc += dd * r.w[k] * dens(tau) * std::exp(cx(0.0, -t * tau / tpar));
            }
            return acc;
        };
        double peak = std::abs(direct(0.0));
        cut_ = scan_envelope([&](double t) { return std::abs(direct(t)); }, peak, tol,
                             tpar / dd, what);
        step_ = 0.01 * tpar / dd;
        long npts = static_cast<long>(cut_ / step_) + 4;

        const gl_rule& r = unit_rule(osc_nodes(cut_ * dd / tpar));
        size_t m = r.x.size();
        std::vector<cx> base(m), rot(m), state(m);
        for (size_t k = 0; k < m; ++k) {
            double tau = dd * r.x[k];
            base[k] = dd * r.w[k] * dens(tau);
            rot[k] = std::exp(cx(0.0, -step_ * tau / tpar));
            state[k] = base[k];
        }
        vals_.resize(npts);
        for (long i = 0; i < npts; ++i) {
            if (i > 0 && i % 4096 == 0)
                for (size_t k = 0; k < m; ++k)
                    state[k] = base[k] * std::exp(cx(0.0, -static_cast<double>(i) * step_ * dd *
                                                              r.x[k] / tpar));
            cx acc = 0.0;
            for (size_t k = 0; k < m; ++k) acc += state[k];
            vals_[i] = acc;
            for (size_t k = 0; k < m; ++k) state[k] *= rot[k];
        }
    }

    double cut() const { return cut_; }

    // tightest radius outside which |H| stays below tol * |H(0)|
    double cut_at(double tol) const {
        double peak = std::abs(vals_[0]);
        for (long i = static_cast<long>(vals_.size()) - 1; i >= 0; --i)
            if (std::abs(vals_[i]) >= tol * peak)
                return std::min(cut_, (i + 1) * step_);
        return step_;
    }

    cx operator()(double t) const {
        double a = std::abs(t);
        if (a >= cut_) return 0.0;
        double u = a / step_;
        long j = static_cast<long>(std::floor(u));
        double fr = u - j;
        if (j + 2 >= static_cast<long>(vals_.size())) return 0.0;
        cx f0 = fetch(j - 1), f1 = fetch(j), f2 = fetch(j + 1), f3 = fetch(j + 2);
        cx val = f0 * (-fr * (fr - 1.0) * (fr - 2.0) / 6.0) +
                 f1 * ((fr + 1.0) * (fr - 1.0) * (fr - 2.0) / 2.0) +
                 f2 * (-(fr + 1.0) * fr * (fr - 2.0) / 2.0) +
                 f3 * ((fr + 1.0) * fr * (fr - 1.0) / 6.0);
        return t < 0.0 ? std::conj(val) : val;
    }

  private:
    cx fetch(long j) const { return j < 0 ? std::conj(vals_[-j]) : vals_[j]; }

    double step_ = 0.0, cut_ = 0.0;
    std::vector<cx> vals_;
};

// W(v) = integral over w of prod_j H_j(w + v_j) with H_j the line transform
// of g_j exp(-c_j tau / T): the only factor of the integrand carrying the
// center coordinate.  Arity 2 collapses by the w-integral to one compact
// Fourier transform of the combined density, cached on a grid; arity 3 keeps
// an explicit w-quadrature over per-slot caches.
class wfactor {
  public:
    wfactor(const contour_spec& s, const std::vector<double>& c)
        : spec_(&s), c_(c), n_(s.phi.n) {
        double ctol = std::max(s.tail_tol * 1e-2, 1e-12);
        if (n_ == 2) {
            double dmin = std::min(s.weights[0].delta, s.weights[1].delta);
            auto dens = [&s, &c](double tau) {
                return g_eval(s.weights[0], tau) * g_eval(s.weights[1], -tau) *
                       std::exp(-(c[0] - c[1]) * tau / s.tpar);
            };
            pair_.emplace(dens, dmin, s.tpar, ctol, "contour weight overlap");
        } else if (n_ == 3) {
            double dsum = 0.0;
            for (int j = 0; j < 3; ++j) {
                const WeightSpec& w = s.weights[j];
                double cj = c[j];
                double tp = s.tpar;
                auto dens = [w, cj, tp](double tau) {
                    return g_eval(w, tau) * std::exp(-cj * tau / tp);
                };
                lines_.emplace_back(dens, w.delta, tp, ctol, "weight line cache");
                dsum += w.delta;
            }
            panel_len_ = 32.0 * pi * s.tpar / (1.3 * dsum);
        }
    }

    cx eval(const std::vector<double>& v) const {
        if (n_ == 1) return two_pi * spec_->tpar * g_eval(spec_->weights[0], 0.0);
        if (n_ == 2) return two_pi * spec_->tpar * (*pair_)(2.0 * v[0]);
        return w_integral(v);
    }

  private:
    cx w_integral(const std::vector<double>& v) const {
        double vf[3] = {v[0], v[1], -v[0] - v[1]};
        double lo = -1e300, hi = 1e300;
        for (int j = 0; j < 3; ++j) {
            lo = std::max(lo, -lines_[j].cut() - vf[j]);
            hi = std::min(hi, lines_[j].cut() - vf[j]);
        }
        if (!(hi > lo)) return 0.0;
        long panels = static_cast<long>(std::ceil((hi - lo) / panel_len_));
        double plen = (hi - lo) / panels;
        const gl_rule& r = unit_rule(32);
        kahan_sum<cx> acc;
        for (long p = 0; p < panels; ++p) {
            double a = lo + plen * p;
            for (size_t i = 0; i < r.x.size(); ++i) {
                double w = a + plen * (r.x[i] + 1.0) / 2.0;
                acc.add(plen / 2.0 * r.w[i] * lines_[0](w + vf[0]) * lines_[1](w + vf[1]) *
                        lines_[2](w + vf[2]));
            }
        }
        return acc.value();
    }

    const contour_spec* spec_;
    std::vector<double> c_;
    int n_;
    double panel_len_ = 0.0;
    std::optional<line_cache> pair_;  // arity 2: W(v) = 2 pi T cache(2v)
    std::vector<line_cache> lines_;   // arity 3 slot caches
};

void check_spec(const contour_spec& s) {
    int n = s.phi.n;
    if (n < 1 || n > 3) throw_size("contour: arity 1..3 supported");
    if (static_cast<int>(s.weights.size()) != n)
        throw_invalid("contour: weight count does not match arity");
    if (!(s.tpar > 0.0)) throw_invalid("contour: dilation T must be positive");
    if (!(s.delta > 0.0)) throw_invalid("contour: line offset must be positive");
    if (!(s.tail_tol > 0.0 && s.tail_tol < 0.1))
        throw_invalid("contour: tail_tol must lie in (0, 0.1)");
    if (s.npar < 1) throw_invalid("contour: matrix size must be positive");
    if (s.npar * s.delta / two_pi > 0.999 * s.phi.strip)
        throw_strip("contour: N * delta / 2pi exceeds the f strip");
}

struct term_out {
    std::vector<cx> tensor;  // t-space tensor value per kernel
    std::vector<double> l1;  // matching absolute-integrand mass
};

// |f| along one rotated axis (slot ax at +y, last slot at -y), with node
// counts that track the oscillation so tail probes stay meaningful
double f_axis_mag(const contour_spec& spec, const term_paths& tp, int ax, double y) {
    int n = spec.phi.n;
    std::vector<cx> xv(n);
    for (int j = 0; j < n; ++j) {
        double vf = j == ax ? y : (j == n - 1 ? -y : 0.0);
        xv[j] = cx(-spec.npar * vf / two_pi, spec.npar * tp.c[j] / two_pi);
    }
    int nodes = osc_nodes(2.0 * spec.npar * spec.phi.s * std::abs(y));
    if (spec.f_nodes > nodes) nodes = spec.f_nodes;
    return std::abs(f_eval(spec.phi, xv, nodes));
}

term_out sweep_term(const contour_spec& spec, const term_paths& tp,
                    const std::vector<kernel_req>& kernels, const std::vector<char>& active,
                    double ppp) {
    int n = spec.phi.n;
    int nv = n - 1;
    int npar = spec.npar;
    size_t nk = kernels.size();
    term_out out{std::vector<cx>(nk, 0.0), std::vector<double>(nk, 0.0)};

    auto kernel_value = [&](const shift_set& a, const shift_set& b, const kernel_req& kr) -> cx {
        if (tp.r() == 0) return kr.kind == kern::stratum && kr.s_size > 0 ? 0.0 : 1.0;
        switch (kr.kind) {
            case kern::trunc:
                return jstar({a, b, npar, spec.q, spec.pole_tol});
            case kern::q1:
                return jstar_q1(a, b, spec.pole_tol);
            case kern::stratum:
                return jstar_stratum({a, b, npar, 0, spec.pole_tol}, kr.s_size);
        }
        return 0.0;
    };

    wfactor wf(spec, tp.c);

    if (n == 1) {
        std::vector<cx> fx{cx(0.0, npar * tp.c[0] / two_pi)};
        cx fpart = f_eval(spec.phi, fx, spec.f_nodes);
        cx wv = wf.eval({});
        shift_set a, b;
        for (size_t i = 0; i < nk; ++i) {
            if (!active[i]) continue;
            cx g = kernel_value(a, b, kernels[i]) * fpart * wv;
            out.tensor[i] = g;
            out.l1[i] = std::abs(g);
        }
        return out;
    }

    // per-axis range from the decay of the product |W f|, whichever factor
    // dies first
    std::vector<double> vmax(nv);
    {
        double dmax = 0.0;
        for (const WeightSpec& w : spec.weights) dmax = std::max(dmax, w.delta);
        std::vector<double> probe(nv, 0.0);
        for (int ax = 0; ax < nv; ++ax) {
            double peak = std::abs(wf.eval(probe)) * f_axis_mag(spec, tp, ax, 0.0);
            auto mag = [&](double y) {
                std::vector<double> v(nv, 0.0);
                v[ax] = y;
                double wmag = std::abs(wf.eval(v));
                return wmag == 0.0 ? 0.0 : wmag * f_axis_mag(spec, tp, ax, y);
            };
            vmax[ax] = scan_envelope(mag, peak, spec.tail_tol, spec.tpar / dmax,
                                     "contour integrand envelope");
        }
    }

    // oscillation budget per axis: kernel exponentials, f phases, W phases
    double slack = std::log(1.0 / spec.tail_tol) / (2.0 * spec.delta);
    double fr_kernel = tp.r() > 0 ? 2.0 * (npar + slack) : 0.0;
    double fr_f = 2.0 * npar * spec.phi.s;

    struct axis_rule {
        std::vector<double> x, w;
    };
    std::vector<axis_rule> axes(nv);
    const gl_rule& panel_rule = unit_rule(32);
    for (int ax = 0; ax < nv; ++ax) {
        double len = 2.0 * vmax[ax] * (1.0 + 1e-4 * (ax + 1));
        double freq = fr_kernel + fr_f +
                      (spec.weights[ax].delta + spec.weights[n - 1].delta) / spec.tpar;
        long total = static_cast<long>(std::ceil(len * freq * ppp / two_pi)) + 32;
        long panels = (total + 31) / 32;
        double plen = len / panels;
        // axis windows are shifted off center a little so no two axes share
        // node values, keeping same-side shifts clear of coincidence poles
        double shift = std::min(plen * 1e-3 * (ax + 1), vmax[ax] * 5e-5 * (ax + 1));
        for (long p = 0; p < panels; ++p) {
            double center = -len / 2.0 + (p + 0.5) * plen + shift;
            for (size_t i = 0; i < panel_rule.x.size(); ++i) {
                axes[ax].x.push_back(center + plen / 2.0 * panel_rule.x[i]);
                axes[ax].w.push_back(plen / 2.0 * panel_rule.w[i]);
            }
        }
    }

    // f on the sweep grid via separable phase tables over a fixed xi grid:
    // with the last coordinate eliminated, f = sum_xi wgt(xi) prod_ax
    // exp(i N v_ax (xi_ax + S)), S = sum_b xi_b, and each factor splits into
    // per-axis tables A[ax][iv][k] = exp(i N v xi_k)
    double vmax_all = 0.0;
    for (int ax = 0; ax < nv; ++ax) vmax_all = std::max(vmax_all, vmax[ax]);
    int base_nodes = spec.f_nodes > 0 ? spec.f_nodes : spec.phi.gl_nodes;
    int m_f_req = std::max(base_nodes, osc_nodes(2.0 * npar * spec.phi.s * vmax_all));
    const gl_rule& xi_rule = unit_rule(m_f_req);
    const size_t m_f = xi_rule.x.size();
    std::vector<double> xi(m_f);
    for (size_t k = 0; k < m_f; ++k) xi[k] = spec.phi.s * xi_rule.x[k];

    std::vector<double> wgt;  // joint density weights, (n-1)-dim flattened
    {
        std::vector<double> axfac(m_f);
        for (size_t k = 0; k < m_f; ++k)
            axfac[k] = spec.phi.s * xi_rule.w[k] * bump(xi_rule.x[k]);
        size_t total = 1;
        for (int ax = 0; ax < nv; ++ax) total *= m_f;
        wgt.resize(total);
        std::vector<size_t> id(nv, 0);
        for (size_t flat = 0; flat < total; ++flat) {
            double wv = spec.phi.c, xsum = 0.0, cdot = 0.0;
            for (int ax = 0; ax < nv; ++ax) {
                wv *= axfac[id[ax]];
                xsum += xi[id[ax]];
                cdot += tp.c[ax] * xi[id[ax]];
            }
            cdot += tp.c[n - 1] * -xsum;
            double edge = bump(-xsum / spec.phi.s);
            wgt[flat] = wv == 0.0 || edge == 0.0 ? 0.0 : wv * edge * std::exp(npar * cdot);
            int ax = 0;
            while (ax < nv && ++id[ax] == m_f) id[ax++] = 0;
        }
    }

    std::vector<std::vector<cx>> ftab(nv);
    for (int ax = 0; ax < nv; ++ax) {
        ftab[ax].resize(axes[ax].x.size() * m_f);
        for (size_t iv = 0; iv < axes[ax].x.size(); ++iv)
            for (size_t k = 0; k < m_f; ++k)
                ftab[ax][iv * m_f + k] = std::exp(cx(0.0, npar * axes[ax].x[iv] * xi[k]));
    }

    std::vector<kahan_sum<cx>> acc_val(nk);
    std::vector<kahan_sum<double>> acc_l1(nk);
    std::vector<size_t> idx(nv, 0);
    std::vector<double> v(nv), vfull(n);
    std::vector<cx> c1(m_f), c2(m_f);
    shift_set a, b;
    for (;;) {
        double weight = 1.0;
        double sum = 0.0;
        for (int ax = 0; ax < nv; ++ax) {
            v[ax] = axes[ax].x[idx[ax]];
            weight *= axes[ax].w[idx[ax]];
            vfull[ax] = v[ax];
            sum += v[ax];
        }
        vfull[n - 1] = -sum;

        cx wv = wf.eval(v);
        if (wv != 0.0) {
            cx fpart = 0.0;
            if (n == 2) {
                const cx* row = &ftab[0][idx[0] * m_f];
                kahan_sum<cx> fs;
                for (size_t k = 0; k < m_f; ++k)
                    if (wgt[k] != 0.0) fs.add(wgt[k] * row[k] * row[k]);
                fpart = fs.value();
            } else {
                const cx* r1 = &ftab[0][idx[0] * m_f];
                const cx* r2 = &ftab[1][idx[1] * m_f];
                for (size_t k = 0; k < m_f; ++k) {
                    cx r = r1[k] * r2[k];
                    c1[k] = r * r1[k];
                    c2[k] = r * r2[k];
                }
                kahan_sum<cx> fs;
                for (size_t k2 = 0; k2 < m_f; ++k2) {
                    const double* wrow = &wgt[k2 * m_f];
                    cx inner = 0.0;
                    for (size_t k1 = 0; k1 < m_f; ++k1)
                        if (wrow[k1] != 0.0) inner += wrow[k1] * c1[k1];
                    fs.add(c2[k2] * inner);
                }
                fpart = fs.value();
            }

            cx base = fpart * wv;
            a.clear();
            b.clear();
            for (int k : tp.kset) a.push_back(cx(tp.c[k], vfull[k]));
            for (int l : tp.lset) b.push_back(cx(-tp.c[l], -vfull[l]));
            for (size_t i = 0; i < nk; ++i) {
                if (!active[i]) continue;
                cx g = kernel_value(a, b, kernels[i]) * base;
                acc_val[i].add(weight * g);
                acc_l1[i].add(weight * std::abs(g));
            }
        }

        int ax = 0;
        while (ax < nv && ++idx[ax] == axes[ax].x.size()) idx[ax++] = 0;
        if (ax == nv) break;
    }

    // the map (v, w) -> t has Jacobian n
    for (size_t i = 0; i < nk; ++i) {
        out.tensor[i] = static_cast<double>(n) * acc_val[i].value();
        out.l1[i] = static_cast<double>(n) * acc_l1[i].value();
    }
    return out;
}

struct pass_out {
    std::vector<cx> total;
    std::vector<double> l1;
};

pass_out run_pass(const contour_spec& spec, const std::vector<kernel_req>& kernels, double ppp) {
    check_spec(spec);
    int n = spec.phi.n;
    size_t nk = kernels.size();
    std::vector<kahan_sum<cx>> tv(nk);
    std::vector<kahan_sum<double>> tl(nk);
    for_each_partition3(n, false, [&](const partition3& p) {
        if (p.k.empty() != p.l.empty()) return;  // one-sided kernels vanish
        term_paths tp;
        tp.kset = p.k;
        tp.lset = p.l;
        tp.mcount = static_cast<int>(p.m.size());
        tp.c.assign(n, 0.0);
        for (int k : p.k) tp.c[k] = spec.delta;
        for (int l : p.l) tp.c[l] = -spec.delta;

        std::vector<char> active(nk, 1);
        bool any = false;
        for (size_t i = 0; i < nk; ++i) {
            if (kernels[i].kind == kern::q1 && p.k.size() != p.l.size()) active[i] = 0;
            if (kernels[i].kind == kern::stratum &&
                static_cast<int>(std::min(p.k.size(), p.l.size())) < kernels[i].s_size)
                active[i] = 0;
            any = any || active[i];
        }
        if (!any) return;

        term_out to = sweep_term(spec, tp, kernels, active, ppp);
        double coef = std::pow(static_cast<double>(spec.npar), tp.mcount);
        for (size_t i = 0; i < nk; ++i) {
            tv[i].add(coef * to.tensor[i]);
            tl[i].add(coef * to.l1[i]);
        }
    });
    pass_out out{std::vector<cx>(nk), std::vector<double>(nk)};
    double norm = std::pow(two_pi, -n);
    for (size_t i = 0; i < nk; ++i) {
        out.total[i] = norm * tv[i].value();
        out.l1[i] = norm * tl[i].value();
    }
    return out;
}

std::vector<contour_value> run_with_err(const contour_spec& spec,
                                        const std::vector<kernel_req>& kernels) {
    pass_out fine = run_pass(spec, kernels, fine_ppp);
    pass_out coarse = run_pass(spec, kernels, coarse_ppp);
    std::vector<contour_value> out(kernels.size());
    for (size_t i = 0; i < kernels.size(); ++i) {
        out[i].value = fine.total[i].real();
        out[i].err = std::abs(fine.total[i] - coarse.total[i]) + std::abs(fine.total[i].imag());
    }
    return out;
}

}  // namespace

cx big_f_eval(const contour_spec& spec, const std::vector<cx>& x) {
    if (static_cast<int>(x.size()) != spec.phi.n || spec.weights.size() != x.size())
        throw_invalid("big_f_eval: argument count does not match arity");
    std::vector<cx> fx(x.size());
    for (size_t j = 0; j < x.size(); ++j)
        fx[j] = x[j] * static_cast<double>(spec.npar) / two_pi;
    cx val = f_eval(spec.phi, fx, spec.f_nodes);
    for (size_t j = 0; j < x.size(); ++j) val *= h_eval(spec.weights[j], x[j] / spec.tpar);
    return val;
}

contour_value correlation_contour(const contour_spec& spec) {
    return run_with_err(spec, {{kern::trunc, 0}})[0];
}

contour_value correlation_contour_q1(const contour_spec& spec) {
    return run_with_err(spec, {{kern::q1, 0}})[0];
}

std::pair<contour_value, contour_value> correlation_contour_both(const contour_spec& spec) {
    auto both = run_with_err(spec, {{kern::trunc, 0}, {kern::q1, 0}});
    return {both[0], both[1]};
}

cx term_integral(const contour_spec& spec, const std::vector<int>& kset,
                 const std::vector<int>& lset) {
    check_spec(spec);
    int n = spec.phi.n;
    std::vector<char> seen(n, 0);
    for (int s : kset) {
        if (s < 0 || s >= n || seen[s]) throw_invalid("term_integral: bad slot list");
        seen[s] = 1;
    }
    for (int s : lset) {
        if (s < 0 || s >= n || seen[s]) throw_invalid("term_integral: bad slot list");
        seen[s] = 1;
    }
    if (kset.empty() != lset.empty()) return 0.0;

    term_paths tp;
    tp.kset = kset;
    tp.lset = lset;
    tp.c.assign(n, 0.0);
    for (int k : kset) tp.c[k] = spec.delta;
    for (int l : lset) tp.c[l] = -spec.delta;
    tp.mcount = n - static_cast<int>(kset.size() + lset.size());

    term_out to = sweep_term(spec, tp, {{kern::trunc, 0}}, {1}, fine_ppp);
    // the i^n from dz_j = i dt_j on upward paths
    cx in = n == 1 ? cx(0.0, 1.0) : n == 2 ? cx(-1.0, 0.0) : cx(0.0, -1.0);
    return in * to.tensor[0];
}

std::vector<decay_row> decay_probe(const contour_spec& spec, int s_size,
                                   const std::vector<double>& deltas) {
    if (s_size < 0) throw_invalid("decay_probe: negative stratum size");
    if (deltas.empty()) throw_invalid("decay_probe: no line offsets given");
    std::vector<decay_row> rows;
    for (double d : deltas) {
        if (!(d > 0.0)) throw_invalid("decay_probe: line offsets must be positive");
        contour_spec s = spec;
        s.delta = d;
        pass_out po = run_pass(s, {{kern::stratum, s_size}}, fine_ppp);
        rows.push_back({d, po.total[0].real(), po.l1[0]});
    }
    return rows;
}

}  // namespace ncorr
