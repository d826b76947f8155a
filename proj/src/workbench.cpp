#include "workbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <cctype>
#include <thread>
#include <vector>

#include "json.hpp"

#include "contour.hpp"
#include "empirical.hpp"
#include "errors.hpp"
#include "jstar.hpp"
#include "rs_main.hpp"
#include "sampler.hpp"
#include "zeta.hpp"

namespace ncorr {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

using cfg_map = std::map<std::string, std::string>;

const cfg_map& default_config() {
    static const cfg_map defaults = {
        {"n", "2"},
        {"N", "20"},
        {"T", "1"},
        {"q", "1"},
        {"phi_width", ""},
        {"phi_eps", "0.2"},
        {"phi_amp", "1"},
        {"g_width", "2"},
        {"g_amp", "1"},
        {"delta", "0.4"},
        {"tmax", "0"},
        {"nodes", "0"},
        {"matrices", "2000"},
        {"seed", "1"},
        {"zeros", ""},
        {"out", ""},
        {"tolerance", ""},
        {"force_conjectural", "0"},
        {"methods", ""},
        {"parallel", "0"},
        {"cache_dir", ""},
        {"sample_cache", ""},
        {"tail_tol", "1e-8"},
        {"mode", "effective"},
        {"pair_mode", "unfolded"},
        {"fejer_beta", "1"},
        {"umax", "3"},
        {"bins", "60"},
        {"trials", "100"},
        {"deltas", ""},
        {"stratum", "1"},
    };
    return defaults;
}

std::string fmt17(double v) {
    std::ostringstream o;
    o << std::setprecision(17) << v;
    return o.str();
}

double num_of(const cfg_map& m, const std::string& key) {
    const std::string& s = m.at(key);
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw_invalid("config " + key + ": not a number: '" + s + "'");
    }
    if (pos != s.size()) throw_invalid("config " + key + ": not a number: '" + s + "'");
    return v;
}

int int_of(const cfg_map& m, const std::string& key) {
    double v = num_of(m, key);
    int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-9) throw_invalid("config " + key + ": not an integer: " + m.at(key));
    return i;
}

std::uint64_t seed_of(const cfg_map& m) {
    const std::string& s = m.at("seed");
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw_invalid("config seed: not an unsigned integer: '" + s + "'");
    }
}

bool bool_of(const cfg_map& m, const std::string& key) {
    const std::string& s = m.at(key);
    if (s == "0" || s == "false" || s == "") return false;
    if (s == "1" || s == "true") return true;
    throw_invalid("config " + key + ": expected 0 or 1, got '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<double> list_of(const cfg_map& m, const std::string& key) {
    std::vector<double> out;
    for (const std::string& tok : split(m.at(key), ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw_invalid("config " + key + ": bad list entry '" + tok + "'");
        }
    }
    return out;
}

json cfg_json(const cfg_map& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

int exit_for(errc c) {
    switch (c) {
        case errc::pole:
        case errc::tail:
        case errc::strip:
        case errc::numerical:
            return 3;
        default:
            return 2;
    }
}

PhiSpec phi_of(const cfg_map& m) {
    return PhiSpec(int_of(m, "n"), num_of(m, "q"), num_of(m, "phi_eps"), num_of(m, "phi_width"),
                   num_of(m, "phi_amp"));
}

std::vector<double> broadcast(std::vector<double> v, int n, const std::string& key) {
    if (static_cast<int>(v.size()) == 1) v.assign(n, v[0]);
    if (static_cast<int>(v.size()) != n)
        throw_invalid("config " + key + ": need 1 or n entries, got " +
                      std::to_string(v.size()));
    return v;
}

std::vector<WeightSpec> weights_of(const cfg_map& m) {
    int n = int_of(m, "n");
    auto wd = broadcast(list_of(m, "g_width"), n, "g_width");
    auto wa = broadcast(list_of(m, "g_amp"), n, "g_amp");
    std::vector<WeightSpec> out;
    for (int j = 0; j < n; ++j) out.emplace_back(wd[j], wa[j]);
    return out;
}

contour_spec cspec_of(const cfg_map& m, const PhiSpec& phi, const std::vector<WeightSpec>& ws,
                      int qtrunc) {
    contour_spec cs{phi, ws, int_of(m, "N"), num_of(m, "T")};
    cs.delta = num_of(m, "delta");
    cs.q = qtrunc;
    cs.tail_tol = num_of(m, "tail_tol");
    cs.f_nodes = int_of(m, "nodes");
    return cs;
}

std::vector<eigen_sample> ensure_samples(const cfg_map& m) {
    int npar = int_of(m, "N");
    int count = int_of(m, "matrices");
    if (count < 1) throw_invalid("config matrices: need at least 1");
    std::uint64_t seed = seed_of(m);
    const std::string& path = m.at("sample_cache");
    if (fs::exists(path)) {
        auto s = load_samples(path);
        if (s.empty() || s.front().npar != npar)
            throw_invalid("sample cache " + path + ": matrix size differs from config N");
        if (static_cast<int>(s.size()) < count)
            throw_invalid("sample cache " + path + ": holds fewer samples than requested");
        s.resize(count);
        return s;
    }
    auto s = sample_batch(npar, count, seed);
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    save_samples(path, s);
    return s;
}

struct method_out {
    std::string name;
    double value = 0.0;
    double err = 0.0;  // statistical or refinement uncertainty
    double sys = 0.0;  // systematic budget (asymptotic residual)
    long long tuples = 0;
};

run_result cmd_compare(const cfg_map& m) {
    json cj = cfg_json(m);
    PhiSpec phi = phi_of(m);
    auto ws = weights_of(m);
    int npar = int_of(m, "N");
    double tpar = num_of(m, "T");
    double tol = num_of(m, "tolerance");
    auto names = split(m.at("methods"), ',');
    if (names.empty()) throw_invalid("config methods: empty");
    bool want_mc = false;
    for (const auto& nm : names) {
        if (nm == "mc" || nm == "determinant") {
            if (phi.n > 2) throw_invalid("method " + nm + ": supports n <= 2");
            want_mc |= (nm == "mc");
        } else if (nm == "contour" || nm == "contour_q1" || nm == "rs_main") {
            if (phi.n > 3) throw_invalid("method " + nm + ": supports n <= 3");
        } else {
            throw_invalid("config methods: unknown method '" + nm + "'");
        }
    }
    std::vector<eigen_sample> samples;
    if (want_mc) samples = ensure_samples(m);

    auto eval = [&](const std::string& name) {
        method_out o;
        o.name = name;
        if (name == "mc") {
            auto r = mc_wrapped_weighted(samples, phi, ws, tpar);
            o.value = r.value.real();
            o.err = r.err;
            o.tuples = r.tuples;
        } else if (name == "determinant") {
            auto r = determinantal_wrapped(phi, ws, npar, tpar);
            o.value = r.value.real();
            o.err = r.err;
            o.tuples = r.tuples;
        } else if (name == "contour") {
            auto c = correlation_contour(cspec_of(m, phi, ws, 0));
            o.value = c.value;
            o.err = c.err;
        } else if (name == "contour_q1") {
            auto c = correlation_contour_q1(cspec_of(m, phi, ws, 1));
            o.value = c.value;
            o.err = c.err;
        } else {
            double v = rs_main(phi, ws, npar, tpar);
            o.value = v;
            o.sys = 2.0 * std::abs(v) / tpar;  // asymptotic residual budget
        }
        return o;
    };

    std::vector<method_out> outs(names.size());
    if (bool_of(m, "parallel") && names.size() > 1) {
        std::vector<std::exception_ptr> errs(names.size());
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < names.size(); ++i)
            threads.emplace_back([&, i] {
                try {
                    outs[i] = eval(names[i]);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) outs[i] = eval(names[i]);
    }

    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    tab << "command: compare\n";
    tab << std::left << std::setw(14) << "method" << std::setw(24) << "value" << std::setw(12)
        << "err" << "tuples\n";
    for (const auto& o : outs) {
        json j;
        j["record"] = "method";
        j["method"] = o.name;
        j["value"] = o.value;
        j["err"] = o.err;
        j["sys"] = o.sys;
        j["tuples"] = o.tuples;
        j["config"] = cj;
        rec << j.dump() << "\n";
        tab << std::left << std::setw(14) << o.name << std::setw(24) << std::setprecision(15)
            << o.value << std::setw(12) << std::setprecision(3) << o.err << o.tuples << "\n";
    }
    bool all_pass = true;
    tab << std::left << std::setw(26) << "pair" << std::setw(13) << "diff" << std::setw(13)
        << "limit" << "verdict\n";
    for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j) {
            const auto& a = outs[i];
            const auto& b = outs[j];
            double diff = a.value - b.value;
            double sigma = std::sqrt(a.err * a.err + b.err * b.err);
            double floor = 1e-10 * (1.0 + std::abs(a.value) + std::abs(b.value));
            double limit = std::max({tol * sigma, a.sys + b.sys, floor});
            bool pass = std::abs(diff) <= limit;
            all_pass &= pass;
            json p;
            p["record"] = "pair";
            p["a"] = a.name;
            p["b"] = b.name;
            p["diff"] = diff;
            p["sigma"] = sigma;
            p["limit"] = limit;
            p["pass"] = pass;
            p["config"] = cj;
            rec << p.dump() << "\n";
            tab << std::left << std::setw(26) << (a.name + "/" + b.name) << std::setw(13)
                << std::setprecision(3) << diff << std::setw(13) << limit
                << (pass ? "ok" : "FAIL") << "\n";
        }
    json sum;
    sum["record"] = "summary";
    sum["command"] = "compare";
    sum["pass"] = all_pass;
    sum["exit"] = all_pass ? 0 : 1;
    sum["config"] = cj;
    rec << sum.dump() << "\n";
    tab << "overall: " << (all_pass ? "pass" : "FAIL") << "\n";
    return {all_pass ? 0 : 1, rec.str(), tab.str()};
}

run_result cmd_sample(const cfg_map& m) {
    json cj = cfg_json(m);
    auto s = ensure_samples(m);
    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    json j;
    j["record"] = "sample_cache";
    j["path"] = m.at("sample_cache");
    j["count"] = static_cast<long long>(s.size());
    j["N"] = s.empty() ? 0 : s.front().npar;
    j["config"] = cj;
    rec << j.dump() << "\n";
    tab << "sample cache " << m.at("sample_cache") << ": " << s.size() << " samples, N="
        << (s.empty() ? 0 : s.front().npar) << "\n";
    return {0, rec.str(), tab.str()};
}

run_result cmd_verify_jstar(const cfg_map& m) {
    json cj = cfg_json(m);
    int npar = int_of(m, "N");
    int trials = int_of(m, "trials");
    double tol = num_of(m, "tolerance");
    auto rep = verify_worked_examples(npar, trials, tol, seed_of(m));
    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    tab << "command: verify-jstar (N=" << npar << ", trials=" << trials << ")\n";
    for (const auto& e : rep.entries) {
        json j;
        j["record"] = "check";
        j["label"] = e.label;
        j["rel_dev"] = e.rel_dev;
        j["config"] = cj;
        rec << j.dump() << "\n";
        tab << std::left << std::setw(40) << e.label << std::setprecision(3) << e.rel_dev
            << "\n";
    }
    json sum;
    sum["record"] = "summary";
    sum["command"] = "verify-jstar";
    sum["max_rel_dev"] = rep.max_rel_dev;
    sum["pass"] = rep.pass;
    sum["exit"] = rep.pass ? 0 : 1;
    sum["config"] = cj;
    rec << sum.dump() << "\n";
    tab << "max relative deviation " << std::setprecision(3) << rep.max_rel_dev << ", "
        << (rep.pass ? "pass" : "FAIL") << "\n";
    return {rep.pass ? 0 : 1, rec.str(), tab.str()};
}

run_result cmd_decay(const cfg_map& m) {
    json cj = cfg_json(m);
    PhiSpec phi = phi_of(m);
    auto ws = weights_of(m);
    int npar = int_of(m, "N");
    int s_size = int_of(m, "stratum");
    auto deltas = list_of(m, "deltas");
    if (deltas.size() < 2) throw_invalid("config deltas: need at least 2 offsets for a slope");
    auto rows = decay_probe(cspec_of(m, phi, ws, 0), s_size, deltas);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        if (!(r.l1_mass > 0.0))
            throw_numerical("decay: stratum mass vanished, no slope to fit");
        double y = std::log(r.l1_mass);
        sx += r.delta;
        sy += y;
        sxx += r.delta * r.delta;
        sxy += r.delta * y;
    }
    double k = static_cast<double>(rows.size());
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    double gap = 2.0 * num_of(m, "q") - phi.n * phi.s;
    double bound = -0.9 * npar * gap;
    bool pass = slope <= bound;
    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    tab << "command: decay (stratum " << s_size << ")\n";
    tab << std::left << std::setw(10) << "delta" << std::setw(16) << "value" << "l1_mass\n";
    for (const auto& r : rows) {
        json j;
        j["record"] = "decay_row";
        j["delta"] = r.delta;
        j["value"] = r.value;
        j["l1"] = r.l1_mass;
        j["config"] = cj;
        rec << j.dump() << "\n";
        tab << std::left << std::setw(10) << std::setprecision(4) << r.delta << std::setw(16)
            << std::setprecision(6) << r.value << r.l1_mass << "\n";
    }
    json sum;
    sum["record"] = "slope";
    sum["slope"] = slope;
    sum["bound"] = bound;
    sum["pass"] = pass;
    sum["exit"] = pass ? 0 : 1;
    sum["config"] = cj;
    rec << sum.dump() << "\n";
    tab << "log-mass slope " << std::setprecision(4) << slope << " vs bound " << bound << ": "
        << (pass ? "pass" : "FAIL") << "\n";
    return {pass ? 0 : 1, rec.str(), tab.str()};
}

run_result cmd_zeta(const cfg_map& m) {
    json cj = cfg_json(m);
    const std::string& zpath = m.at("zeros");
    if (zpath.empty()) throw_invalid("config zeros: path to a zero-ordinate file required");
    zero_dataset zd = load_zeros(zpath);
    double tmax = num_of(m, "tmax");
    double t_cut = tmax > 0.0 ? std::min(tmax, zd.max_height()) : zd.max_height();
    const std::string& pm_s = m.at("pair_mode");
    if (pm_s != "unfolded" && pm_s != "global")
        throw_invalid("config pair_mode: expected unfolded or global");
    const std::string& sm_s = m.at("mode");
    if (sm_s != "effective" && sm_s != "global")
        throw_invalid("config mode: expected effective or global");
    pair_mode pm = pm_s == "unfolded" ? pair_mode::unfolded : pair_mode::global_scale;
    scale_mode sm = sm_s == "effective" ? scale_mode::effective : scale_mode::global_scale;
    double tol = num_of(m, "tolerance");

    auto mont = montgomery_statistic(zd, fejer_profile(num_of(m, "fejer_beta")), t_cut, pm);
    double mdev = std::abs(mont.value - mont.prediction) / std::abs(mont.prediction);
    PhiSpec phi = phi_of(m);
    auto ws = weights_of(m);
    auto zc = zeta_n_correlation(zd, phi, ws, t_cut, sm, bool_of(m, "force_conjectural"));
    double zdev = std::abs(zc.value - zc.prediction) / std::abs(zc.prediction);
    bool pass = mdev < tol && zdev < tol;

    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    json jm;
    jm["record"] = "montgomery";
    jm["mode"] = pm_s;
    jm["value"] = mont.value;
    jm["prediction"] = mont.prediction;
    jm["diagonal"] = mont.diagonal;
    jm["pairs"] = mont.pairs;
    jm["rel_dev"] = mdev;
    jm["t_cut"] = t_cut;
    jm["config"] = cj;
    rec << jm.dump() << "\n";
    json jz;
    jz["record"] = "zeta_ncorr";
    jz["mode"] = sm_s;
    jz["value"] = zc.value;
    jz["prediction"] = zc.prediction;
    jz["logscale"] = zc.logscale;
    jz["tuples"] = zc.tuples;
    jz["rel_dev"] = zdev;
    jz["conjectural"] = zc.conjectural;
    jz["t_cut"] = t_cut;
    jz["config"] = cj;
    rec << jz.dump() << "\n";
    json sum;
    sum["record"] = "summary";
    sum["command"] = "zeta";
    sum["pass"] = pass;
    sum["exit"] = pass ? 0 : 1;
    sum["config"] = cj;
    rec << sum.dump() << "\n";
    tab << "command: zeta (T_cut=" << std::setprecision(10) << t_cut << ", "
        << zd.count() << " ordinates)\n";
    tab << "montgomery [" << pm_s << "]: value " << std::setprecision(8) << mont.value
        << " prediction " << mont.prediction << " rel_dev " << std::setprecision(3) << mdev
        << "\n";
    tab << "n-correlation [" << sm_s << ", n=" << phi.n << "]: value " << std::setprecision(8)
        << zc.value << " prediction " << zc.prediction << " rel_dev " << std::setprecision(3)
        << zdev << (zc.conjectural ? " (conjectural support)" : "") << "\n";
    tab << "overall: " << (pass ? "pass" : "FAIL") << " at tolerance " << tol << "\n";
    return {pass ? 0 : 1, rec.str(), tab.str()};
}

run_result cmd_plotdata(const cfg_map& m) {
    json cj = cfg_json(m);
    const std::string& zpath = m.at("zeros");
    if (zpath.empty()) throw_invalid("config zeros: path to a zero-ordinate file required");
    zero_dataset zd = load_zeros(zpath);
    double tmax = num_of(m, "tmax");
    double t_cut = tmax > 0.0 ? std::min(tmax, zd.max_height()) : zd.max_height();
    auto rows = pair_histogram(zd, t_cut, num_of(m, "umax"), int_of(m, "bins"));
    std::ostringstream rec, tab;
    json head;
    head["record"] = "config";
    head["config"] = cj;
    rec << head.dump() << "\n";
    tab << "u_mid      empirical  gue\n";
    for (const auto& r : rows) {
        json j;
        j["record"] = "plot_row";
        j["u"] = r.u_mid;
        j["empirical"] = r.empirical;
        j["gue"] = r.gue;
        j["config"] = cj;
        rec << j.dump() << "\n";
        tab << std::left << std::setw(11) << std::setprecision(5) << r.u_mid << std::setw(11)
            << r.empirical << r.gue << "\n";
    }
    return {0, rec.str(), tab.str()};
}

cfg_map resolve(const cfg_map& base, const std::string& command) {
    cfg_map m = base;
    int n = int_of(m, "n");
    if (n < 1) throw_invalid("config n: must be at least 1");
    if (m.at("phi_width").empty()) {
        double q = num_of(m, "q");
        double eps = num_of(m, "phi_eps");
        m["phi_width"] = fmt17(0.85 * (2.0 * q - eps) / n);
    }
    if (m.at("cache_dir").empty()) {
        const char* env = std::getenv("NCORR_CACHE_DIR");
        m["cache_dir"] = (env && *env) ? env : "cache";
    }
    if (m.at("sample_cache").empty()) {
        m["sample_cache"] = m.at("cache_dir") + "/samples_N" + m.at("N") + "_seed" +
                            m.at("seed") + "_M" + m.at("matrices") + ".txt";
    }
    if (m.at("methods").empty()) {
        std::string def = n <= 2 ? "mc,determinant,contour,rs_main" : "contour,rs_main";
        if (std::abs(num_of(m, "q") - 1.0) < 1e-12) def += ",contour_q1";
        m["methods"] = def;
    }
    if (m.at("deltas").empty()) {
        double d = num_of(m, "delta");
        m["deltas"] = fmt17(d) + "," + fmt17(1.25 * d) + "," + fmt17(1.5 * d) + "," +
                      fmt17(1.75 * d);
    }
    if (m.at("tolerance").empty()) {
        if (command == "compare")
            m["tolerance"] = "4";
        else if (command == "zeta")
            m["tolerance"] = "0.05";
        else if (command == "verify-jstar")
            m["tolerance"] = "1e-10";
        else
            m["tolerance"] = "0";
    }
    m["command"] = command;
    return m;
}

}  // namespace

workbench::workbench() : cfg_(default_config()) {}

void workbench::set(const std::string& key, const std::string& value) {
    if (default_config().find(key) == default_config().end())
        throw_invalid("unknown config key '" + key + "'");
    cfg_[key] = value;
}

std::string workbench::get(const std::string& key) const {
    auto it = cfg_.find(key);
    if (it == cfg_.end()) throw_invalid("unknown config key '" + key + "'");
    return it->second;
}

run_result workbench::run(const std::string& command) {
    cfg_map m;
    try {
        m = resolve(cfg_, command);
        if (command == "compare") return cmd_compare(m);
        if (command == "sample") return cmd_sample(m);
        if (command == "verify-jstar") return cmd_verify_jstar(m);
        if (command == "decay") return cmd_decay(m);
        if (command == "zeta") return cmd_zeta(m);
        if (command == "plotdata") return cmd_plotdata(m);
        throw_invalid("unknown command '" + command + "'");
    } catch (const error& e) {
        run_result out;
        out.exit_code = exit_for(e.code());
        json j;
        j["record"] = "error";
        j["message"] = e.what();
        j["code"] = static_cast<int>(e.code());
        j["config"] = cfg_json(m.empty() ? cfg_ : m);
        out.records = j.dump() + "\n";
        out.table = std::string("error: ") + e.what() + "\n";
        return out;
    } catch (const std::exception& e) {
        run_result out;
        out.exit_code = 3;
        json j;
        j["record"] = "error";
        j["message"] = e.what();
        j["code"] = static_cast<int>(errc::numerical);
        j["config"] = cfg_json(m.empty() ? cfg_ : m);
        out.records = j.dump() + "\n";
        out.table = std::string("error: ") + e.what() + "\n";
        return out;
    }
}

const char* workbench::version() { return "0.1.0"; }

}  // namespace ncorr
