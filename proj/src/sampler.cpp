#include "sampler.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace ncorr {

eigen_sample sample_eigenangles(int npar, std::uint64_t seed) {
    if (npar < 1) throw_invalid("sample_eigenangles: matrix size must be positive");
    const int n = npar;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = cx(gauss(rng), gauss(rng));

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();

    // QR alone is not Haar: the triangular factor's diagonal phases must be
    // pushed back into Q so the distribution is invariant under left and
    // right unitary translation.
    for (int j = 0; j < n; ++j) {
        const double m = std::abs(r(j, j));
        if (!(m > 1e-200)) throw_numerical("sample_eigenangles: degenerate QR factor");
        const cx phase = r(j, j) / m;
        q.col(j) *= phase;
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q, false);
    if (es.info() != Eigen::Success)
        throw_numerical("sample_eigenangles: eigenvalue iteration failed");

    eigen_sample out;
    out.npar = n;
    out.seed = seed;
    out.angles.resize(n);
    for (int j = 0; j < n; ++j) {
        const cx lambda = es.eigenvalues()(j);
        const double mod = std::abs(lambda);
        if (std::abs(mod - 1.0) > 1e-8)
            throw_numerical("sample_eigenangles: eigenvalue off the unit circle");
        double th = std::arg(lambda / mod);
        if (th < 0.0) th += two_pi;
        if (th >= two_pi) th -= two_pi;
        out.angles[j] = th;
    }
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

double weyl_density(const std::vector<double>& angles) {
    const int n = static_cast<int>(angles.size());
    double p = 1.0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const double s = std::sin(0.5 * (angles[j] - angles[k]));
            p *= 4.0 * s * s;
        }
    return p;
}

wrapped_angles wrap_angles(const eigen_sample& s, int k_range) {
    if (k_range < 0) throw_invalid("wrap_angles: negative copy range");
    wrapped_angles w;
    w.npar = s.npar;
    w.k_range = k_range;
    w.angles.reserve(static_cast<std::size_t>(2 * k_range + 1) * s.angles.size());
    for (int k = -k_range; k <= k_range; ++k)
        for (double th : s.angles) w.angles.push_back(th + two_pi * k);
    return w;
}

void save_samples(const std::string& path, const std::vector<eigen_sample>& samples) {
    if (samples.empty()) throw_invalid("save_samples: empty batch");
    const int n = samples.front().npar;
    std::ofstream out(path);
    if (!out) throw_io("save_samples: cannot open " + path);
    out << "NCORR-SAMPLES v1 N=" << n << "\n";
    char buf[40];
    for (const auto& s : samples) {
        if (s.npar != n || static_cast<int>(s.angles.size()) != n)
            throw_invalid("save_samples: mixed matrix sizes in batch");
        out << s.seed;
        for (double a : s.angles) {
            std::snprintf(buf, sizeof buf, " %.17g", a);
            out << buf;
        }
        out << "\n";
    }
    if (!out) throw_io("save_samples: write failure on " + path);
}

std::vector<eigen_sample> load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("load_samples: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw_invalid("load_samples: empty file " + path);
    int n = 0;
    {
        std::istringstream hs(line);
        std::string tag, ver, nfield;
        hs >> tag >> ver >> nfield;
        if (tag != "NCORR-SAMPLES" || ver != "v1" || nfield.rfind("N=", 0) != 0)
            throw_invalid("load_samples: bad header in " + path);
        try {
            n = std::stoi(nfield.substr(2));
        } catch (...) {
            throw_invalid("load_samples: bad header in " + path);
        }
        if (n < 1) throw_invalid("load_samples: bad matrix size in header of " + path);
    }
    std::vector<eigen_sample> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        eigen_sample s;
        s.npar = n;
        if (!(ls >> s.seed))
            throw_parse("load_samples: bad seed at line " + std::to_string(lineno));
        s.angles.resize(n);
        for (int j = 0; j < n; ++j) {
            if (!(ls >> s.angles[j]))
                throw_parse("load_samples: short record at line " + std::to_string(lineno));
            if (!(s.angles[j] >= 0.0 && s.angles[j] < two_pi + 1e-12))
                throw_parse("load_samples: angle out of range at line " + std::to_string(lineno));
        }
        std::string extra;
        if (ls >> extra)
            throw_parse("load_samples: trailing data at line " + std::to_string(lineno));
        if (!std::is_sorted(s.angles.begin(), s.angles.end()))
            throw_parse("load_samples: unsorted record at line " + std::to_string(lineno));
        out.push_back(std::move(s));
    }
    if (out.empty()) throw_invalid("load_samples: no records in " + path);
    return out;
}

std::vector<eigen_sample> sample_batch(int npar, int count, std::uint64_t seed0) {
    if (count < 1) throw_invalid("sample_batch: count must be positive");
    std::vector<eigen_sample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(sample_eigenangles(npar, seed0 + static_cast<std::uint64_t>(i)));
    return out;
}

}  // namespace ncorr
