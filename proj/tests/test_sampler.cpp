#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "empirical.hpp"
#include "numeric.hpp"
#include "sampler.hpp"

using namespace ncorr;

TEST_CASE("samples are canonical and deterministic") {
    eigen_sample s = sample_eigenangles(7, 123);
    CHECK(s.angles.size() == 7);
    CHECK(std::is_sorted(s.angles.begin(), s.angles.end()));
    for (double a : s.angles) {
        CHECK(a >= 0.0);
        CHECK(a < two_pi);
    }
    eigen_sample again = sample_eigenangles(7, 123);
    CHECK(s.angles == again.angles);
    eigen_sample other = sample_eigenangles(7, 124);
    CHECK(s.angles != other.angles);
}

TEST_CASE("one-dimensional marginal is uniform (KS)") {
    const int m = 10000;
    std::vector<double> xs;
    xs.reserve(m);
    for (int i = 0; i < m; ++i) xs.push_back(sample_eigenangles(1, 1000 + i).angles[0] / two_pi);
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    for (int i = 0; i < m; ++i) {
        double lo = static_cast<double>(i) / m, hi = static_cast<double>(i + 1) / m;
        d = std::max(d, std::max(std::abs(xs[i] - lo), std::abs(xs[i] - hi)));
    }
    // asymptotic Kolmogorov critical value at significance 1e-3
    CHECK(d < 1.9495 / std::sqrt(static_cast<double>(m)));
}

TEST_CASE("joint density at N = 2 (chi-squared against the exact cell masses)") {
    const int m = 100000, nb = 20;
    const double w = two_pi / nb;
    std::vector<double> counts(nb * nb, 0.0);
    std::mt19937_64 flip(5);
    for (int i = 0; i < m; ++i) {
        eigen_sample s = sample_eigenangles(2, 20000 + i);
        double t1 = s.angles[0], t2 = s.angles[1];
        if (flip() & 1) std::swap(t1, t2);  // undo the sort so the pair is exchangeable
        int b1 = std::min(nb - 1, static_cast<int>(t1 / w));
        int b2 = std::min(nb - 1, static_cast<int>(t2 / w));
        counts[b1 * nb + b2] += 1.0;
    }
    // exact mass of a cell under (1 - cos(t1 - t2)) / (2 pi)^2
    auto cross = [&](double a1, double b1, double a2, double b2) {
        return (std::cos(b1 - b2) - std::cos(b1 - a2)) - (std::cos(a1 - b2) - std::cos(a1 - a2));
    };
    double chi2 = 0.0, mass = 0.0;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            double p = (w * w - cross(i * w, (i + 1) * w, j * w, (j + 1) * w)) / (two_pi * two_pi);
            mass += p;
            double e = m * p;
            chi2 += (counts[i * nb + j] - e) * (counts[i * nb + j] - e) / e;
        }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(chi2 < gsl_cdf_chisq_Qinv(1e-3, nb * nb - 1));
}

TEST_CASE("consecutive spacings average to 2 pi / N") {
    const int m = 2000, npar = 5;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
        eigen_sample s = sample_eigenangles(npar, 400000 + i);
        for (int j = 0; j + 1 < npar; ++j) acc += s.angles[j + 1] - s.angles[j];
        acc += s.angles[0] + two_pi - s.angles[npar - 1];
    }
    CHECK(acc / (m * npar) == doctest::Approx(two_pi / npar).epsilon(1e-12));
}

TEST_CASE("eigenangle repulsion shows up in the minimum gap") {
    // crude but sensitive: Haar samples at N = 5 should rarely have tiny gaps
    int tiny = 0;
    for (int i = 0; i < 2000; ++i) {
        eigen_sample s = sample_eigenangles(5, 600000 + i);
        for (int j = 0; j + 1 < 5; ++j)
            if (s.angles[j + 1] - s.angles[j] < 0.01) ++tiny;
    }
    CHECK(tiny < 10);  // iid-uniform angles would give about 60
}

TEST_CASE("unnormalized joint density values") {
    CHECK(weyl_density({1.3, 1.3}) == 0.0);
    CHECK(weyl_density({0.0, pi}) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(weyl_density({0.0, two_pi / 3.0, 2.0 * two_pi / 3.0}) ==
          doctest::Approx(27.0).epsilon(1e-12));
}

double periodic_quad_check();

TEST_CASE("density normalization at N = 2 by periodic quadrature") {
    CHECK(periodic_quad_check() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("wrapped copies") {
    eigen_sample s = sample_eigenangles(2, 9);
    wrapped_angles w0 = wrap_angles(s, 0);
    CHECK(w0.angles == s.angles);
    wrapped_angles w1 = wrap_angles(s, 1);
    CHECK(w1.angles.size() == 6);
    CHECK(w1.angles[0] == doctest::Approx(s.angles[0] - two_pi));
    CHECK(w1.angles[1] == doctest::Approx(s.angles[1] - two_pi));
    CHECK(w1.angles[4] == doctest::Approx(s.angles[0] + two_pi));
    CHECK(std::is_sorted(w1.angles.begin(), w1.angles.end()));
    wrapped_angles w3 = wrap_angles(s, 3);
    CHECK(w3.angles.size() == (2 * 3 + 1) * 2);
}

TEST_CASE("cache files round-trip exactly") {
    std::vector<eigen_sample> batch = sample_batch(4, 10, 31);
    std::string path = "sampler_roundtrip_tmp.txt";
    save_samples(path, batch);
    std::vector<eigen_sample> back = load_samples(path);
    REQUIRE(back.size() == batch.size());
    for (size_t i = 0; i < batch.size(); ++i) {
        CHECK(back[i].npar == batch[i].npar);
        CHECK(back[i].seed == batch[i].seed);
        REQUIRE(back[i].angles.size() == batch[i].angles.size());
        for (size_t j = 0; j < batch[i].angles.size(); ++j)
            CHECK(back[i].angles[j] == batch[i].angles[j]);
    }
    std::remove(path.c_str());
}

TEST_CASE("global rotation leaves translation-invariant statistics alone") {
    std::vector<eigen_sample> batch = sample_batch(4, 50, 77);
    angle_fn f = [](const std::vector<double>& t) {
        return cx(std::cos(t[0] - t[1]), 0.0);
    };
    corr_result base = mc_distinct_tuples(batch, f, 2);
    std::vector<eigen_sample> rotated = batch;
    for (auto& s : rotated) {
        for (auto& a : s.angles) a = std::fmod(a + 1.234, two_pi);
        std::sort(s.angles.begin(), s.angles.end());
    }
    corr_result rot = mc_distinct_tuples(rotated, f, 2);
    CHECK(rot.value.real() == doctest::Approx(base.value.real()).epsilon(1e-11));
}

double periodic_quad_check() {
    // (1/(2 pi)^2) double integral of |e^{i a} - e^{i b}|^2 equals 2
    const int m = 8;
    double acc = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            acc += weyl_density({i * two_pi / m, j * two_pi / m});
    return acc * (two_pi / m) * (two_pi / m) / (two_pi * two_pi);
}
