#pragma once

// Haar-distributed U(N) eigenangle sampling and the small-N Weyl-measure
// density.  Sampling follows the standard recipe: orthonormalize a complex
// Gaussian matrix, fix the triangular factor's diagonal phases (plain QR is
// not Haar without this), then extract eigenvalue arguments.

#include <cstdint>
#include <string>
#include <vector>

namespace ncorr {

struct eigen_sample {
    int npar = 0;
    std::uint64_t seed = 0;
    std::vector<double> angles;  // sorted, each in [0, 2pi)
};

struct wrapped_angles {
    int npar = 0;
    int k_range = 0;
    std::vector<double> angles;  // sorted, (2 k_range + 1) npar values
};

eigen_sample sample_eigenangles(int npar, std::uint64_t seed);

// unnormalized joint density, product of squared eigenvalue gaps
double weyl_density(const std::vector<double>& angles);

// periodic copies theta + 2 pi k for |k| <= k_range
wrapped_angles wrap_angles(const eigen_sample& s, int k_range);

// cache format: header "NCORR-SAMPLES v1 N=<N>", then per sample one line
// with the seed followed by N angles at 17 significant digits
void save_samples(const std::string& path, const std::vector<eigen_sample>& samples);
std::vector<eigen_sample> load_samples(const std::string& path);

std::vector<eigen_sample> sample_batch(int npar, int count, std::uint64_t seed0);

}  // namespace ncorr
