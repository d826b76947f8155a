#pragma once

// Statistics of Riemann zero ordinates against random-matrix predictions.
//
// Two statistics are exposed. montgomery_statistic is the classical pair
// correlation sum for a 1-d test function whose Fourier transform lives in
// (-1, 1). zeta_n_correlation is the weighted n-tuple sum driven by the same
// (Phi, g) data as the unitary-group methods; its prediction reuses the
// main-term machinery with N replaced by a logarithmic density scale.
//
// Scale conventions. The "unfolded" pair statistic rescales each ordinate by
// the smooth counting function so consecutive zeros have unit mean spacing;
// the "global" variant applies the single factor log(T)/2pi from the classical
// statement. For the n-tuple sums "effective" scales each tuple by the local
// density log(mean height / 2pi)/2pi and predicts with the matching weighted
// mean logarithm, while "global" uses log(T) throughout. The global forms are
// exact restatements of the classical displays but carry O(1/log T) systematic
// offsets at reachable heights; the default modes are the ones that converge.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "test_functions.hpp"

namespace ncorr {

struct zero_dataset {
    std::vector<double> ordinates;  // strictly increasing, positive
    std::string source;

    std::int64_t count() const { return static_cast<std::int64_t>(ordinates.size()); }
    double max_height() const { return ordinates.empty() ? 0.0 : ordinates.back(); }
};

// Plain text, one ordinate per line, '#' starts a comment. Lines are sorted;
// malformed lines raise parse errors with the line number, ordinates closer
// than 1e-10 (or non-positive) raise order errors. At least two are required.
zero_dataset load_zeros(const std::string& path);

// 1-d correlation test function carried on both sides of the Fourier pair.
// fhat must be even with support inside [-support, support]; tail_cut bounds
// the region where f is non-negligible (0 lets the consumer pick one).
struct corr_profile {
    std::function<double(double)> f;
    std::function<double(double)> fhat;
    double support = 1.0;
    double tail_cut = 0.0;
};

// fhat(a) = amp * (1 - |a/beta|)+, f(u) = amp * beta * (sin(pi beta u)/(pi beta u))^2
corr_profile fejer_profile(double beta, double amp = 1.0);

// difference profile of a 2-variable Phi: f(u) = r(u), fhat = Phi on the
// antidiagonal, support s
corr_profile pair_profile_as_1d(const PhiSpec& phi);

enum class pair_mode { unfolded, global_scale };

struct montgomery_result {
    double value;
    double prediction;   // f(0) + fhat(0) - integral fhat(a)(1 - |a|) da
    double diagonal;     // equal-ordinate part of value
    std::int64_t pairs;  // ordered distinct pairs that entered the sum
    pair_mode mode;
};

// Pair sum over ordinates up to t_cut, diagonal included, normalized per zero
// (unfolded) or by T log T / 2pi (global). Rejects profiles with support > 1.
montgomery_result montgomery_statistic(const zero_dataset& zeros, const corr_profile& profile,
                                       double t_cut, pair_mode mode = pair_mode::unfolded);

enum class scale_mode { effective, global_scale };

struct zeta_corr_result {
    double value;
    double prediction;
    double logscale;      // density scale handed to the prediction
    std::int64_t tuples;  // distinct ordered tuples that entered
    scale_mode mode;
    bool conjectural;     // support beyond the proven range was forced through
};

// Weighted n-correlation of the dataset, n = phi.n <= 3, each slot damped by
// h_j(ordinate / t_cut). Supports q <= 1 unconditionally; wider support needs
// force_conjectural and flags the result. The prediction is the main-term
// formula at the logarithmic density scale reported in logscale.
zeta_corr_result zeta_n_correlation(const zero_dataset& zeros, const PhiSpec& phi,
                                    const std::vector<WeightSpec>& weights, double t_cut,
                                    scale_mode mode = scale_mode::effective,
                                    bool force_conjectural = false);

struct plot_row {
    double u_mid;
    double empirical;
    double gue;  // 1 - (sin pi u / pi u)^2
};

// histogram of unfolded gaps, density per zero per unit spacing
std::vector<plot_row> pair_histogram(const zero_dataset& zeros, double t_cut, double u_max,
                                     int bins);

}  // namespace ncorr
