#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace ncorr {

using cx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// Compensated (Kahan) accumulator.  Works for double and std::complex<double>;
// the correction term recovers low-order bits lost when terms differ wildly
// in magnitude, which happens routinely when near-cancelling subset terms are
// summed.
template <typename T>
class kahan_sum {
  public:
    void add(const T& x) {
        T y = x - c_;
        T t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    T value() const { return s_; }

  private:
    T s_{};
    T c_{};
};

// sum of a vector with compensation
template <typename T>
T ksum(const std::vector<T>& v) {
    kahan_sum<T> k;
    for (const T& x : v) k.add(x);
    return k.value();
}

}  // namespace ncorr
