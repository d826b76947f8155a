#pragma once

// Combinatorial-sum engine for the shifted moment kernel J*(A;B) and its
// truncations.  The full sum runs over subset pairs S in A, T in B with
// |S| = |T|, each stratum weighted by
//   exp(-N(sum S + sum T)) Z(S,T) Z(S-,T-) / (Zd(S,S-) Zd(T,T-))
// times a sum over partitions of the leftover shifts into singletons and
// cross doubletons with the H factors below.  Truncation level q keeps only
// strata with |S| = |T| < q.

#include <cstdint>
#include <string>
#include <vector>

#include "special_functions.hpp"

namespace ncorr {

struct jstar_input {
    shift_set a, b;
    int npar;                       // matrix size N in the exponential weights
    int q;                          // truncation level, q < 1 keeps every stratum
    double tol = default_pole_tol;  // pole rejection radius
};

// Up-front domain check: pairwise distinct shifts within each side and all
// cross sums clear of the z poles.  Throws errc::pole or errc::size.
void validate(const jstar_input& in);

enum class cell_kind { a_single, b_single, cross };

struct part_cell {
    cell_kind kind;
    cx alpha = 0.0;  // a-side member, set unless kind is b_single
    cx beta = 0.0;   // b-side member, set unless kind is a_single
};

cx h_factor(const shift_set& s, const shift_set& t, const part_cell& w,
            double tol = default_pole_tol);

// One (S, T) stratum evaluated on the leftover shifts
cx d_term(const shift_set& s, const shift_set& t, const shift_set& a_rest,
          const shift_set& b_rest, int npar, double tol = default_pole_tol);

cx jstar(const jstar_input& in);

// closed form for truncation level 1: permanent-like sum over matchings,
// zero unless |A| = |B|
cx jstar_q1(const shift_set& a, const shift_set& b, double tol = default_pole_tol);

// Sum of the strata with |S| = |T| = stratum_size only; in.q is ignored.
cx jstar_stratum(const jstar_input& in, int stratum_size);

// Regression check of the engine against independently hand-coded closed
// forms of the small worked cases, at random shifts with real parts in
// [0.1, 1].  Failures are report entries, not exceptions.
struct check_entry {
    std::string label;
    double rel_dev;
};

struct verify_report {
    double max_rel_dev = 0.0;
    bool pass = false;
    std::vector<check_entry> entries;
};

verify_report verify_worked_examples(int npar, int trials, double tol,
                                     std::uint64_t seed = 1);

}  // namespace ncorr
