#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "jstar.hpp"

using namespace ncorr;

namespace {

double rel(cx a, cx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

std::mt19937_64 rng(4242);

cx rand_shift() {
    std::uniform_real_distribution<double> re(0.1, 1.0), im(-0.5, 0.5);
    return cx(re(rng), im(rng));
}

shift_set rand_set(int k) {
    shift_set s;
    for (int i = 0; i < k; ++i) s.push_back(rand_shift());
    return s;
}

}  // namespace

TEST_CASE("single-cell factors") {
    cx a = rand_shift(), b = rand_shift();
    shift_set none;
    part_cell cross{cell_kind::cross, a, b};
    CHECK(rel(h_factor(none, none, cross), log_z_deriv2(a + b)) < 1e-14);
    part_cell asing{cell_kind::a_single, a, 0.0};
    CHECK(std::abs(h_factor(none, none, asing)) == 0.0);
    // with S = {s0} a B-side singleton picks up -(z'/z)(b + s0)
    shift_set s0 = {rand_shift()};
    part_cell bsing{cell_kind::b_single, 0.0, b};
    CHECK(rel(h_factor(s0, none, bsing), -log_z_deriv(b + s0[0])) < 1e-13);
}

TEST_CASE("single-pair strata") {
    cx a = rand_shift(), b = rand_shift();
    shift_set none;
    // leftover pair with empty S, T: the second-derivative factor
    CHECK(rel(d_term(none, none, {a}, {b}, 12), log_z_deriv2(a + b)) < 1e-14);
    // everything absorbed into S, T: the bare exponential prefactor
    cx expd = std::exp(-12.0 * (a + b)) * z_eval(a + b) * z_eval(-a - b);
    CHECK(rel(d_term({a}, {b}, none, none, 12), expd) < 1e-13);
    // unmatchable leftovers of unequal parity vanish
    cx b2 = rand_shift();
    CHECK(std::abs(d_term(none, none, {a}, {b, b2}, 12)) < 1e-14);
}

TEST_CASE("smallest full kernel") {
    for (int i = 0; i < 50; ++i) {
        cx a = rand_shift(), b = rand_shift();
        jstar_input in{{a}, {b}, 9, 0};
        cx expect = std::exp(-9.0 * (a + b)) * z_eval(a + b) * z_eval(-a - b) +
                    log_z_deriv2(a + b);
        CHECK(rel(jstar(in), expect) < 1e-13);
    }
}

TEST_CASE("level-1 truncation in the unequal-size case is zero") {
    cx a = rand_shift(), b1 = rand_shift(), b2 = rand_shift();
    jstar_input in{{a}, {b1, b2}, 7, 1};
    CHECK(std::abs(jstar(in)) < 1e-13);
    CHECK(std::abs(jstar_q1({a}, {b1, b2})) == 0.0);
}

TEST_CASE("matching-sum closed form") {
    cx a = rand_shift(), b = rand_shift();
    CHECK(rel(jstar_q1({a}, {b}), log_z_deriv2(a + b)) < 1e-14);
    cx a1 = rand_shift(), a2 = rand_shift(), b1 = rand_shift(), b2 = rand_shift();
    cx expect = log_z_deriv2(a1 + b1) * log_z_deriv2(a2 + b2) +
                log_z_deriv2(a1 + b2) * log_z_deriv2(a2 + b1);
    CHECK(rel(jstar_q1({a1, a2}, {b1, b2}), expect) < 1e-13);
}

TEST_CASE("level-1 engine equals the closed form at random shifts") {
    for (int i = 0; i < 100; ++i) {
        int k = 1 + static_cast<int>(rng() % 3);
        shift_set a = rand_set(k), b = rand_set(k);
        jstar_input in{a, b, 5 + static_cast<int>(rng() % 16), 1};
        CHECK(rel(jstar(in), jstar_q1(a, b)) < 1e-12);
    }
}

TEST_CASE("permutation symmetry of the full sum") {
    shift_set a = rand_set(2), b = rand_set(3);
    jstar_input in{a, b, 8, 0};
    cx base = jstar(in);
    std::shuffle(in.a.begin(), in.a.end(), rng);
    std::shuffle(in.b.begin(), in.b.end(), rng);
    CHECK(rel(jstar(in), base) < 1e-12);
}

TEST_CASE("over-truncation reproduces the full sum") {
    shift_set a = rand_set(2), b = rand_set(2);
    jstar_input full{a, b, 6, 0};
    jstar_input over{a, b, 6, 5};
    CHECK(rel(jstar(over), jstar(full)) < 1e-15);
}

TEST_CASE("strata tile the full sum") {
    shift_set a = rand_set(2), b = rand_set(2);
    jstar_input in{a, b, 10, 0};
    cx total = 0.0;
    for (int s = 0; s <= 2; ++s) total += jstar_stratum(in, s);
    CHECK(rel(total, jstar(in)) < 1e-13);
    // stratum picking on the (1,1) case separates the two known terms
    cx x = rand_shift(), y = rand_shift();
    jstar_input small{{x}, {y}, 10, 0};
    CHECK(rel(jstar_stratum(small, 0), log_z_deriv2(x + y)) < 1e-13);
    cx expd = std::exp(-10.0 * (x + y)) * z_eval(x + y) * z_eval(-x - y);
    CHECK(rel(jstar_stratum(small, 1), expd) < 1e-13);
}

TEST_CASE("input validation") {
    cx a = rand_shift();
    jstar_input dup{{a, a}, rand_set(2), 5, 0};
    CHECK_THROWS_AS(validate(dup), error);
    jstar_input clash{{cx(0.3, 0.1)}, {cx(-0.3, -0.1)}, 5, 0};
    CHECK_THROWS_AS(validate(clash), error);  // cross sum on a pole
    jstar_input big{rand_set(8), rand_set(8), 5, 0};
    big.a.push_back(rand_shift());
    try {
        validate(big);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::size);
    }
}

TEST_CASE("term count equals the enumerator bookkeeping") {
    // evaluated strata per (S,T): pair-partition count on the leftovers
    std::uint64_t expected = 0;
    for_each_subset_pair(2, 2, -1, [&](const subset_pair& p) {
        expected += count_pair_partitions(2 - static_cast<int>(p.s.size()),
                                          2 - static_cast<int>(p.t.size()));
    });
    CHECK(expected == 1 * 7 + 4 * 2 + 1 * 1);  // sizes 0, 1, 2
}

TEST_CASE("worked-example regression harness") {
    for (int npar : {5, 20}) {
        verify_report rep = verify_worked_examples(npar, 40, 1e-10, 99);
        CHECK(rep.pass);
        CHECK(rep.max_rel_dev < 1e-10);
        CHECK(!rep.entries.empty());
    }
    // an absurd tolerance must fail and say where
    verify_report bad = verify_worked_examples(5, 5, 1e-18, 7);
    CHECK(!bad.pass);
}
