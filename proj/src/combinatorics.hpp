#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ncorr {

// Index-level enumeration of the combinatorial structures the correlation
// formulas sum over.  Everything is visitor-based: no structure list is ever
// materialized, so memory stays flat while term counts grow combinatorially.
// Guards: enumerations over n indices require n <= max_enum_n and throw
// errc::size beyond that; these routines are meant for desk-scale runs.

inline constexpr int max_enum_n = 8;

struct partition3 {
    std::vector<int> k, l, m;  // disjoint, union = {0..n-1}
};

struct subset_pair {
    std::vector<int> s, t;  // |s| == |t|
};

// matched cross pairs (a_index, b_index); unmatched elements are singletons
struct pair_partition {
    std::vector<std::pair<int, int>> pairs;
};

// disjoint unordered index pairs (i, j) with i < j
using pair_system = std::vector<std::pair<int, int>>;

void for_each_partition3(int n, bool require_equal_kl,
                         const std::function<void(const partition3&)>& visit);

// Subset pairs (S, T) with |S| = |T|; sizes below max_size_exclusive.
// Pass max_size_exclusive < 0 for the untruncated enumeration.
void for_each_subset_pair(int na, int nb, int max_size_exclusive,
                          const std::function<void(const subset_pair&)>& visit);

// Partitions of p left elements and r right elements into cross doubletons
// and singletons.  Same-side doubletons are never produced: they carry a
// zero factor, so they are pruned at enumeration rather than evaluated.
void for_each_pair_partition(int p, int r,
                             const std::function<void(const pair_partition&)>& visit);

// Systems of r >= 1 disjoint pairs from {0..n-1}.
void for_each_pair_system(int n, const std::function<void(const pair_system&)>& visit);

void for_each_permutation(int k, const std::function<void(const std::vector<int>&)>& visit);

// Closed-form counts, used as cross-checks against the enumerators.
std::uint64_t count_partition3(int n, bool require_equal_kl);
std::uint64_t count_subset_pairs(int na, int nb, int max_size_exclusive);
std::uint64_t count_pair_partitions(int p, int r);
std::uint64_t count_pair_systems(int n);

std::uint64_t binomial(int n, int k);

}  // namespace ncorr
