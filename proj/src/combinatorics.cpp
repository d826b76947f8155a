#include "combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace ncorr {

static void guard_n(int n, const char* what) {
    if (n < 0) throw_invalid(std::string(what) + ": negative size");
    if (n > max_enum_n) {
        std::ostringstream os;
        os << what << ": size " << n << " exceeds enumeration guard " << max_enum_n;
        throw_size(os.str());
    }
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

void for_each_partition3(int n, bool require_equal_kl,
                         const std::function<void(const partition3&)>& visit) {
    guard_n(n, "for_each_partition3");
    std::vector<int> digit(n, 0);
    partition3 p;
    for (;;) {
        p.k.clear();
        p.l.clear();
        p.m.clear();
        for (int i = 0; i < n; ++i) {
            (digit[i] == 0 ? p.k : digit[i] == 1 ? p.l : p.m).push_back(i);
        }
        if (!require_equal_kl || p.k.size() == p.l.size()) visit(p);
        int i = 0;
        while (i < n && digit[i] == 2) digit[i++] = 0;
        if (i == n) break;
        ++digit[i];
    }
}

static void for_each_combination(int n, int k,
                                 const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void for_each_subset_pair(int na, int nb, int max_size_exclusive,
                          const std::function<void(const subset_pair&)>& visit) {
    guard_n(na, "for_each_subset_pair");
    guard_n(nb, "for_each_subset_pair");
    int cap = std::min(na, nb);
    if (max_size_exclusive >= 0) cap = std::min(cap, max_size_exclusive - 1);
    subset_pair sp;
    for (int s = 0; s <= cap; ++s) {
        if (s == 0) {
            sp.s.clear();
            sp.t.clear();
            visit(sp);
            continue;
        }
        for_each_combination(na, s, [&](const std::vector<int>& si) {
            for_each_combination(nb, s, [&](const std::vector<int>& ti) {
                sp.s = si;
                sp.t = ti;
                visit(sp);
            });
        });
    }
}

static void pair_partition_rec(int a, int p, int r, std::vector<char>& used_b,
                               pair_partition& acc,
                               const std::function<void(const pair_partition&)>& visit) {
    if (a == p) {
        visit(acc);
        return;
    }
    // element a stays a singleton
    pair_partition_rec(a + 1, p, r, used_b, acc, visit);
    // or pairs with an unused right element
    for (int b = 0; b < r; ++b) {
        if (used_b[b]) continue;
        used_b[b] = 1;
        acc.pairs.emplace_back(a, b);
        pair_partition_rec(a + 1, p, r, used_b, acc, visit);
        acc.pairs.pop_back();
        used_b[b] = 0;
    }
}

void for_each_pair_partition(int p, int r,
                             const std::function<void(const pair_partition&)>& visit) {
    guard_n(p, "for_each_pair_partition");
    guard_n(r, "for_each_pair_partition");
    std::vector<char> used_b(static_cast<size_t>(std::max(r, 1)), 0);
    pair_partition acc;
    pair_partition_rec(0, p, r, used_b, acc, visit);
}

static void pair_system_rec(int n, int first, std::vector<char>& used, pair_system& acc,
                            const std::function<void(const pair_system&)>& visit) {
    if (!acc.empty()) visit(acc);
    for (int i = first; i < n; ++i) {
        if (used[i]) continue;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[i] = used[j] = 1;
            acc.emplace_back(i, j);
            pair_system_rec(n, i + 1, used, acc, visit);
            acc.pop_back();
            used[i] = used[j] = 0;
        }
    }
}

void for_each_pair_system(int n, const std::function<void(const pair_system&)>& visit) {
    guard_n(n, "for_each_pair_system");
    std::vector<char> used(static_cast<size_t>(std::max(n, 1)), 0);
    pair_system acc;
    pair_system_rec(n, 0, used, acc, visit);
}

void for_each_permutation(int k, const std::function<void(const std::vector<int>&)>& visit) {
    guard_n(k, "for_each_permutation");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t count_partition3(int n, bool require_equal_kl) {
    guard_n(n, "count_partition3");
    if (!require_equal_kl) {
        std::uint64_t c = 1;
        for (int i = 0; i < n; ++i) c *= 3;
        return c;
    }
    std::uint64_t c = 0;
    for (int k = 0; 2 * k <= n; ++k) c += binomial(n, k) * binomial(n - k, k);
    return c;
}

std::uint64_t count_subset_pairs(int na, int nb, int max_size_exclusive) {
    guard_n(na, "count_subset_pairs");
    guard_n(nb, "count_subset_pairs");
    int cap = std::min(na, nb);
    if (max_size_exclusive >= 0) cap = std::min(cap, max_size_exclusive - 1);
    std::uint64_t c = 0;
    for (int s = 0; s <= cap; ++s) c += binomial(na, s) * binomial(nb, s);
    return c;
}

std::uint64_t count_pair_partitions(int p, int r) {
    guard_n(p, "count_pair_partitions");
    guard_n(r, "count_pair_partitions");
    std::uint64_t c = 0;
    for (int k = 0; k <= std::min(p, r); ++k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        c += binomial(p, k) * binomial(r, k) * f;
    }
    return c;
}

std::uint64_t count_pair_systems(int n) {
    guard_n(n, "count_pair_systems");
    std::uint64_t c = 0;
    for (int r = 1; 2 * r <= n; ++r) {
        // n! / ((n-2r)! 2^r r!)
        std::uint64_t v = 1;
        for (int i = n - 2 * r + 1; i <= n; ++i) v *= static_cast<std::uint64_t>(i);
        for (int i = 0; i < r; ++i) v /= 2;
        for (int i = 2; i <= r; ++i) v /= static_cast<std::uint64_t>(i);
        c += v;
    }
    return c;
}

}  // namespace ncorr
