#pragma once

#include <cstdint>
#include <vector>

namespace strucprof {

// Advances c (strictly increasing k-subset of 0..n-1) to the lexicographic
// successor; returns false after the last subset.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c = first_combination(k);
    if (k == 0) {
        fn(c);
        return;
    }
    do {
        fn(c);
    } while (next_combination(c, n));
}

// All subsets of the given pool, in mask order (pool must be small).
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, Fn&& fn) {
    const int m = static_cast<int>(pool.size());
    std::vector<int> sub;
    sub.reserve(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        sub.clear();
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) sub.push_back(pool[i]);
        fn(sub);
    }
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace strucprof
