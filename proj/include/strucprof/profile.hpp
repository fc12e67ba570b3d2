#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strucprof/equivalence.hpp"
#include "strucprof/families.hpp"
#include "strucprof/structure.hpp"

namespace strucprof {

// Exact counts of isomorphism types of n-element induced substructures,
// n = 0..n_max, with stabilization metadata when built from a family.
struct ProfileTable {
    std::vector<std::uint64_t> values;
    std::string source;
    int prefix_used = 0;
    bool stabilized = false;

    int n_max() const { return static_cast<int>(values.size()) - 1; }
};

struct GrowthVerdict {
    enum class Kind { EventuallyPolynomial, ExponentialAtLeast, Undetermined };
    Kind kind = Kind::Undetermined;
    int degree = -1;      // EventuallyPolynomial
    double base = 0.0;    // ExponentialAtLeast, minimal tail ratio
    int tail_begin = 0, tail_end = 0;

    std::string to_string() const;
};

// Number of distinct canonical codes among all n-subsets' restrictions.
// The kernel deduplicates identical labeled restrictions before
// canonicalization and may split the subset scan across OpenMP workers;
// the result is independent of the worker count.
std::uint64_t profile_exact(const RelStructure& s, int n, int threads = 0);

// Straightforward serial reference: canonicalize every subset's restriction.
std::uint64_t profile_exact_reference(const RelStructure& s, int n);

struct StabilizationSchedule {
    int start = -1;  // default n_max + 2
    int step = 2;
    int cap = -1;    // default 4 * n_max + 8
};

// Profiles of growing prefixes until two consecutive prefixes agree on all
// n <= n_max; a cap overrun is reported via stabilized = false, not an error.
ProfileTable profile_table(const FamilyGenerator& family, int n_max,
                           StabilizationSchedule schedule = {}, int threads = 0);

ProfileTable profile_table_of_structure(const RelStructure& s, std::string source,
                                        int n_max, int threads = 0);

// Trace sizes of A against the blocks of p, in block order.
std::vector<int> shape(const std::vector<int>& a, const Partition& p);

// Profile via one representative subset per realizable shape vector; requires
// p to be a monomorphic decomposition of s (equal subsets shapes then induce
// isomorphic restrictions).
std::uint64_t profile_by_shapes(const RelStructure& s, const Partition& p, int n);

// profile(n) <= profile(n+p) whenever the domain has at least 2n+p elements.
bool monotonicity_check(const RelStructure& s, int n, int p);

// Desk-scale heuristic: fits finite differences on the even and odd
// subsequences separately (period-2 quasi-polynomials), else looks for a
// tail of ratios >= 1.2.
GrowthVerdict classify_growth(const ProfileTable& table);

std::string table_to_csv(const ProfileTable& t);
std::string table_to_json(const ProfileTable& t);

}  // namespace strucprof
