#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace strucprof {

using BigInt = boost::multiprecision::cpp_int;
using IntSequence = std::vector<BigInt>;

// Integer rational function num/den with exact power-series expansion.
// Normalization flips signs so the denominator's constant term is +1.
struct RationalSeries {
    std::vector<BigInt> numerator;
    std::vector<BigInt> denominator;

    // Throws NonUnitConstantTerm unless den[0] is +-1.
    static RationalSeries make(std::vector<BigInt> num, std::vector<BigInt> den);
};

// Coefficients 0..n_max of the expansion of s.
IntSequence series_expand(const RationalSeries& s, int n_max);

// w(n) = 1 for 0 <= n < h, then w(n) = w(n-1) + w(n-h); h = 1 doubles.
// Generating function 1/(1 - X - X^h).
IntSequence w_sequence(int h, int n_max);
RationalSeries w_series(int h);

// Largest root of X^h - X^(h-1) - 1 = 0, in (1,2), by bisection to tol.
// Governs the growth rate of w_sequence(h).
double growth_root(int h, double tol);

std::string sequence_to_string(const IntSequence& seq);  // comma-separated

}  // namespace strucprof
