#include "strucprof/series.hpp"

#include <cmath>
#include <sstream>

#include "strucprof/errors.hpp"

namespace strucprof {

RationalSeries RationalSeries::make(std::vector<BigInt> num, std::vector<BigInt> den) {
    while (!den.empty() && den.back() == 0) den.pop_back();
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (den.empty() || (den[0] != 1 && den[0] != -1))
        throw NonUnitConstantTerm("denominator constant term must be +-1");
    if (den[0] == -1)
        for (auto* poly : {&num, &den})
            for (auto& c : *poly) c = -c;
    if (num.empty()) num.push_back(0);
    return {std::move(num), std::move(den)};
}

IntSequence series_expand(const RationalSeries& s, int n_max) {
    IntSequence c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int k = 0; k <= n_max; ++k) {
        BigInt acc = k < static_cast<int>(s.numerator.size()) ? s.numerator[k] : BigInt(0);
        for (int j = 1; j < static_cast<int>(s.denominator.size()) && j <= k; ++j)
            acc -= s.denominator[j] * c[k - j];
        c[k] = acc;  // den[0] == 1 after normalization
    }
    return c;
}

IntSequence w_sequence(int h, int n_max) {
    if (h < 1) throw RangeError("w_sequence requires h >= 1");
    if (n_max < 0) throw RangeError("w_sequence requires n_max >= 0");
    IntSequence w(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n < h)
            w[n] = 1;
        else
            w[n] = w[n - 1] + w[n - h];
    }
    return w;
}

RationalSeries w_series(int h) {
    if (h < 1) throw RangeError("w_series requires h >= 1");
    std::vector<BigInt> den(static_cast<std::size_t>(h) + 1, 0);
    den[0] = 1;
    den[1] -= 1;
    den[h] -= 1;
    return RationalSeries::make({BigInt(1)}, std::move(den));
}

double growth_root(int h, double tol) {
    if (h < 2) throw RangeError("growth_root requires h >= 2");
    if (!(tol > 0)) throw RangeError("growth_root requires tol > 0");
    auto f = [h](double x) { return std::pow(x, h) - std::pow(x, h - 1) - 1.0; };
    double lo = 1.0, hi = 2.0;  // f(1) = -1, f(2) = 2^(h-1) - 1 > 0
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string sequence_to_string(const IntSequence& seq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out << ',';
        out << seq[i];
    }
    return out.str();
}

}  // namespace strucprof
