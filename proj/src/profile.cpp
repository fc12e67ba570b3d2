#include "strucprof/profile.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strucprof/canonical.hpp"
#include "strucprof/subsets.hpp"

namespace strucprof {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) return threads;
    return omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

// Byte key of the induced labeled restriction: identical keys mean identical
// labeled structures, so one canonicalization covers all of them.
struct KeyBuilder {
    const RelStructure& s;
    std::vector<int> to_new;

    explicit KeyBuilder(const RelStructure& s_) : s(s_), to_new(s_.domain_size, -1) {}

    void build(const std::vector<int>& subset, std::string& out) {
        out.clear();
        const int k = static_cast<int>(subset.size());
        for (int i = 0; i < k; ++i) to_new[subset[i]] = i;
        for (int r = 0; r < s.signature.size(); ++r) {
            const int m = s.signature.arities[r];
            if (m == 2 && !s.bitrows_.empty()) {
                int bit = 0;
                char acc = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        if (s.adj(r, subset[i], subset[j])) acc |= static_cast<char>(1 << bit);
                        if (++bit == 8) {
                            out.push_back(acc);
                            acc = 0;
                            bit = 0;
                        }
                    }
                if (bit) out.push_back(acc);
            } else {
                std::size_t count = 0;
                for (const auto& t : s.relations[r]) {
                    bool inside = true;
                    for (int v : t)
                        if (to_new[v] < 0) {
                            inside = false;
                            break;
                        }
                    if (!inside) continue;
                    ++count;
                    for (int v : t) out.push_back(static_cast<char>(to_new[v]));
                }
                out.push_back(static_cast<char>(count & 0xff));
                out.push_back(static_cast<char>((count >> 8) & 0xff));
            }
            out.push_back('\x7f');
        }
        for (int i = 0; i < k; ++i) to_new[subset[i]] = -1;
    }
};

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view sv) const { return std::hash<std::string_view>{}(sv); }
    std::size_t operator()(const std::string& s) const {
        return std::hash<std::string_view>{}(s);
    }
};

using KeyMap = std::unordered_map<std::string, std::vector<int>, StringHash, std::equal_to<>>;

void scan_range(const RelStructure& s, int n, int first_lo, int first_hi, KeyMap& keys) {
    KeyBuilder builder(s);
    std::string buf;
    std::vector<int> subset(n);
    for (int first = first_lo; first < first_hi; ++first) {
        if (s.domain_size - first < n) break;
        subset[0] = first;
        for (int i = 1; i < n; ++i) subset[i] = first + i;
        while (true) {
            builder.build(subset, buf);
            if (keys.find(buf) == keys.end()) keys.emplace(buf, subset);
            // advance positions 1..n-1 only; position 0 is the chunk anchor
            int i = n - 1;
            while (i >= 1 && subset[i] == s.domain_size - (n - i)) --i;
            if (i < 1) break;
            ++subset[i];
            for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
}

}  // namespace

std::uint64_t profile_exact(const RelStructure& s, int n, int threads) {
    if (n < 0 || n > s.domain_size) throw RangeError("subset size outside 0..domain");
    if (n == 0) return 1;
    const int workers = std::min(resolve_threads(threads), std::max(1, s.domain_size - n + 1));
    KeyMap keys;
    if (workers <= 1) {
        scan_range(s, n, 0, s.domain_size - n + 1, keys);
    } else {
        std::vector<KeyMap> local(workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
        for (int first = 0; first <= s.domain_size - n; ++first) {
#ifdef _OPENMP
            KeyMap& mine = local[omp_get_thread_num()];
#else
            KeyMap& mine = local[0];
#endif
            scan_range(s, n, first, first + 1, mine);
        }
        for (auto& m : local)
            for (auto& [key, subset] : m)
                if (keys.find(key) == keys.end()) keys.emplace(key, subset);
    }
    std::vector<const std::vector<int>*> reps;
    reps.reserve(keys.size());
    for (const auto& [key, subset] : keys) reps.push_back(&subset);
    std::vector<CanonicalCode> codes(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
    for (std::size_t i = 0; i < reps.size(); ++i)
        codes[i] = canonical_code(restrict_to(s, *reps[i]));
    std::set<std::string> distinct;
    for (auto& c : codes) distinct.insert(std::move(c.bytes));
    return distinct.size();
}

std::uint64_t profile_exact_reference(const RelStructure& s, int n) {
    if (n < 0 || n > s.domain_size) throw RangeError("subset size outside 0..domain");
    std::set<CanonicalCode> distinct;
    for_each_subset_of_size(s.domain_size, n, [&](const std::vector<int>& subset) {
        distinct.insert(canonical_code(restrict_to(s, subset)));
    });
    return distinct.size();
}

ProfileTable profile_table(const FamilyGenerator& family, int n_max,
                           StabilizationSchedule schedule, int threads) {
    if (n_max < 0) throw RangeError("n_max must be non-negative");
    const int start = schedule.start > 0 ? schedule.start : n_max + 2;
    const int step = schedule.step > 0 ? schedule.step : 2;
    const int cap = schedule.cap > 0 ? schedule.cap : 4 * n_max + 8;
    auto values_at = [&](int l) {
        const RelStructure prefix = family.prefix(l);
        std::vector<std::uint64_t> values(static_cast<std::size_t>(n_max) + 1, 0);
        for (int n = 0; n <= n_max; ++n)
            values[n] = n <= prefix.domain_size ? profile_exact(prefix, n, threads) : 0;
        return values;
    };
    ProfileTable table;
    table.source = family.name();
    int l = start;
    std::vector<std::uint64_t> prev = values_at(l);
    while (l + step <= cap) {
        const int next = l + step;
        std::vector<std::uint64_t> cur = values_at(next);
        if (cur == prev) {
            table.values = std::move(cur);
            table.prefix_used = next;
            table.stabilized = true;
            return table;
        }
        prev = std::move(cur);
        l = next;
    }
    table.values = std::move(prev);
    table.prefix_used = l;
    table.stabilized = false;  // cap exceeded; reported, not fatal
    return table;
}

ProfileTable profile_table_of_structure(const RelStructure& s, std::string source,
                                        int n_max, int threads) {
    if (n_max < 0) throw RangeError("n_max must be non-negative");
    ProfileTable table;
    table.source = std::move(source);
    table.prefix_used = s.domain_size;
    table.stabilized = true;
    table.values.resize(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 0; n <= n_max; ++n)
        table.values[n] = n <= s.domain_size ? profile_exact(s, n, threads) : 0;
    return table;
}

std::vector<int> shape(const std::vector<int>& a, const Partition& p) {
    std::vector<int> counts(p.blocks.size(), 0);
    for (int v : a) {
        if (v < 0 || v >= p.domain_size()) throw VertexOutOfRange("shape vertex out of range");
        ++counts[p.block_of(v)];
    }
    return counts;
}

std::uint64_t profile_by_shapes(const RelStructure& s, const Partition& p, int n) {
    if (n < 0 || n > s.domain_size) throw RangeError("subset size outside 0..domain");
    if (p.domain_size() != s.domain_size) throw DomainMismatch("partition domain mismatch");
    if (!is_monomorphic_decomposition(s, p))
        throw NotMonomorphic("partition is not a monomorphic decomposition");
    if (n == 0) return 1;
    // one representative per realizable shape: the least vertices of each block
    std::set<CanonicalCode> distinct;
    const int nblocks = static_cast<int>(p.blocks.size());
    std::vector<int> take(nblocks, 0);
    std::vector<int> rep;
    auto emit = [&]() {
        rep.clear();
        for (int b = 0; b < nblocks; ++b)
            for (int i = 0; i < take[b]; ++i) rep.push_back(p.blocks[b][i]);
        std::sort(rep.begin(), rep.end());
        distinct.insert(canonical_code(restrict_to(s, rep)));
    };
    auto dfs = [&](auto&& self, int b, int remaining) -> void {
        if (b == nblocks) {
            if (remaining == 0) emit();
            return;
        }
        const int limit = std::min(remaining, static_cast<int>(p.blocks[b].size()));
        for (int t = 0; t <= limit; ++t) {
            take[b] = t;
            self(self, b + 1, remaining - t);
        }
        take[b] = 0;
    };
    dfs(dfs, 0, n);
    return distinct.size();
}

bool monotonicity_check(const RelStructure& s, int n, int p) {
    if (n < 0 || p < 0) throw RangeError("n and p must be non-negative");
    if (s.domain_size < 2 * n + p)
        throw TooSmall("monotonicity needs a domain of at least 2n + p elements");
    return profile_exact(s, n) <= profile_exact(s, n + p);
}

namespace {

// Minimal k <= 2 whose (k+1)-th differences vanish on the window, or -1.
int window_degree(const std::vector<std::uint64_t>& window) {
    std::vector<long long> d(window.begin(), window.end());
    for (int k = 0; k <= 2; ++k) {
        std::vector<long long> next(d.size() - 1);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) next[i] = d[i + 1] - d[i];
        if (next.empty()) return -1;
        if (std::all_of(next.begin(), next.end(), [](long long x) { return x == 0; })) return k;
        d = std::move(next);
    }
    return -1;
}

}  // namespace

GrowthVerdict classify_growth(const ProfileTable& table) {
    if (!table.stabilized) throw NotStabilized("table did not stabilize");
    const int n_max = table.n_max();
    if (n_max < 8) throw NotStabilized("classification needs n_max >= 8");
    // polynomial test: last 4 entries of each parity subsequence
    GrowthVerdict verdict;
    int degree = -1;
    int earliest = n_max;
    bool poly = true;
    for (int parity = 0; parity <= 1 && poly; ++parity) {
        std::vector<int> idx;
        for (int n = parity; n <= n_max; n += 2) idx.push_back(n);
        if (idx.size() > 4) idx.erase(idx.begin(), idx.end() - 4);
        std::vector<std::uint64_t> window;
        for (int n : idx) window.push_back(table.values[n]);
        const int d = window_degree(window);
        if (d < 0)
            poly = false;
        else {
            degree = std::max(degree, d);
            earliest = std::min(earliest, idx.front());
        }
    }
    if (poly) {
        verdict.kind = GrowthVerdict::Kind::EventuallyPolynomial;
        verdict.degree = degree;
        verdict.tail_begin = earliest;
        verdict.tail_end = n_max;
        return verdict;
    }
    // exponential test: last max(4, n_max/2) ratios all >= 1.2
    const int ratios = std::max(4, n_max / 2);
    verdict.tail_begin = n_max - ratios;
    verdict.tail_end = n_max;
    if (verdict.tail_begin >= 0) {
        double min_ratio = 0;
        bool ok = true;
        for (int n = verdict.tail_begin; n < n_max && ok; ++n) {
            if (table.values[n] == 0) {
                ok = false;
                break;
            }
            const double r = static_cast<double>(table.values[n + 1]) /
                             static_cast<double>(table.values[n]);
            if (r < 1.2) ok = false;
            min_ratio = (n == verdict.tail_begin) ? r : std::min(min_ratio, r);
        }
        if (ok) {
            verdict.kind = GrowthVerdict::Kind::ExponentialAtLeast;
            verdict.base = min_ratio;
            return verdict;
        }
    }
    verdict.kind = GrowthVerdict::Kind::Undetermined;
    return verdict;
}

std::string GrowthVerdict::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::EventuallyPolynomial:
            out << "eventually-polynomial(" << degree << ")";
            break;
        case Kind::ExponentialAtLeast: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", base);
            out << "exponential-at-least(" << buf << ")";
            break;
        }
        case Kind::Undetermined:
            out << "undetermined";
            break;
    }
    out << " tail=[" << tail_begin << "," << tail_end << "]";
    return out.str();
}

std::string table_to_csv(const ProfileTable& t) {
    std::ostringstream out;
    out << "n,count\n";
    for (std::size_t n = 0; n < t.values.size(); ++n) out << n << ',' << t.values[n] << '\n';
    return out.str();
}

std::string table_to_json(const ProfileTable& t) {
    std::ostringstream out;
    out << "{\"source\":\"" << t.source << "\",\"prefix_used\":" << t.prefix_used
        << ",\"stabilized\":" << (t.stabilized ? "true" : "false") << ",\"values\":[";
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        if (n) out << ',';
        out << t.values[n];
    }
    out << "]}";
    return out.str();
}

}  // namespace strucprof
