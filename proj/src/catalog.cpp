#include "strucprof/catalog.hpp"

#include <algorithm>
#include <map>

#include "strucprof/canonical.hpp"

namespace strucprof {

std::vector<RelStructure> graph_representatives(int n) {
    if (n < 0) throw RangeError("negative vertex count");
    std::vector<RelStructure> reps = {make_graph(0, {})};
    for (int k = 1; k <= n; ++k) {
        std::map<CanonicalCode, RelStructure> fresh;
        for (const auto& g : reps) {
            for (std::uint64_t nbhd = 0; nbhd < (std::uint64_t{1} << (k - 1)); ++nbhd) {
                std::vector<std::pair<int, int>> edges;
                for (const auto& t : g.relations[0])
                    if (t[0] < t[1]) edges.emplace_back(t[0], t[1]);
                for (int v = 0; v < k - 1; ++v)
                    if (nbhd >> v & 1) edges.emplace_back(v, k - 1);
                RelStructure ext = make_graph(k, edges);
                CanonicalCode code = canonical_code(ext);
                fresh.emplace(std::move(code), std::move(ext));
            }
        }
        reps.clear();
        for (auto& [code, g] : fresh) reps.push_back(std::move(g));
    }
    return reps;
}

std::vector<RelStructure> all_labeled_graphs(int n) {
    if (n < 0 || n > 6) throw RangeError("labeled graph enumeration limited to n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<RelStructure> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        out.push_back(make_graph(n, edges));
    }
    return out;
}

std::vector<RelStructure> all_labeled_binary_structures(int n) {
    if (n < 0 || n > 3) throw RangeError("labeled binary enumeration limited to n <= 3");
    std::vector<RelStructure> out;
    const int cells = n * n;
    out.reserve(std::size_t{1} << cells);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<Tuple> tuples;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (mask >> (u * n + v) & 1) tuples.push_back({u, v});
        out.push_back(make_structure(Signature{{2}}, n, {std::move(tuples)}));
    }
    return out;
}

RelStructure random_graph(Rng& rng, int n, double edge_probability) {
    std::bernoulli_distribution flip(edge_probability);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

RelStructure random_binary_structure(Rng& rng, int n, int relation_count) {
    std::bernoulli_distribution flip(0.5);
    Signature sig;
    std::vector<std::vector<Tuple>> rels(relation_count);
    for (int r = 0; r < relation_count; ++r) {
        sig.arities.push_back(2);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (flip(rng)) rels[r].push_back({u, v});
    }
    return make_structure(std::move(sig), n, std::move(rels));
}

OrderedStructure random_ordered_binary(Rng& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Tuple> order;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) order.push_back({perm[i], perm[j]});
    std::bernoulli_distribution flip(0.5);
    std::vector<Tuple> rel;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (flip(rng)) rel.push_back({u, v});
    return make_ordered(
        make_structure(Signature{{2, 2}}, n, {std::move(order), std::move(rel)}));
}

}  // namespace strucprof
