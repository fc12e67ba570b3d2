#include "strucprof/structure.hpp"

#include <algorithm>
#include <numeric>

namespace strucprof {

bool RelStructure::has_tuple(int rel, const Tuple& t) const {
    if (signature.arities[rel] == 2 && !bitrows_.empty()) return adj(rel, t[0], t[1]);
    const auto& v = relations[rel];
    return std::binary_search(v.begin(), v.end(), t);
}

static void build_bitrows(RelStructure& s) {
    const int n = s.domain_size;
    s.words_ = (n + 63) / 64;
    s.bitrows_.assign(s.signature.size(), {});
    for (int r = 0; r < s.signature.size(); ++r) {
        if (s.signature.arities[r] != 2) continue;
        auto& rows = s.bitrows_[r];
        rows.assign(static_cast<std::size_t>(n) * s.words_, 0);
        for (const auto& t : s.relations[r])
            rows[static_cast<std::size_t>(t[0]) * s.words_ + (t[1] >> 6)] |=
                std::uint64_t{1} << (t[1] & 63);
    }
}

RelStructure make_structure(Signature signature, int domain_size,
                            std::vector<std::vector<Tuple>> relations) {
    if (signature.arities.empty()) throw ArityMismatch("signature must be non-empty");
    for (int m : signature.arities)
        if (m < 0) throw ArityMismatch("negative arity");
    if (domain_size < 0) throw VertexOutOfRange("negative domain size");
    relations.resize(signature.arities.size());
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const int m = signature.arities[r];
        for (const auto& t : relations[r]) {
            if (static_cast<int>(t.size()) != m)
                throw ArityMismatch("tuple length " + std::to_string(t.size()) +
                                    " in relation " + std::to_string(r) + " of arity " +
                                    std::to_string(m));
            for (int v : t)
                if (v < 0 || v >= domain_size)
                    throw VertexOutOfRange("vertex " + std::to_string(v) +
                                           " outside domain of size " +
                                           std::to_string(domain_size));
        }
        std::sort(relations[r].begin(), relations[r].end());
        relations[r].erase(std::unique(relations[r].begin(), relations[r].end()),
                           relations[r].end());
    }
    RelStructure s;
    s.signature = std::move(signature);
    s.domain_size = domain_size;
    s.relations = std::move(relations);
    build_bitrows(s);
    return s;
}

RelStructure make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Tuple> tuples;
    tuples.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        tuples.push_back({u, v});
        tuples.push_back({v, u});
    }
    return make_structure(Signature{{2}}, n, {std::move(tuples)});
}

bool is_graph(const RelStructure& s) {
    if (s.signature.arities != std::vector<int>{2}) return false;
    for (const auto& t : s.relations[0]) {
        if (t[0] == t[1]) return false;
        if (!s.has_tuple(0, {t[1], t[0]})) return false;
    }
    return true;
}

RelStructure restrict_to(const RelStructure& s, std::span<const int> a) {
    return restrict_with_map(s, a).first;
}

std::pair<RelStructure, std::vector<int>> restrict_with_map(const RelStructure& s,
                                                            std::span<const int> a) {
    std::vector<int> kept(a.begin(), a.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<int> to_new(s.domain_size, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= s.domain_size)
            throw VertexOutOfRange("restriction vertex outside domain");
        to_new[kept[i]] = static_cast<int>(i);
    }
    const int k = static_cast<int>(kept.size());
    std::vector<std::vector<Tuple>> rels(s.signature.size());
    for (int r = 0; r < s.signature.size(); ++r) {
        const int m = s.signature.arities[r];
        if (m == 2 && !s.bitrows_.empty()) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (s.adj(r, kept[i], kept[j])) rels[r].push_back({i, j});
        } else {
            for (const auto& t : s.relations[r]) {
                bool inside = true;
                for (int v : t)
                    if (to_new[v] < 0) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                Tuple img(m);
                for (int p = 0; p < m; ++p) img[p] = to_new[t[p]];
                rels[r].push_back(std::move(img));
            }
        }
    }
    return {make_structure(s.signature, k, std::move(rels)), std::move(kept)};
}

RelStructure apply_permutation(const RelStructure& s, const std::vector<int>& perm) {
    std::vector<std::vector<Tuple>> rels(s.signature.size());
    for (int r = 0; r < s.signature.size(); ++r) {
        rels[r].reserve(s.relations[r].size());
        for (const auto& t : s.relations[r]) {
            Tuple img(t.size());
            for (std::size_t p = 0; p < t.size(); ++p) img[p] = perm[t[p]];
            rels[r].push_back(std::move(img));
        }
    }
    return make_structure(s.signature, s.domain_size, std::move(rels));
}

RelStructure complement(const RelStructure& g) {
    if (!is_graph(g)) throw NotAGraph("complement requires a loopless undirected graph");
    std::vector<Tuple> tuples;
    for (int u = 0; u < g.domain_size; ++u)
        for (int v = 0; v < g.domain_size; ++v)
            if (u != v && !g.adj(0, u, v)) tuples.push_back({u, v});
    return make_structure(g.signature, g.domain_size, {std::move(tuples)});
}

static bool is_reflexive_linear_order(const RelStructure& s, int rel) {
    const int n = s.domain_size;
    for (int v = 0; v < n; ++v)
        if (!s.adj(rel, v, v)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool uv = s.adj(rel, u, v), vu = s.adj(rel, v, u);
            if (uv == vu) return false;  // totality + antisymmetry on distinct pairs
        }
    // transitivity
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (s.adj(rel, u, v) && s.adj(rel, v, w) && !s.adj(rel, u, w)) return false;
    return true;
}

static bool is_strict_linear_order(const RelStructure& s, int rel) {
    const int n = s.domain_size;
    for (int v = 0; v < n; ++v)
        if (s.adj(rel, v, v)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool uv = s.adj(rel, u, v), vu = s.adj(rel, v, u);
            if (uv == vu) return false;
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (s.adj(rel, u, v) && s.adj(rel, v, w) && !s.adj(rel, u, w)) return false;
    return true;
}

OrderedStructure make_ordered(RelStructure s) {
    if (s.signature.size() < 1 || s.signature.arities[0] != 2)
        throw NotOrdered("relation 0 must be binary");
    if (is_reflexive_linear_order(s, 0)) return {std::move(s), false};
    if (is_strict_linear_order(s, 0)) {
        auto rels = s.relations;
        for (int v = 0; v < s.domain_size; ++v) rels[0].push_back({v, v});
        return {make_structure(s.signature, s.domain_size, std::move(rels)), true};
    }
    throw NotOrdered("relation 0 is not a linear order");
}

std::vector<int> OrderedStructure::order_ranks() const {
    const int n = structure.domain_size;
    std::vector<int> rank(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && structure.adj(0, u, v)) ++rank[v];
    return rank;
}

}  // namespace strucprof
