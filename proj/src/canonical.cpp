#include "strucprof/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace strucprof {
namespace {

// Encodes the structure relabeled by perm (perm[v] = new index). The byte
// layout is fixed: signature, domain size, then each relation's sorted tuple
// list. Equal bytes <=> equal labeled structures of equal signature.
std::string encode_under(const RelStructure& s, const std::vector<int>& perm) {
    std::string out;
    out.reserve(16 + 8 * s.relations.size());
    auto push16 = [&out](int x) {
        out.push_back(static_cast<char>(x & 0xff));
        out.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    push16(s.signature.size());
    for (int m : s.signature.arities) push16(m);
    push16(s.domain_size);
    std::vector<Tuple> buf;
    for (int r = 0; r < s.signature.size(); ++r) {
        const int m = s.signature.arities[r];
        buf.clear();
        buf.reserve(s.relations[r].size());
        for (const auto& t : s.relations[r]) {
            Tuple img(m);
            for (int p = 0; p < m; ++p) img[p] = perm[t[p]];
            buf.push_back(std::move(img));
        }
        std::sort(buf.begin(), buf.end());
        push16(static_cast<int>(buf.size()));
        for (const auto& t : buf)
            for (int v : t) out.push_back(static_cast<char>(v));
    }
    return out;
}

struct Refiner {
    const RelStructure& s;
    int n;
    // per vertex, list of (relation, tuple index) incidences
    std::vector<std::vector<std::pair<int, int>>> incident;

    explicit Refiner(const RelStructure& s_) : s(s_), n(s_.domain_size), incident(n) {
        for (int r = 0; r < s.signature.size(); ++r)
            for (int ti = 0; ti < static_cast<int>(s.relations[r].size()); ++ti) {
                const auto& t = s.relations[r][ti];
                int prev = -1;
                for (int v : t)
                    if (v != prev) {  // tuples are small; avoid duplicate entries for v,v
                        bool seen = false;
                        for (auto [rr, tt] : incident[v])
                            if (rr == r && tt == ti) seen = true;
                        if (!seen) incident[v].emplace_back(r, ti);
                        prev = v;
                    }
            }
    }

    // One vertex's signature under the current coloring: sorted list of
    // flattened (relation, coordinate colors, positions of the vertex).
    void vertex_signature(const std::vector<int>& colors, int v, std::vector<int>& out) const {
        thread_local std::vector<std::vector<int>> contribs;
        contribs.clear();
        for (auto [r, ti] : incident[v]) {
            const auto& t = s.relations[r][ti];
            std::vector<int> c;
            c.reserve(t.size() + 2);
            c.push_back(r);
            int posmask = 0;
            for (std::size_t p = 0; p < t.size(); ++p) {
                c.push_back(colors[t[p]]);
                if (t[p] == v) posmask |= 1 << p;
            }
            c.push_back(posmask);
            contribs.push_back(std::move(c));
        }
        std::sort(contribs.begin(), contribs.end());
        out.clear();
        for (const auto& c : contribs) {
            out.insert(out.end(), c.begin(), c.end());
            out.push_back(-1);
        }
    }

    // Refines to the coarsest stable coloring at least as fine as the input.
    void refine(std::vector<int>& colors) const {
        if (n == 0) return;
        int num_colors = 1 + *std::max_element(colors.begin(), colors.end());
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                keyed[v].second = v;
                auto& key = keyed[v].first;
                key.clear();
                key.push_back(colors[v]);
                std::vector<int> sig;
                vertex_signature(colors, v, sig);
                key.insert(key.end(), sig.begin(), sig.end());
            }
            std::sort(keyed.begin(), keyed.end());
            int next = 0;
            std::vector<int> fresh(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) ++next;
                fresh[keyed[i].second] = next;
            }
            if (next + 1 == num_colors) {
                colors = std::move(fresh);
                return;
            }
            num_colors = next + 1;
            colors = std::move(fresh);
        }
    }
};

// True when tuple membership in every relation is a function of the
// coordinate colors and the coordinate equality pattern; any color-respecting
// relabeling then yields the same code.
bool pattern_determined(const RelStructure& s, const std::vector<int>& colors) {
    const int n = s.domain_size;
    for (int r = 0; r < s.signature.size(); ++r) {
        const int m = s.signature.arities[r];
        if (m == 0) continue;
        double space = 1;
        for (int p = 0; p < m; ++p) space *= n;
        if (space > 250000) return false;  // shortcut not worth the scan
        std::map<std::vector<int>, bool> table;
        Tuple t(m, 0);
        std::vector<int> key(2 * m);
        while (true) {
            for (int p = 0; p < m; ++p) {
                key[p] = colors[t[p]];
                int eq = p;
                for (int q = 0; q < p; ++q)
                    if (t[q] == t[p]) {
                        eq = q;
                        break;
                    }
                key[m + p] = eq;
            }
            const bool member = s.has_tuple(r, t);
            auto [it, inserted] = table.emplace(key, member);
            if (!inserted && it->second != member) return false;
            int p = m - 1;
            while (p >= 0 && t[p] == n - 1) t[p--] = 0;
            if (p < 0) break;
            ++t[p];
        }
    }
    return true;
}

struct CanonSearch {
    const RelStructure& s;
    const Refiner& refiner;
    std::optional<std::string> best;

    void leaf(const std::vector<int>& colors) {
        // colors form a permutation (or a pattern-determined completion):
        // order vertices by (color, index)
        const int n = s.domain_size;
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return colors[a] < colors[b]; });
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[order[i]] = i;
        std::string code = encode_under(s, perm);
        if (!best || code < *best) best = std::move(code);
    }

    void run(std::vector<int> colors) {
        refiner.refine(colors);
        const int n = s.domain_size;
        // pick the smallest non-singleton cell, lowest color on ties
        std::vector<int> cell_size(n, 0);
        for (int v = 0; v < n; ++v) ++cell_size[colors[v]];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
        if (target < 0) {
            leaf(colors);
            return;
        }
        if (pattern_determined(s, colors)) {
            leaf(colors);
            return;
        }
        const int fresh = 1 + *std::max_element(colors.begin(), colors.end());
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> branch = colors;
            branch[v] = fresh;
            run(std::move(branch));
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const RelStructure& s) {
    if (s.domain_size > 200) throw RangeError("canonical form limited to 200 vertices");
    if (s.domain_size == 0) {
        return {encode_under(s, {})};
    }
    Refiner refiner(s);
    CanonSearch search{s, refiner, std::nullopt};
    search.run(std::vector<int>(s.domain_size, 0));
    return {std::move(*search.best)};
}

bool is_isomorphic(const RelStructure& r, const RelStructure& s) {
    if (r.signature != s.signature || r.domain_size != s.domain_size) return false;
    for (int i = 0; i < r.signature.size(); ++i)
        if (r.relations[i].size() != s.relations[i].size()) return false;
    return canonical_code(r) == canonical_code(s);
}

namespace {

struct EmbedSearch {
    const RelStructure& r;
    const RelStructure& s;
    std::vector<int> order;         // pattern vertices, most-constrained first
    std::vector<int> map;           // r-vertex -> s-vertex or -1
    std::vector<char> used;         // s-vertex taken
    std::vector<std::vector<std::pair<int, int>>> r_incident, s_incident;

    EmbedSearch(const RelStructure& r_, const RelStructure& s_)
        : r(r_), s(s_), map(r_.domain_size, -1), used(s_.domain_size, 0) {
        auto incidences = [](const RelStructure& x) {
            std::vector<std::vector<std::pair<int, int>>> inc(x.domain_size);
            for (int rel = 0; rel < x.signature.size(); ++rel)
                for (int ti = 0; ti < static_cast<int>(x.relations[rel].size()); ++ti) {
                    int prev = -1;
                    for (int v : x.relations[rel][ti])
                        if (v != prev) {
                            if (inc[v].empty() || inc[v].back() != std::make_pair(rel, ti))
                                inc[v].emplace_back(rel, ti);
                            prev = v;
                        }
                }
            return inc;
        };
        r_incident = incidences(r);
        s_incident = incidences(s);
        order.resize(r.domain_size);
        for (int v = 0; v < r.domain_size; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return r_incident[a].size() > r_incident[b].size();
        });
    }

    // Checks consistency of mapping u -> v against already-mapped vertices:
    // every r-tuple over mapped vertices must land in s, and the tuple counts
    // over the mapped sets must agree (induced embedding).
    bool consistent(int u, int v) {
        map[u] = v;
        int r_count = 0;
        for (auto [rel, ti] : r_incident[u]) {
            const auto& t = r.relations[rel][ti];
            bool ready = true;
            for (int w : t)
                if (map[w] < 0) {
                    ready = false;
                    break;
                }
            if (!ready) continue;
            ++r_count;
            Tuple img(t.size());
            for (std::size_t p = 0; p < t.size(); ++p) img[p] = map[t[p]];
            if (!s.has_tuple(rel, img)) {
                map[u] = -1;
                return false;
            }
        }
        // count s-tuples lying inside the image and touching v
        std::vector<char> in_image(s.domain_size, 0);
        for (int w = 0; w < r.domain_size; ++w)
            if (map[w] >= 0) in_image[map[w]] = 1;
        int s_count = 0;
        for (auto [rel, ti] : s_incident[v]) {
            bool inside = true;
            for (int w : s.relations[rel][ti])
                if (!in_image[w]) {
                    inside = false;
                    break;
                }
            if (inside) ++s_count;
        }
        map[u] = -1;
        return r_count == s_count;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        for (int v = 0; v < s.domain_size; ++v) {
            if (used[v]) continue;
            if (!consistent(u, v)) continue;
            map[u] = v;
            used[v] = 1;
            if (search(depth + 1)) return true;
            map[u] = -1;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> embeds(const RelStructure& r, const RelStructure& s) {
    if (r.signature != s.signature || r.domain_size > s.domain_size) return std::nullopt;
    EmbedSearch search(r, s);
    if (!search.search(0)) return std::nullopt;
    return search.map;
}

}  // namespace strucprof
