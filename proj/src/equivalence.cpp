#include "strucprof/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "strucprof/subsets.hpp"

namespace strucprof {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> v;
    while (mask) {
        v.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return v;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

void require_small_domain(const RelStructure& s) {
    if (s.domain_size > 64)
        throw RangeError("exchange-equivalence tests limited to 64 vertices");
}

void require_distinct_pair(const RelStructure& s, int x, int y) {
    if (x < 0 || y < 0 || x >= s.domain_size || y >= s.domain_size)
        throw VertexOutOfRange("vertex outside domain");
    if (x == y) throw OverlapError("x and y must be distinct");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition partition_from_roots(UnionFind& uf, int n, PartitionKind kind) {
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& b : by_root)
        if (!b.empty()) blocks.push_back(std::move(b));
    return Partition::of(std::move(blocks), kind, n);
}

}  // namespace

Partition Partition::of(std::vector<std::vector<int>> blocks, PartitionKind kind,
                        int domain_size) {
    Partition p;
    p.kind = kind;
    p.block_index_.assign(domain_size, -1);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) throw RangeError("empty partition block");
        for (int v : blocks[i]) {
            if (v < 0 || v >= domain_size) throw VertexOutOfRange("partition vertex out of range");
            if (p.block_index_[v] != -1) throw RangeError("partition blocks overlap");
            p.block_index_[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < domain_size; ++v)
        if (p.block_index_[v] == -1) throw RangeError("partition does not cover the domain");
    p.blocks = std::move(blocks);
    return p;
}

bool Partition::refines(const Partition& coarser) const {
    for (const auto& b : blocks) {
        const int target = coarser.block_of(b.front());
        for (int v : b)
            if (coarser.block_of(v) != target) return false;
    }
    return true;
}

std::string Partition::serialize() const {
    std::ostringstream out;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out << ',';
            out << b[i];
        }
        out << '\n';
    }
    return out.str();
}

EquivalenceTester::EquivalenceTester(RelStructure s) : s_(std::move(s)) {
    require_small_domain(s_);
}

const CanonicalCode& EquivalenceTester::code_of(std::uint64_t mask) {
    auto it = codes_.find(mask);
    if (it == codes_.end()) {
        auto verts = mask_to_vertices(mask);
        it = codes_.emplace(mask, canonical_code(restrict_to(s_, verts))).first;
    }
    return it->second;
}

bool EquivalenceTester::a_equivalent_mask(int x, int y, std::uint64_t a_mask) {
    const std::uint64_t mx = a_mask | (std::uint64_t{1} << x);
    const std::uint64_t my = a_mask | (std::uint64_t{1} << y);
    return code_of(mx) == code_of(my);
}

bool EquivalenceTester::a_equivalent(int x, int y, const std::vector<int>& a) {
    require_distinct_pair(s_, x, y);
    for (int v : a) {
        if (v < 0 || v >= s_.domain_size) throw VertexOutOfRange("background vertex out of range");
        if (v == x || v == y) throw OverlapError("background set meets {x, y}");
    }
    return a_equivalent_mask(x, y, vertices_to_mask(a));
}

bool EquivalenceTester::k_equivalent(int x, int y, int k) {
    require_distinct_pair(s_, x, y);
    if (k < 0) throw RangeError("k must be non-negative");
    std::vector<int> rest;
    for (int v = 0; v < s_.domain_size; ++v)
        if (v != x && v != y) rest.push_back(v);
    bool ok = true;
    for_each_subset_of_size(static_cast<int>(rest.size()), k, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << rest[i];
        if (!a_equivalent_mask(x, y, mask)) ok = false;
    });
    return ok;
}

bool EquivalenceTester::le_k_equivalent(int x, int y, int k) {
    for (int kk = 0; kk <= k; ++kk)
        if (!k_equivalent(x, y, kk)) return false;
    return true;
}

bool EquivalenceTester::fully_equivalent(int x, int y) {
    return le_k_equivalent(x, y, std::max(0, s_.domain_size - 2));
}

std::optional<EquivalenceWitness> EquivalenceTester::fully_equivalent_witness(int x, int y) {
    require_distinct_pair(s_, x, y);
    std::vector<int> rest;
    for (int v = 0; v < s_.domain_size; ++v)
        if (v != x && v != y) rest.push_back(v);
    std::optional<EquivalenceWitness> found;
    for (int k = 0; k <= static_cast<int>(rest.size()) && !found; ++k) {
        for_each_subset_of_size(static_cast<int>(rest.size()), k, [&](const std::vector<int>& idx) {
            if (found) return;
            std::vector<int> a;
            a.reserve(idx.size());
            for (int i : idx) a.push_back(rest[i]);
            if (!a_equivalent_mask(x, y, vertices_to_mask(a)))
                found = EquivalenceWitness{x, y, a, false};
        });
    }
    return found;
}

Partition EquivalenceTester::components() {
    const int n = s_.domain_size;
    UnionFind uf(n);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (uf.find(x) == uf.find(y)) continue;  // transitivity of the equivalence
            bool separated = false;
            for (const auto& w : known_witnesses_) {
                std::uint64_t mask = 0;
                bool usable = true;
                for (int v : w) {
                    if (v == x || v == y) {
                        usable = false;
                        break;
                    }
                    mask |= std::uint64_t{1} << v;
                }
                if (usable && !a_equivalent_mask(x, y, mask)) {
                    separated = true;
                    break;
                }
            }
            if (separated) continue;
            auto witness = fully_equivalent_witness(x, y);
            if (!witness)
                uf.unite(x, y);
            else
                known_witnesses_.push_back(witness->background);
        }
    }
    return partition_from_roots(uf, n, PartitionKind::Components);
}

bool a_equivalent(const RelStructure& s, int x, int y, const std::vector<int>& a) {
    return EquivalenceTester(s).a_equivalent(x, y, a);
}
bool k_equivalent(const RelStructure& s, int x, int y, int k) {
    return EquivalenceTester(s).k_equivalent(x, y, k);
}
bool le_k_equivalent(const RelStructure& s, int x, int y, int k) {
    return EquivalenceTester(s).le_k_equivalent(x, y, k);
}
bool fully_equivalent(const RelStructure& s, int x, int y) {
    return EquivalenceTester(s).fully_equivalent(x, y);
}
Partition components(const RelStructure& s) { return EquivalenceTester(s).components(); }

MonomorphyTester::MonomorphyTester(RelStructure s) : s_(std::move(s)) {
    require_small_domain(s_);
}

const CanonicalCode& MonomorphyTester::code_of(std::uint64_t mask) {
    auto it = codes_.find(mask);
    if (it == codes_.end()) {
        auto verts = mask_to_vertices(mask);
        it = codes_.emplace(mask, canonical_code(restrict_to(s_, verts))).first;
    }
    return it->second;
}

bool MonomorphyTester::is_part(const std::vector<int>& block, int size_cap) {
    const int n = s_.domain_size;
    if (size_cap < 0) size_cap = n;
    std::uint64_t block_mask = 0;
    for (int v : block) {
        if (v < 0 || v >= n) throw VertexOutOfRange("block vertex out of range");
        block_mask |= std::uint64_t{1} << v;
    }
    const auto inside = mask_to_vertices(block_mask);
    const auto outside = mask_to_vertices(~block_mask & ((n == 64 ? ~std::uint64_t{0}
                                                                  : (std::uint64_t{1} << n) - 1)));
    // group inside-subsets by size
    std::vector<std::vector<std::uint64_t>> by_size(inside.size() + 1);
    for_each_subset(inside, [&](const std::vector<int>& sub) {
        by_size[sub.size()].push_back(vertices_to_mask(sub));
    });
    bool ok = true;
    for_each_subset(outside, [&](const std::vector<int>& o) {
        if (!ok) return;
        const int osize = static_cast<int>(o.size());
        if (osize > size_cap) return;
        const std::uint64_t o_mask = vertices_to_mask(o);
        for (int s = 1; s <= static_cast<int>(inside.size()); ++s) {
            if (osize + s > size_cap) break;
            const CanonicalCode* first = nullptr;
            for (std::uint64_t sub : by_size[s]) {
                const CanonicalCode& c = code_of(o_mask | sub);
                if (!first)
                    first = &c;
                else if (!(*first == c)) {
                    ok = false;
                    return;
                }
            }
        }
    });
    return ok;
}

bool MonomorphyTester::is_decomposition(const Partition& p, int size_cap) {
    if (p.domain_size() != s_.domain_size) throw DomainMismatch("partition domain mismatch");
    for (const auto& b : p.blocks)
        if (!is_part(b, size_cap)) return false;
    return true;
}

bool is_monomorphic_part(const RelStructure& s, const std::vector<int>& block, int size_cap) {
    return MonomorphyTester(s).is_part(block, size_cap);
}
bool is_monomorphic_decomposition(const RelStructure& s, const Partition& p) {
    return MonomorphyTester(s).is_decomposition(p);
}

Partition interval_decomposition(const OrderedStructure& o) {
    const Partition comps = components(o.structure);
    const std::vector<int> rank = o.order_ranks();
    std::vector<std::vector<int>> blocks;
    for (const auto& cls : comps.blocks) {
        std::vector<int> by_rank = cls;
        std::sort(by_rank.begin(), by_rank.end(),
                  [&](int a, int b) { return rank[a] < rank[b]; });
        std::vector<int> run;
        for (int v : by_rank) {
            if (!run.empty() && rank[v] != rank[run.back()] + 1) {
                blocks.push_back(run);
                run.clear();
            }
            run.push_back(v);
        }
        if (!run.empty()) blocks.push_back(run);
    }
    return Partition::of(std::move(blocks), PartitionKind::Interval,
                         o.structure.domain_size);
}

bool k_hypomorphic(const RelStructure& r, const RelStructure& s, int k) {
    if (r.signature != s.signature || r.domain_size != s.domain_size)
        throw SignatureMismatch("k_hypomorphic requires equal signature and domain size");
    if (k < 0) throw RangeError("k must be non-negative");
    bool ok = true;
    for_each_subset_of_size(r.domain_size, k, [&](const std::vector<int>& a) {
        if (!ok) return;
        if (!is_isomorphic(restrict_to(r, a), restrict_to(s, a))) ok = false;
    });
    return ok;
}

std::pair<RelStructure, RelStructure> identify(const RelStructure& s, int x, int y) {
    require_distinct_pair(s, x, y);
    const int n = s.domain_size;
    auto build = [&](int keep_special, int drop) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (v != drop) verts.push_back(v);
        auto [restricted, kept] = restrict_with_map(s, verts);
        // move the special vertex to the shared slot z = n-2
        std::vector<int> perm(kept.size());
        int next = 0;
        int special_pos = -1;
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (kept[i] == keep_special) special_pos = static_cast<int>(i);
        for (std::size_t i = 0; i < kept.size(); ++i)
            perm[i] = (static_cast<int>(i) == special_pos)
                          ? static_cast<int>(kept.size()) - 1
                          : next++;
        return apply_permutation(restricted, perm);
    };
    return {build(x, y), build(y, x)};
}

bool p_monomorphic(const RelStructure& s, int p) {
    if (p < 0) throw RangeError("p must be non-negative");
    bool ok = true;
    const CanonicalCode* first = nullptr;
    CanonicalCode saved;
    for_each_subset_of_size(s.domain_size, p, [&](const std::vector<int>& a) {
        if (!ok) return;
        CanonicalCode c = canonical_code(restrict_to(s, a));
        if (!first) {
            saved = std::move(c);
            first = &saved;
        } else if (!(saved == c)) {
            ok = false;
        }
    });
    return ok;
}

namespace {

bool local_isomorphism(const RelStructure& s, const std::vector<int>& from,
                       const std::vector<int>& to) {
    // from/to aligned: the map sends from[i] to to[i]; induced comparison over
    // all tuples with coordinates in `from`
    const int k = static_cast<int>(from.size());
    for (int r = 0; r < s.signature.size(); ++r) {
        const int m = s.signature.arities[r];
        if (m == 0) continue;
        std::vector<int> idx(m, 0);
        while (true) {
            Tuple a(m), b(m);
            for (int p = 0; p < m; ++p) {
                a[p] = from[idx[p]];
                b[p] = to[idx[p]];
            }
            if (s.has_tuple(r, a) != s.has_tuple(r, b)) return false;
            int p = m - 1;
            while (p >= 0 && idx[p] == k - 1) idx[p--] = 0;
            if (p < 0) break;
            ++idx[p];
        }
    }
    return true;
}

}  // namespace

bool freely_interpreted_by(const RelStructure& s, const RelStructure& by, int size_cap) {
    if (s.domain_size != by.domain_size)
        throw DomainMismatch("freely_interpreted_by requires a common domain");
    const int n = s.domain_size;
    size_cap = std::min(size_cap, n);
    for (int k = 1; k <= size_cap; ++k) {
        bool ok = true;
        for_each_subset_of_size(n, k, [&](const std::vector<int>& a) {
            if (!ok) return;
            for_each_subset_of_size(n, k, [&](const std::vector<int>& b) {
                if (!ok) return;
                std::vector<int> image = b;
                std::sort(image.begin(), image.end());
                do {
                    if (local_isomorphism(by, a, image) && !local_isomorphism(s, a, image)) {
                        ok = false;
                        return;
                    }
                } while (std::next_permutation(image.begin(), image.end()));
            });
        });
        if (!ok) return false;
    }
    return true;
}

Partition autonomous_partition(const RelStructure& g) {
    if (!is_graph(g)) throw NotAGraph("autonomous_partition requires a loopless graph");
    const int n = g.domain_size;
    UnionFind uf(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool twin = true;
            for (int z = 0; z < n && twin; ++z) {
                if (z == x || z == y) continue;
                if (g.adj(0, x, z) != g.adj(0, y, z)) twin = false;
            }
            if (twin) uf.unite(x, y);
        }
    Partition p = partition_from_roots(uf, n, PartitionKind::Components);
    // the twin classes of a loopless graph are cliques or independent sets;
    // defend against silent misuse on malformed inputs
    for (const auto& b : p.blocks) {
        bool all = true, none = true;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                (g.adj(0, b[i], b[j]) ? none : all) = false;
        if (!all && !none) throw NotAGraph("twin classes are not cliques/independent sets");
    }
    return p;
}

int monomorphy_threshold(int m) {
    if (m < 1) throw RangeError("arity must be positive");
    if (m == 1) return 1;
    if (m == 2) return 3;
    return 2 * m - 2;
}

}  // namespace strucprof
