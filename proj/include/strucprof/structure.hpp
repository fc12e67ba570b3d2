#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strucprof/errors.hpp"

namespace strucprof {

using Tuple = std::vector<int>;

struct Signature {
    std::vector<int> arities;

    int size() const { return static_cast<int>(arities.size()); }
    bool operator==(const Signature&) const = default;
};

// A finite relational structure on domain 0..domain_size-1. Relations are
// stored as sorted, duplicate-free tuple lists; arity-2 relations additionally
// keep adjacency bit rows for fast membership tests.
struct RelStructure {
    Signature signature;
    int domain_size = 0;
    std::vector<std::vector<Tuple>> relations;
    std::vector<std::string> labels;  // optional display names, ignored by all operations

    bool has_tuple(int rel, const Tuple& t) const;
    bool adj(int rel, int u, int v) const {  // arity-2 fast path
        return bitrows_[rel][static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
    }
    std::uint64_t relation_count(int rel) const { return relations[rel].size(); }

    bool operator==(const RelStructure& other) const {
        return signature == other.signature && domain_size == other.domain_size &&
               relations == other.relations;
    }

    // internal: rebuilt by make_structure
    std::vector<std::vector<std::uint64_t>> bitrows_;
    int words_ = 0;
};

RelStructure make_structure(Signature signature, int domain_size,
                            std::vector<std::vector<Tuple>> relations);

// Convenience builder for a loopless undirected graph (signature (2), both
// orientations of every edge).
RelStructure make_graph(int n, const std::vector<std::pair<int, int>>& edges);

bool is_graph(const RelStructure& s);  // single symmetric irreflexive binary relation

// Restriction to A (sorted set of vertices), relabeled 0..|A|-1 preserving
// the natural order of A.
RelStructure restrict_to(const RelStructure& s, std::span<const int> a);

// Same, returning the relabeling map: kept[i] is the original vertex of new i.
std::pair<RelStructure, std::vector<int>> restrict_with_map(const RelStructure& s,
                                                            std::span<const int> a);

// Image of s under a bijection perm (perm[v] = new index of v).
RelStructure apply_permutation(const RelStructure& s, const std::vector<int>& perm);

RelStructure complement(const RelStructure& g);

// An ordered structure: relation 0 is a linear order, stored reflexively.
// strict_input records whether the order arrived as strict (x<y) pairs.
struct OrderedStructure {
    RelStructure structure;
    bool strict_input = false;

    // rank[v] = position of v in the order, 0-based
    std::vector<int> order_ranks() const;
};

// Validates relation 0 as a linear order; accepts strict or reflexive input
// and normalizes to the reflexive convention. Throws NotOrdered.
OrderedStructure make_ordered(RelStructure s);

}  // namespace strucprof
