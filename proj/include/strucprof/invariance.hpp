#pragma once

#include <map>
#include <optional>
#include <vector>

#include "strucprof/families.hpp"
#include "strucprof/structure.hpp"

namespace strucprof {

// Map from increasing tuples over a chain 0..length-1 into a structure's
// domain; arity 0 encodes a constant.
struct ChainMap {
    int arity = 0;
    std::map<std::vector<int>, int> values;

    int at(const std::vector<int>& args) const;
};

// Triple (chain, structure, maps). Invariance: relation values among map
// images, and equality among map images, depend only on the order type of the
// argument tuples and the map identities.
struct InvariantTriple {
    int chain_length = 0;
    RelStructure structure;
    std::vector<ChainMap> maps;
};

bool is_invariant(const InvariantTriple& t);

// Restriction of the triple to a subset of the chain (relabeled 0..|a|-1).
InvariantTriple restrict_triple(const InvariantTriple& t, const std::vector<int>& a);

// Lexicographically least subset of the stated size whose restriction is
// invariant; finite chains need not contain one (nullopt).
std::optional<std::vector<int>> extract_invariant_subset(const InvariantTriple& t, int target);

// The defining maps of an almost-multichain structure: one constant per
// F-element, one unary map per K-column.
InvariantTriple amc_invariant_triple(const AMCTemplate& tmpl, int l);

}  // namespace strucprof
