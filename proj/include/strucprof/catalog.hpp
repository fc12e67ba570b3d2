#pragma once

#include <random>
#include <vector>

#include "strucprof/structure.hpp"

namespace strucprof {

// One representative per isomorphism class of loopless graphs on exactly n
// vertices, built by extending the (n-1)-vertex representatives with every
// neighborhood and deduplicating canonical codes. Deterministic order
// (sorted by code). Counts: 1, 1, 2, 4, 11, 34, 156, 1044 for n = 0..7.
std::vector<RelStructure> graph_representatives(int n);

// All labeled loopless graphs on n vertices (n small).
std::vector<RelStructure> all_labeled_graphs(int n);

// All labeled single-relation binary structures on n vertices (loops and
// asymmetry allowed; n very small).
std::vector<RelStructure> all_labeled_binary_structures(int n);

using Rng = std::mt19937_64;

RelStructure random_graph(Rng& rng, int n, double edge_probability = 0.5);
RelStructure random_binary_structure(Rng& rng, int n, int relation_count = 1);
// Random order (relation 0, reflexive) plus one random binary relation.
OrderedStructure random_ordered_binary(Rng& rng, int n);

}  // namespace strucprof
